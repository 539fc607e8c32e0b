#include "fusionbench/exact_factorization.hpp"

#include <algorithm>

#include "fusionbench/errors.hpp"
#include "fusionbench/grading.hpp"

namespace fusionbench {

FactorizationCheck check_exact_factorization(const FusionRing& R, const std::vector<int>& A,
                                             const std::vector<int>& C) {
    FactorizationCheck out;
    Report& rep = out.report;
    rep.merge(check_subring(R, A), "A");
    rep.merge(check_subring(R, C), "C");
    if (!rep.pass) return out;

    Factorization f{R, Subring{A}, Subring{C}, {}, {}};
    std::sort(f.A.indices.begin(), f.A.indices.end());
    std::sort(f.C.indices.begin(), f.C.indices.end());
    const int na = f.a_size(), nc = f.c_size();

    auto fill = [&](bool a_first, std::vector<int>& table, const char* what) {
        std::string basic_w, bij_w;
        std::vector<int> seen(R.rank(), -1);
        table.assign(na * nc, -1);
        for (int p = 0; p < na; ++p)
            for (int q = 0; q < nc; ++q) {
                int a = f.A.indices[p], c = f.C.indices[q];
                RingElement x = a_first ? multiply_basis(R, a, c) : multiply_basis(R, c, a);
                auto b = x.as_basis();
                std::string pair = a_first ? R.label(a) + "·" + R.label(c) : R.label(c) + "·" + R.label(a);
                if (!b) {
                    if (basic_w.empty()) basic_w = pair + " = " + x.to_string(R);
                    continue;
                }
                table[p * nc + q] = *b;
                if (seen[*b] != -1 && bij_w.empty())
                    bij_w = pair + " collides at " + R.label(*b);
                seen[*b] = p * nc + q;
            }
        if (bij_w.empty() && basic_w.empty())
            for (int b = 0; b < R.rank(); ++b)
                if (seen[b] == -1) {
                    bij_w = R.label(b) + " is not a product";
                    break;
                }
        rep.add(std::string(what) + "_basic", basic_w.empty(), basic_w);
        rep.add(std::string(what) + "_bijective", bij_w.empty(), bij_w);
    };
    fill(true, f.ac, "products_ac");
    fill(false, f.ca, "products_ca");
    if (rep.pass) out.factorization = std::move(f);
    return out;
}

namespace {

struct Decomp {
    std::vector<int> p, q;  // basis index -> (A position, C position) via ac
};

Decomp decompose(const Factorization& f) {
    Decomp d{std::vector<int>(f.R.rank(), -1), std::vector<int>(f.R.rank(), -1)};
    for (int p = 0; p < f.a_size(); ++p)
        for (int q = 0; q < f.c_size(); ++q) {
            int b = f.product(p, q);
            d.p[b] = p;
            d.q[b] = q;
        }
    return d;
}

std::vector<int> positions(const FusionRing& R, const Subring& S) {
    std::vector<int> pos(R.rank(), -1);
    for (int t = 0; t < S.size(); ++t) pos[S.indices[t]] = t;
    return pos;
}

}  // namespace

RecoveredActions recover_actions(const Factorization& f) {
    const int na = f.a_size(), nc = f.c_size();
    const Decomp d = decompose(f);
    const FusionRing& R = f.R;
    RecoveredActions out{std::vector<std::vector<int>>(nc, std::vector<int>(na)),
                         std::vector<std::vector<int>>(na, std::vector<int>(nc))};
    for (int q = 0; q < nc; ++q)
        for (int p = 0; p < na; ++p) {
            int b = f.ca[p * nc + q];
            out.ell[q][p] = d.p[b];
            out.r[p][q] = d.q[b];
        }

    const std::vector<int> posA = positions(R, f.A), posC = positions(R, f.C);
    const int unitA = posA[R.unit()], unitC = posC[R.unit()];
    for (int p = 0; p < na; ++p)
        if (out.ell[unitC][p] != p) throw InternalError("ℓ_1 is not the identity");
    for (int q = 0; q < nc; ++q)
        if (out.r[unitA][q] != q) throw InternalError("r_1 is not the identity");

    // ℓ_{c3} = ℓ_{c1}∘ℓ_{c2} whenever c3 occurs in c1 c2; r_{a3} = r_{a2}∘r_{a1}
    // whenever a3 occurs in a1 a2.
    for (int q1 = 0; q1 < nc; ++q1)
        for (int q2 = 0; q2 < nc; ++q2)
            for (const auto& t : R.product(f.C.indices[q1], f.C.indices[q2])) {
                int q3 = posC[t.k];
                for (int p = 0; p < na; ++p)
                    if (out.ell[q3][p] != out.ell[q1][out.ell[q2][p]])
                        throw InternalError("ℓ is not multiplicative at c=" + R.label(t.k));
            }
    for (int p1 = 0; p1 < na; ++p1)
        for (int p2 = 0; p2 < na; ++p2)
            for (const auto& t : R.product(f.A.indices[p1], f.A.indices[p2])) {
                int p3 = posA[t.k];
                for (int q = 0; q < nc; ++q)
                    if (out.r[p3][q] != out.r[p2][out.r[p1][q]])
                        throw InternalError("r is not multiplicative at a=" + R.label(t.k));
            }

    const FusionRing Ar = restrict_ring(R, f.A), Cr = restrict_ring(R, f.C);
    for (int q : adjoint_subring(Cr).indices)
        for (int p = 0; p < na; ++p)
            if (out.ell[q][p] != p) throw InternalError("ℓ_c is not the identity for adjoint c");
    for (int p : adjoint_subring(Ar).indices)
        for (int q = 0; q < nc; ++q)
            if (out.r[p][q] != q) throw InternalError("r_a is not the identity for adjoint a");
    return out;
}

namespace {

// Subrings of a bicrossed ring carry labels "a⋈1" and "1⋈c". Drop the
// constant side so the pieces are valid inputs again; any other separator
// occurrence becomes '|'.
FusionRing plain_labels(const FusionRing& S, bool keep_left) {
    const std::string sep = kPairSeparator;
    std::vector<std::string> labels;
    std::optional<std::string> dropped;
    bool strip = true;
    for (const auto& l : S.labels()) {
        auto at = l.find(sep);
        if (at == std::string::npos || l.find(sep, at + 1) != std::string::npos) {
            strip = false;
            break;
        }
        std::string keep = keep_left ? l.substr(0, at) : l.substr(at + sep.size());
        std::string drop = keep_left ? l.substr(at + sep.size()) : l.substr(0, at);
        if (dropped && *dropped != drop) {
            strip = false;
            break;
        }
        dropped = drop;
        labels.push_back(keep);
    }
    if (!strip) {
        labels.clear();
        for (std::string l : S.labels()) {
            for (auto at = l.find(sep); at != std::string::npos; at = l.find(sep, at + 1)) l.replace(at, sep.size(), "|");
            labels.push_back(l);
        }
    }
    if (labels == S.labels()) return S;
    return FusionRing(std::move(labels), S.unit(), S.duals(), S.constants());
}

}  // namespace

RingMatchedPair canonical_matched_pair(const Factorization& f) {
    const RecoveredActions act = recover_actions(f);
    FusionRing A = plain_labels(restrict_ring(f.R, f.A), true);
    FusionRing C = plain_labels(restrict_ring(f.R, f.C), false);
    const UniversalGrading UA = universal_grading(A);
    const UniversalGrading UC = universal_grading(C);
    const FiniteGroup& H = UA.group;
    const FiniteGroup& K = UC.group;
    const int na = A.rank(), nc = C.rank();

    RingMatchedPair m{A, C, UA.degree, UC.degree, GroupMatchedPair{H, K, {}, {}}, {}, {}};
    m.act_l.assign(K.order(), std::vector<int>(na, -1));
    m.act_r.assign(H.order(), std::vector<int>(nc, -1));
    for (int q = 0; q < nc; ++q) {
        auto& row = m.act_l[UC.degree[q]];
        if (row[0] == -1) row = act.ell[q];
        else if (row != act.ell[q])
            throw InternalError("ℓ_c depends on more than the degree of c=" + C.label(q));
    }
    for (int p = 0; p < na; ++p) {
        auto& row = m.act_r[UA.degree[p]];
        if (row[0] == -1) row = act.r[p];
        else if (row != act.r[p])
            throw InternalError("r_a depends on more than the degree of a=" + A.label(p));
    }

    // k▶h = deg(k▷a) and k◀h = deg(c◁h) for any a of degree h, c of degree k.
    auto& gl = m.gmp.act_l;
    auto& gr = m.gmp.act_r;
    gl.assign(K.order(), std::vector<int>(H.order(), -1));
    gr.assign(K.order(), std::vector<int>(H.order(), -1));
    for (int q = 0; q < nc; ++q)
        for (int p = 0; p < na; ++p) {
            int k = UC.degree[q], h = UA.degree[p];
            int lv = UA.degree[act.ell[q][p]];
            int rv = UC.degree[act.r[p][q]];
            if (gl[k][h] == -1) gl[k][h] = lv;
            else if (gl[k][h] != lv) throw InternalError("▶ is not well defined on degrees");
            if (gr[k][h] == -1) gr[k][h] = rv;
            else if (gr[k][h] != rv) throw InternalError("◀ is not well defined on degrees");
        }

    Report rep = validate_ring_matched_pair(m);
    if (!rep.pass) throw InternalError("canonical matched pair fails validation: " + rep.first_failure());
    return m;
}

Report certify_theorem_iso(const Factorization& f) {
    const RingMatchedPair m = canonical_matched_pair(f);
    const FusionRing B = ring_bicrossed(m);
    const FusionRing& R = f.R;
    Report rep;
    // ψ(a⋈c) = a·c; B's index a*nc + c matches the ac table position.
    std::vector<int> psi(B.rank());
    for (int x = 0; x < B.rank(); ++x) psi[x] = f.ac[x];
    std::vector<int> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    bool bij = B.rank() == R.rank() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.add("psi_bijective", bij, bij ? "" : "ψ is not a bijection");
    if (!bij) return rep;

    rep.add("psi_unit", psi[B.unit()] == R.unit(), psi[B.unit()] == R.unit() ? "" : "ψ(1⋈1) != 1");
    std::string w;
    for (int x = 0; x < B.rank() && w.empty(); ++x)
        if (psi[B.dual(x)] != R.dual(psi[x])) w = "ψ(" + B.label(x) + "*) != ψ(" + B.label(x) + ")*";
    rep.add("psi_dual", w.empty(), w);

    w.clear();
    const int n = B.rank();
    for (int x = 0; x < n && w.empty(); ++x)
        for (int y = 0; y < n && w.empty(); ++y) {
            RingElement lhs;
            for (const auto& t : B.product(x, y)) lhs.add(psi[t.k], static_cast<std::int64_t>(t.v));
            RingElement rhs = multiply_basis(R, psi[x], psi[y]);
            if (!(lhs == rhs))
                w = "N differs at (" + B.label(x) + "," + B.label(y) + "): " + lhs.to_string(R) +
                    " vs " + rhs.to_string(R);
        }
    rep.add("psi_structure_constants", w.empty(), w);
    return rep;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bicrossed_split(const FusionRing& R) {
    const std::string sep = kPairSeparator;
    auto split = [&](const std::string& l) -> std::optional<std::pair<std::string, std::string>> {
        auto at = l.find(sep);
        if (at == std::string::npos || l.find(sep, at + 1) != std::string::npos) return std::nullopt;
        return std::make_pair(l.substr(0, at), l.substr(at + sep.size()));
    };
    auto u = split(R.label(R.unit()));
    if (!u) return std::nullopt;
    std::vector<int> A, C;
    for (int i = 0; i < R.rank(); ++i) {
        auto parts = split(R.label(i));
        if (!parts) return std::nullopt;
        if (parts->second == u->second) A.push_back(i);
        if (parts->first == u->first) C.push_back(i);
    }
    return std::make_pair(A, C);
}

}  // namespace fusionbench
