#include "fusionbench/matched_pair.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fusionbench/errors.hpp"

namespace fusionbench {

GroupMatchedPair GroupMatchedPair::trivial(const FiniteGroup& H, const FiniteGroup& K) {
    GroupMatchedPair p{H, K, {}, {}};
    p.act_l.assign(K.order(), std::vector<int>(H.order()));
    p.act_r.assign(K.order(), std::vector<int>(H.order()));
    for (int k = 0; k < K.order(); ++k)
        for (int h = 0; h < H.order(); ++h) {
            p.act_l[k][h] = h;
            p.act_r[k][h] = k;
        }
    return p;
}

namespace {

bool table_ok(const std::vector<std::vector<int>>& t, int rows, int cols, int range) {
    if (static_cast<int>(t.size()) != rows) return false;
    for (const auto& r : t) {
        if (static_cast<int>(r.size()) != cols) return false;
        for (int v : r)
            if (v < 0 || v >= range) return false;
    }
    return true;
}

bool is_permutation(const std::vector<int>& p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t t = 0; t < s.size(); ++t)
        if (s[t] != static_cast<int>(t)) return false;
    return true;
}

}  // namespace

Report validate_group_matched_pair(const GroupMatchedPair& p) {
    const FiniteGroup& H = p.H;
    const FiniteGroup& K = p.K;
    const int nh = H.order(), nk = K.order();
    Report rep;
    bool shape = table_ok(p.act_l, nk, nh, nh) && table_ok(p.act_r, nk, nh, nk);
    rep.add("table_shape", shape, shape ? "" : "action tables must be |K| x |H| with entries in range");
    if (!shape) return rep;
    auto L = [&](int k, int h) { return p.act_l[k][h]; };
    auto R = [&](int k, int h) { return p.act_r[k][h]; };
    auto kh = [&](int k, int h) { return "k=" + K.label(k) + ", h=" + H.label(h); };

    std::string w;
    for (int h = 0; h < nh && w.empty(); ++h)
        if (L(K.identity(), h) != h) w = "e acts nontrivially on h=" + H.label(h);
    for (int k = 0; k < nk && w.empty(); ++k)
        for (int t = 0; t < nk && w.empty(); ++t)
            for (int h = 0; h < nh && w.empty(); ++h)
                if (L(K.mul(k, t), h) != L(k, L(t, h)))
                    w = "(kt)▶h != k▶(t▶h) at k=" + K.label(k) + ", t=" + K.label(t) + ", h=" + H.label(h);
    rep.add("left_action", w.empty(), w);

    w.clear();
    for (int k = 0; k < nk && w.empty(); ++k)
        if (R(k, H.identity()) != k) w = "e acts nontrivially on k=" + K.label(k);
    for (int k = 0; k < nk && w.empty(); ++k)
        for (int h = 0; h < nh && w.empty(); ++h)
            for (int g = 0; g < nh && w.empty(); ++g)
                if (R(k, H.mul(h, g)) != R(R(k, h), g))
                    w = "k◀(hg) != (k◀h)◀g at k=" + K.label(k) + ", h=" + H.label(h) + ", g=" + H.label(g);
    rep.add("right_action", w.empty(), w);

    w.clear();
    for (int k = 0; k < nk && w.empty(); ++k)
        if (L(k, H.identity()) != H.identity()) w = "k▶e != e at k=" + K.label(k);
    for (int h = 0; h < nh && w.empty(); ++h)
        if (R(K.identity(), h) != K.identity()) w = "e◀h != e at h=" + H.label(h);
    rep.add("identities_fixed", w.empty(), w);

    w.clear();
    for (int k = 0; k < nk && w.empty(); ++k)
        for (int t = 0; t < nk && w.empty(); ++t)
            for (int h = 0; h < nh && w.empty(); ++h)
                if (R(K.mul(k, t), h) != K.mul(R(k, L(t, h)), R(t, h)))
                    w = "(kt)◀h != (k◀(t▶h))(t◀h) at " + kh(k, h) + ", t=" + K.label(t);
    rep.add("right_compatibility", w.empty(), w);

    w.clear();
    for (int k = 0; k < nk && w.empty(); ++k)
        for (int h = 0; h < nh && w.empty(); ++h)
            for (int g = 0; g < nh && w.empty(); ++g)
                if (L(k, H.mul(h, g)) != H.mul(L(k, h), L(R(k, h), g)))
                    w = "k▶(hg) != (k▶h)((k◀h)▶g) at " + kh(k, h) + ", g=" + H.label(g);
    rep.add("left_compatibility", w.empty(), w);
    return rep;
}

FiniteGroup group_bicrossed(const GroupMatchedPair& p) {
    Report rep = validate_group_matched_pair(p);
    if (!rep.pass) throw ValidationError("group matched pair is invalid", rep);
    const int nh = p.H.order(), nk = p.K.order();
    if (nh * nk > kGroupCap) throw CapExceeded("bicrossed group exceeds cap");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(nh * nk, std::vector<int>(nh * nk));
    for (int x = 0; x < nh * nk; ++x) {
        int h = x / nk, k = x % nk;
        labels.push_back("(" + p.H.label(h) + "," + p.K.label(k) + ")");
        for (int y = 0; y < nh * nk; ++y) {
            int g = y / nk, t = y % nk;
            table[x][y] = p.H.mul(h, p.act_l[k][g]) * nk + p.K.mul(p.act_r[k][g], t);
        }
    }
    return FiniteGroup(std::move(labels), std::move(table), p.H.identity() * nk + p.K.identity());
}

namespace {

// Permutation-valued actions of G on a set of `n` points fixing `fixed`,
// given as tables act[g][x]. `left` selects (gh).x = g.(h.x) versus
// x.(gh) = (x.g).h.
std::vector<std::vector<std::vector<int>>> point_fixing_actions(const FiniteGroup& G, int n,
                                                                int fixed, bool left) {
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != fixed) others.push_back(x);
    std::vector<std::vector<int>> perms;
    std::vector<int> img = others;
    do {
        std::vector<int> p(n);
        p[fixed] = fixed;
        for (std::size_t t = 0; t < others.size(); ++t) p[others[t]] = img[t];
        perms.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));

    const std::vector<int> gens = generators(G);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::size_t> choice(gens.size(), 0);
    while (true) {
        std::vector<std::vector<int>> act(G.order());
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        act[G.identity()] = id;
        std::deque<int> work{G.identity()};
        bool ok = true;
        while (!work.empty() && ok) {
            int x = work.front();
            work.pop_front();
            for (std::size_t t = 0; t < gens.size() && ok; ++t) {
                const auto& pg = perms[choice[t]];
                std::vector<int> c(n);
                for (int s = 0; s < n; ++s) c[s] = left ? act[x][pg[s]] : pg[act[x][s]];
                int y = G.mul(x, gens[t]);
                if (act[y].empty()) {
                    act[y] = c;
                    work.push_back(y);
                } else if (act[y] != c) {
                    ok = false;
                }
            }
        }
        if (ok) {
            for (int a = 0; a < G.order() && ok; ++a)
                for (int b = 0; b < G.order() && ok; ++b)
                    for (int s = 0; s < n && ok; ++s) {
                        int lhs = act[G.mul(a, b)][s];
                        int rhs = left ? act[a][act[b][s]] : act[b][act[a][s]];
                        ok = lhs == rhs;
                    }
            if (ok) out.push_back(act);
        }
        std::size_t t = 0;
        while (t < choice.size() && ++choice[t] == perms.size()) choice[t++] = 0;
        if (t == choice.size()) break;
    }
    return out;
}

}  // namespace

std::vector<GroupMatchedPair> all_group_matched_pairs(const FiniteGroup& H, const FiniteGroup& K) {
    if (H.order() > 6 || K.order() > 6) throw CapExceeded("matched pair search is limited to order 6");
    auto lefts = point_fixing_actions(K, H.order(), H.identity(), true);
    auto rights = point_fixing_actions(H, K.order(), K.identity(), false);
    std::vector<GroupMatchedPair> out;
    for (const auto& l : lefts)
        for (const auto& r : rights) {
            GroupMatchedPair p{H, K, l, {}};
            p.act_r.assign(K.order(), std::vector<int>(H.order()));
            for (int h = 0; h < H.order(); ++h)
                for (int k = 0; k < K.order(); ++k) p.act_r[k][h] = r[h][k];
            if (validate_group_matched_pair(p).pass) out.push_back(std::move(p));
        }
    return out;
}

Report validate_ring_matched_pair(const RingMatchedPair& m) {
    const FusionRing& A = m.A;
    const FusionRing& C = m.C;
    const FiniteGroup& H = m.H();
    const FiniteGroup& K = m.K();
    if (A.rank() > kRankCap || C.rank() > kRankCap)
        throw CapExceeded("matched pair rank exceeds " + std::to_string(kRankCap));
    Report rep;
    const int na = A.rank(), nc = C.rank();
    bool shape = static_cast<int>(m.deg_A.size()) == na && static_cast<int>(m.deg_C.size()) == nc &&
                 table_ok({m.deg_A}, 1, na, H.order()) && table_ok({m.deg_C}, 1, nc, K.order()) &&
                 table_ok(m.act_l, K.order(), na, na) && table_ok(m.act_r, H.order(), nc, nc);
    rep.add("table_shape", shape, shape ? "" : "degree maps or ring action tables have wrong shape");
    if (!shape) return rep;

    rep.merge(verify_grading(A, H, m.deg_A), "grading_A");
    rep.merge(verify_grading(C, K, m.deg_C), "grading_C");
    rep.merge(validate_group_matched_pair(m.gmp), "gmp");
    if (!rep.pass) return rep;

    auto tri = [&](int k, int a) { return m.act_l[k][a]; };   // k ▷ a
    auto tle = [&](int c, int h) { return m.act_r[h][c]; };   // c ◁ h
    auto bl = [&](int k, int h) { return m.gmp.act_l[k][h]; };  // k ▶ h
    auto br = [&](int k, int h) { return m.gmp.act_r[k][h]; };  // k ◀ h
    const auto& dA = m.deg_A;
    const auto& dC = m.deg_C;

    std::string w;
    for (int k = 0; k < K.order() && w.empty(); ++k)
        if (!is_permutation(m.act_l[k])) w = K.label(k) + " ▷ is not a permutation of B(A)";
    for (int a = 0; a < na && w.empty(); ++a)
        if (tri(K.identity(), a) != a) w = "e ▷ " + A.label(a) + " != " + A.label(a);
    for (int k = 0; k < K.order() && w.empty(); ++k)
        for (int t = 0; t < K.order() && w.empty(); ++t)
            for (int a = 0; a < na && w.empty(); ++a)
                if (tri(K.mul(k, t), a) != tri(k, tri(t, a)))
                    w = "(kt)▷a != k▷(t▷a) at k=" + K.label(k) + ", t=" + K.label(t) + ", a=" + A.label(a);
    rep.add("left_ring_action", w.empty(), w);

    w.clear();
    for (int h = 0; h < H.order() && w.empty(); ++h)
        if (!is_permutation(m.act_r[h])) w = "◁ " + H.label(h) + " is not a permutation of B(C)";
    for (int c = 0; c < nc && w.empty(); ++c)
        if (tle(c, H.identity()) != c) w = C.label(c) + " ◁ e != " + C.label(c);
    for (int c = 0; c < nc && w.empty(); ++c)
        for (int h = 0; h < H.order() && w.empty(); ++h)
            for (int g = 0; g < H.order() && w.empty(); ++g)
                if (tle(c, H.mul(h, g)) != tle(tle(c, h), g))
                    w = "c◁(hg) != (c◁h)◁g at c=" + C.label(c) + ", h=" + H.label(h) + ", g=" + H.label(g);
    rep.add("right_ring_action", w.empty(), w);

    w.clear();
    for (int k = 0; k < K.order() && w.empty(); ++k)
        for (int a = 0; a < na && w.empty(); ++a)
            if (dA[tri(k, a)] != bl(k, dA[a]))
                w = "deg(" + K.label(k) + "▷" + A.label(a) + ") != " + K.label(k) + "▶deg(" + A.label(a) + ")";
    for (int c = 0; c < nc && w.empty(); ++c)
        for (int h = 0; h < H.order() && w.empty(); ++h)
            if (dC[tle(c, h)] != br(dC[c], h))
                w = "deg(" + C.label(c) + "◁" + H.label(h) + ") != deg(" + C.label(c) + ")◀" + H.label(h);
    rep.add("degree_compatibility", w.empty(), w);

    auto act_elem_l = [&](int k, const RingElement& x) {
        RingElement r;
        for (auto [i, v] : x.coeffs()) r.add(tri(k, i), v);
        return r;
    };
    auto act_elem_r = [&](const RingElement& x, int h) {
        RingElement r;
        for (auto [i, v] : x.coeffs()) r.add(tle(i, h), v);
        return r;
    };

    w.clear();
    for (int k = 0; k < K.order() && w.empty(); ++k)
        for (int a = 0; a < na && w.empty(); ++a)
            for (int a2 = 0; a2 < na && w.empty(); ++a2) {
                RingElement lhs = act_elem_l(k, multiply_basis(A, a, a2));
                RingElement rhs = multiply_basis(A, tri(k, a), tri(br(k, dA[a]), a2));
                if (!(lhs == rhs))
                    w = "k▷(aa') != (k▷a)((k◀|a|)▷a') at k=" + K.label(k) + ", a=" + A.label(a) +
                        ", a'=" + A.label(a2) + ": " + lhs.to_string(A) + " vs " + rhs.to_string(A);
            }
    rep.add("twisted_multiplicativity_left", w.empty(), w);

    w.clear();
    for (int c = 0; c < nc && w.empty(); ++c)
        for (int c2 = 0; c2 < nc && w.empty(); ++c2)
            for (int h = 0; h < H.order() && w.empty(); ++h) {
                RingElement lhs = act_elem_r(multiply_basis(C, c, c2), h);
                RingElement rhs = multiply_basis(C, tle(c, bl(dC[c2], h)), tle(c2, h));
                if (!(lhs == rhs))
                    w = "(cc')◁h != (c◁(|c'|▶h))(c'◁h) at c=" + C.label(c) + ", c'=" + C.label(c2) +
                        ", h=" + H.label(h) + ": " + lhs.to_string(C) + " vs " + rhs.to_string(C);
            }
    rep.add("twisted_multiplicativity_right", w.empty(), w);

    w.clear();
    for (int k = 0; k < K.order() && w.empty(); ++k)
        if (tri(k, A.unit()) != A.unit()) w = K.label(k) + "▷1 != 1";
    for (int h = 0; h < H.order() && w.empty(); ++h)
        if (tle(C.unit(), h) != C.unit()) w = "1◁" + H.label(h) + " != 1";
    rep.add("unit_fixed", w.empty(), w);

    w.clear();
    for (int k = 0; k < K.order() && w.empty(); ++k)
        for (int a = 0; a < na && w.empty(); ++a)
            if (A.dual(tri(k, a)) != tri(br(k, dA[a]), A.dual(a)))
                w = "(k▷a)* != (k◀|a|)▷a* at k=" + K.label(k) + ", a=" + A.label(a);
    for (int c = 0; c < nc && w.empty(); ++c)
        for (int h = 0; h < H.order() && w.empty(); ++h)
            if (C.dual(tle(c, h)) != tle(C.dual(c), bl(dC[c], h)))
                w = "(c◁h)* != c*◁(|c|▶h) at c=" + C.label(c) + ", h=" + H.label(h);
    rep.add("dual_compatibility", w.empty(), w);
    return rep;
}

FusionRing ring_bicrossed(const RingMatchedPair& m) {
    for (const auto* R : {&m.A, &m.C})
        for (const auto& l : R->labels())
            if (l.find(kPairSeparator) != std::string::npos)
                throw InputError("input label '" + l + "' contains the reserved separator");
    Report rep = validate_ring_matched_pair(m);
    if (!rep.pass) throw ValidationError("ring matched pair is invalid", rep);

    const FusionRing& A = m.A;
    const FusionRing& C = m.C;
    const int na = A.rank(), nc = C.rank();
    std::vector<std::string> labels;
    std::vector<int> dual(na * nc);
    std::vector<Constant> cs;
    for (int a = 0; a < na; ++a)
        for (int c = 0; c < nc; ++c) {
            labels.push_back(A.label(a) + kPairSeparator + C.label(c));
            int kinv = m.K().inv(m.deg_C[c]);
            int hinv = m.H().inv(m.deg_A[a]);
            dual[a * nc + c] = m.act_l[kinv][A.dual(a)] * nc + m.act_r[hinv][C.dual(c)];
        }
    for (int a1 = 0; a1 < na; ++a1)
        for (int c1 = 0; c1 < nc; ++c1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int c2 = 0; c2 < nc; ++c2) {
                    int x = m.act_l[m.deg_C[c1]][a2];
                    int y = m.act_r[m.deg_A[a2]][c1];
                    for (const auto& ta : A.product(a1, x))
                        for (const auto& tc : C.product(y, c2)) {
                            std::uint64_t v;
                            if (__builtin_mul_overflow(ta.v, tc.v, &v))
                                throw NumericError("structure constant overflow in bicrossed product");
                            cs.push_back({a1 * nc + c1, a2 * nc + c2, ta.k * nc + tc.k, v});
                        }
                }
    return FusionRing(std::move(labels), A.unit() * nc + C.unit(), std::move(dual), std::move(cs));
}

}  // namespace fusionbench
