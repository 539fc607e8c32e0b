#include "fusionbench/category.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <unordered_map>

#include "fusionbench/errors.hpp"
#include "fusionbench/format.hpp"
#include "fusionbench/rings.hpp"

namespace fusionbench {

namespace {

// Running max deviation with the first tuple attaining it.
struct Worst {
    double value = 0.0;
    std::string where;
    void see(double d, const std::function<std::string()>& at) {
        if (d > value) {
            value = d;
            where = at();
        }
    }
    void report(Report& rep, const std::string& name, double tol) const {
        bool ok = value <= tol;
        rep.add(name, ok, ok ? "" : where, value);
    }
};

double dev(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

Report validate_bicharacter(const Bicharacter& b) {
    const FiniteGroup& G = b.group;
    if (!G.is_abelian()) throw InputError("bicharacter needs an abelian group");
    const int n = G.order();
    Report rep;
    bool shape = static_cast<int>(b.table.size()) == n * n;
    rep.add("table_shape", shape, shape ? "" : "table must have |G|^2 entries");
    if (!shape) return rep;
    auto L = [&](int g) { return G.label(g); };
    const double tol = kParameterTolerance;

    Worst uni, sym, bim;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            uni.see(std::abs(std::abs(b(g, h)) - 1.0), [&] { return "|chi(" + L(g) + "," + L(h) + ")| != 1"; });
            sym.see(dev(b(g, h), b(h, g)), [&] { return "chi(" + L(g) + "," + L(h) + ") != chi(" + L(h) + "," + L(g) + ")"; });
            for (int k = 0; k < n; ++k) {
                bim.see(dev(b(G.mul(g, h), k), b(g, k) * b(h, k)),
                        [&] { return "chi(" + L(g) + L(h) + "," + L(k) + ") != chi(" + L(g) + "," + L(k) + ")chi(" + L(h) + "," + L(k) + ")"; });
                bim.see(dev(b(k, G.mul(g, h)), b(k, g) * b(k, h)),
                        [&] { return "chi(" + L(k) + "," + L(g) + L(h) + ") != chi(" + L(k) + "," + L(g) + ")chi(" + L(k) + "," + L(h) + ")"; });
            }
        }
    uni.report(rep, "unimodular", tol);
    sym.report(rep, "symmetric", tol);
    bim.report(rep, "bimultiplicative", tol);

    std::string w;
    for (int g = 0; g < n && w.empty(); ++g) {
        if (g == G.identity()) continue;
        bool trivial = true;
        for (int h = 0; h < n && trivial; ++h) trivial = dev(b(g, h), 1.0) <= tol;
        if (trivial) w = "chi(" + L(g) + ",-) is trivial";
    }
    rep.add("nondegenerate", w.empty(), w);
    return rep;
}

Report validate_cocycle(const ThreeCocycle& w) {
    const FiniteGroup& G = w.group;
    const int n = G.order();
    Report rep;
    bool shape = static_cast<int>(w.table.size()) == n * n * n;
    rep.add("table_shape", shape, shape ? "" : "table must have |G|^3 entries");
    if (!shape) return rep;
    auto L = [&](int g) { return G.label(g); };
    auto T = [&](int a, int b, int c) { return "(" + L(a) + "," + L(b) + "," + L(c) + ")"; };
    const int e = G.identity();

    Worst uni, norm, coc;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                uni.see(std::abs(std::abs(w(a, b, c)) - 1.0), [&] { return "|omega" + T(a, b, c) + "| != 1"; });
                if (a == e || b == e || c == e)
                    norm.see(dev(w(a, b, c), 1.0), [&] { return "omega" + T(a, b, c) + " != 1"; });
                for (int d = 0; d < n; ++d) {
                    Complex lhs = w(b, c, d) * w(a, G.mul(b, c), d) * w(a, b, c);
                    Complex rhs = w(G.mul(a, b), c, d) * w(a, b, G.mul(c, d));
                    coc.see(dev(lhs, rhs), [&] {
                        return "cocycle identity fails at (" + L(a) + "," + L(b) + "," + L(c) + "," + L(d) + ")";
                    });
                }
            }
    uni.report(rep, "unimodular", kParameterTolerance);
    norm.report(rep, "normalized", kParameterTolerance);
    coc.report(rep, "cocycle_identity", kParameterTolerance);
    return rep;
}

ThreeCocycle trivial_cocycle(const FiniteGroup& G) {
    const int n = G.order();
    return ThreeCocycle{G, std::vector<Complex>(static_cast<std::size_t>(n) * n * n, 1.0)};
}

ThreeCocycle cyclic_cocycle(int n, int p) {
    FiniteGroup G = cyclic_group(n);
    std::vector<Complex> t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int carry = b + c - (b + c) % n;
                // Exact values for the real cases keep serialized output clean.
                long num = static_cast<long>(p) * a * carry;
                long den = static_cast<long>(n) * n;
                long r = ((num % den) + den) % den;
                if (r == 0) t.push_back(1.0);
                else if (2 * r == den) t.push_back(-1.0);
                else t.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den)));
            }
    return ThreeCocycle{G, std::move(t)};
}

namespace {

Complex root_power(Complex q, long e) {
    if (e == 0) return 1.0;
    Complex r = 1.0;
    for (long t = 0; t < e; ++t) r *= q;
    return r;
}

}  // namespace

Bicharacter diagonal_bicharacter(const std::vector<int>& factors, const std::vector<Complex>& q) {
    if (factors.empty() || factors.size() > 2 || q.size() != factors.size())
        throw InputError("diagonal bicharacter needs one value per cyclic factor (1 or 2 factors)");
    FiniteGroup G = factors.size() == 1 ? cyclic_group(factors[0]) : cyclic_product(factors[0], factors[1]);
    const int n = G.order();
    const int m = factors.size() == 1 ? 1 : factors[1];
    std::vector<Complex> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (factors.size() == 1) t.push_back(root_power(q[0], static_cast<long>(x) * y));
            else
                t.push_back(root_power(q[0], static_cast<long>(x / m) * (y / m)) *
                            root_power(q[1], static_cast<long>(x % m) * (y % m)));
        }
    return Bicharacter{G, std::move(t)};
}

std::vector<int> row_space(const FusionRing& R, int a, int b, int c, int d) {
    std::vector<int> out;
    for (const auto& t : R.product(a, b))
        if (R.N(t.k, c, d)) out.push_back(t.k);
    return out;
}

std::vector<int> col_space(const FusionRing& R, int a, int b, int c, int d) {
    std::vector<int> out;
    for (const auto& t : R.product(b, c))
        if (R.N(a, t.k, d)) out.push_back(t.k);
    return out;
}

const AssocBlock& FusionCategoryData::block(int a, int b, int c, int d) const {
    auto it = assoc.find({a, b, c, d});
    if (it == assoc.end())
        throw StructuralError("missing associator block (" + ring.label(a) + "," + ring.label(b) + "," +
                              ring.label(c) + ";" + ring.label(d) + ")");
    return it->second;
}

Complex FusionCategoryData::F(int a, int b, int c, int d, int e, int f) const {
    const AssocBlock& blk = block(a, b, c, d);
    auto r = std::find(blk.rows.begin(), blk.rows.end(), e);
    auto s = std::find(blk.cols.begin(), blk.cols.end(), f);
    if (r == blk.rows.end() || s == blk.cols.end())
        throw StructuralError("associator entry outside block (" + ring.label(a) + "," + ring.label(b) +
                              "," + ring.label(c) + ";" + ring.label(d) + ")");
    return blk.m(r - blk.rows.begin(), s - blk.cols.begin());
}

FusionCategoryData identity_associator(const FusionRing& ring) {
    if (!ring.multiplicity_free()) throw InputError("associator data needs a multiplicity-free ring");
    FusionCategoryData cat{ring, {}, std::vector<Complex>(ring.rank(), 1.0),
                           std::vector<Complex>(ring.rank(), 1.0)};
    const int n = ring.rank();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    auto rows = row_space(ring, a, b, c, d);
                    if (rows.empty()) continue;
                    auto cols = col_space(ring, a, b, c, d);
                    AssocBlock blk{rows, cols, Eigen::MatrixXcd::Identity(rows.size(), cols.size())};
                    cat.assoc.emplace(BlockKey{a, b, c, d}, std::move(blk));
                }
    return cat;
}

Report validate_category_structure(const FusionCategoryData& cat) {
    const FusionRing& R = cat.ring;
    const int n = R.rank();
    Report rep;
    rep.add("multiplicity_free", R.multiplicity_free(), R.multiplicity_free() ? "" : "some N exceeds 1");
    auto key = [&](int a, int b, int c, int d) {
        return "(" + R.label(a) + "," + R.label(b) + "," + R.label(c) + ";" + R.label(d) + ")";
    };

    std::string adm, sq;
    std::size_t expected = 0;
    double worst_cond = 1.0;
    std::string worst_at, singular;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    auto rows = row_space(R, a, b, c, d);
                    auto cols = col_space(R, a, b, c, d);
                    auto it = cat.assoc.find({a, b, c, d});
                    if (rows.empty() && cols.empty()) continue;
                    ++expected;
                    if (it == cat.assoc.end()) {
                        if (adm.empty()) adm = "missing block " + key(a, b, c, d);
                        continue;
                    }
                    const AssocBlock& blk = it->second;
                    if (blk.rows != rows || blk.cols != cols ||
                        blk.m.rows() != static_cast<Eigen::Index>(rows.size()) ||
                        blk.m.cols() != static_cast<Eigen::Index>(cols.size())) {
                        if (adm.empty()) adm = "ill-shaped block " + key(a, b, c, d);
                        continue;
                    }
                    if (rows.size() != cols.size()) {
                        if (sq.empty()) sq = "non-square block " + key(a, b, c, d);
                        continue;
                    }
                    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(blk.m);
                    const auto& s = svd.singularValues();
                    double smax = s(0), smin = s(s.size() - 1);
                    if (!(smin > 1e-12 * std::max(1.0, smax))) {
                        if (singular.empty()) singular = "singular block " + key(a, b, c, d);
                    } else if (smax / smin > worst_cond) {
                        worst_cond = smax / smin;
                        worst_at = key(a, b, c, d);
                    }
                }
    if (adm.empty() && cat.assoc.size() != expected)
        adm = "blocks present for non-admissible tuples";
    for (const auto& [k, blk] : cat.assoc)
        if (adm.empty() && (k.a < 0 || k.a >= n || k.b < 0 || k.b >= n || k.c < 0 || k.c >= n || k.d < 0 || k.d >= n))
            adm = "block index out of range";
    rep.add("blocks_admissible", adm.empty(), adm);
    rep.add("blocks_square", sq.empty(), sq);
    std::string cond = "max condition number " + format_number(worst_cond);
    if (!worst_at.empty()) cond += " at " + worst_at;
    rep.add("blocks_invertible", singular.empty(), singular.empty() ? cond : singular);

    std::string u;
    if (static_cast<int>(cat.unit_l.size()) != n || static_cast<int>(cat.unit_r.size()) != n)
        u = "unitor tables must have one entry per simple";
    else
        for (int i = 0; i < n && u.empty(); ++i)
            if (std::abs(cat.unit_l[i]) < 1e-12 || std::abs(cat.unit_r[i]) < 1e-12)
                u = "zero unitor at " + R.label(i);
    rep.add("unitors", u.empty(), u);
    return rep;
}

namespace {

// Pointer lookup for blocks plus zero for non-admissible (e,f).
class BlockIndex {
public:
    explicit BlockIndex(const FusionCategoryData& cat) : n_(cat.ring.rank()) {
        for (const auto& [k, blk] : cat.assoc) map_.emplace(code(k.a, k.b, k.c, k.d), &blk);
    }
    Complex operator()(int a, int b, int c, int d, int e, int f) const {
        auto it = map_.find(code(a, b, c, d));
        if (it == map_.end()) return 0.0;
        const AssocBlock& blk = *it->second;
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
            if (blk.rows[r] == e)
                for (std::size_t s = 0; s < blk.cols.size(); ++s)
                    if (blk.cols[s] == f) return blk.m(r, s);
        return 0.0;
    }

private:
    long code(int a, int b, int c, int d) const { return ((static_cast<long>(a) * n_ + b) * n_ + c) * n_ + d; }
    int n_;
    std::unordered_map<long, const AssocBlock*> map_;
};

// The coherence checks need blocks present and well shaped; invertibility
// and unitors are reported by validate_category_structure only.
void require_structure(const FusionCategoryData& cat) {
    Report s = validate_category_structure(cat);
    for (const auto& c : s.checks)
        if (!c.pass && c.name != "blocks_invertible" && c.name != "unitors")
            throw StructuralError(c.name + ": " + c.witness);
}

}  // namespace

Report check_pentagon(const FusionCategoryData& cat, double tol, int threads) {
    require_structure(cat);
    const FusionRing& R = cat.ring;
    const int n = R.rank();
    const BlockIndex F(cat);
    threads = std::max(1, std::min(threads, n));

    struct Partial {
        double worst = 0.0;
        long tuple = -1;
        std::array<int, 9> at{};
        long equations = 0;
    };
    std::vector<Partial> parts(threads);
    auto work = [&](int tid) {
        Partial& P = parts[tid];
        for (int a = tid; a < n; a += threads)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int e = 0; e < n; ++e)
                            for (const auto& tf : R.product(a, b))
                                for (const auto& tg : R.product(tf.k, c)) {
                                    const int f = tf.k, g = tg.k;
                                    if (!R.N(g, d, e)) continue;
                                    for (const auto& tl : R.product(c, d))
                                        for (const auto& tk : R.product(b, tl.k)) {
                                            const int l = tl.k, k = tk.k;
                                            if (!R.N(a, k, e)) continue;
                                            Complex lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k);
                                            Complex rhs = 0.0;
                                            for (const auto& th : R.product(b, c)) {
                                                const int h = th.k;
                                                if (!R.N(a, h, g) || !R.N(h, d, k)) continue;
                                                rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l);
                                            }
                                            ++P.equations;
                                            double r = std::abs(lhs - rhs);
                                            if (r > P.worst) {
                                                P.worst = r;
                                                P.at = {a, b, c, d, e, f, g, k, l};
                                            }
                                        }
                                }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
    Partial total;
    for (const auto& P : parts) {
        total.equations += P.equations;
        // Strictly larger wins; ties keep the lexicographically first tuple.
        if (P.worst > total.worst || (P.worst == total.worst && P.worst > 0 && P.at < total.at)) {
            total.worst = P.worst;
            total.at = P.at;
        }
    }
    Report rep;
    bool ok = total.worst <= tol;
    std::string w = std::to_string(total.equations) + " equations";
    if (total.worst > 0) {
        const auto& t = total.at;
        auto L = [&](int i) { return R.label(i); };
        w += "; worst at (" + L(t[0]) + "," + L(t[1]) + "," + L(t[2]) + "," + L(t[3]) + ";" + L(t[4]) +
             ") left path (" + L(t[5]) + "," + L(t[6]) + ") right path (" + L(t[7]) + "," + L(t[8]) + ")";
    }
    rep.add("pentagon", ok, w, total.worst);
    return rep;
}

Report check_triangle(const FusionCategoryData& cat, double tol) {
    require_structure(cat);
    const FusionRing& R = cat.ring;
    const int u = R.unit();
    Worst worst;
    for (int a = 0; a < R.rank(); ++a)
        for (int c = 0; c < R.rank(); ++c)
            for (const auto& t : R.product(a, c)) {
                Complex v = cat.F(a, u, c, t.k, a, c) * cat.unit_l[c];
                worst.see(dev(v, cat.unit_r[a]), [&] {
                    return "(" + R.label(a) + ",1," + R.label(c) + ";" + R.label(t.k) + ")";
                });
            }
    Report rep;
    worst.report(rep, "triangle", tol);
    return rep;
}

FusionCategoryData build_pointed(const ThreeCocycle& w) {
    Report rep = validate_cocycle(w);
    if (!rep.pass) throw ValidationError("invalid 3-cocycle", rep);
    const FiniteGroup& G = w.group;
    FusionCategoryData cat = identity_associator(group_ring(G));
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            for (int c = 0; c < G.order(); ++c)
                cat.assoc.at({a, b, c, G.mul(G.mul(a, b), c)}).m(0, 0) = w(a, b, c);
    return cat;
}

namespace {

Report tau_check(Complex tau, int order, const std::string& name) {
    Report rep;
    double r = std::abs(tau * tau - 1.0 / order);
    rep.add(name, r < 1e-12, r < 1e-12 ? "" : "tau^2 != 1/" + std::to_string(order), r);
    return rep;
}

}  // namespace

FusionCategoryData build_TY(const Bicharacter& chi, Complex tau, const std::string& x) {
    const FiniteGroup& G = chi.group;
    Report rep;
    rep.merge(validate_bicharacter(chi), "chi");
    rep.merge(tau_check(tau, G.order(), "tau_normalization"));
    if (!rep.pass) throw ValidationError("invalid Tambara-Yamagami data", rep);
    const int m = G.order(), X = m;
    FusionCategoryData cat = identity_associator(tambara_yamagami_ring(G, x));
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) {
            cat.assoc.at({g, X, h, X}).m(0, 0) = chi(g, h);
            cat.assoc.at({X, g, X, h}).m(0, 0) = chi(g, h);
        }
    AssocBlock& xxx = cat.assoc.at({X, X, X, X});
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f) xxx.m(e, f) = tau / chi(xxx.rows[e], xxx.cols[f]);
    return cat;
}

FusionCategoryData build_bicrossed_category(const CategoricalLifting& lift) {
    const RingMatchedPair& mp = lift.pair;
    if (!(lift.A.ring == mp.A) || !(lift.C.ring == mp.C))
        throw InputError("category rings differ from the matched pair rings");
    FusionRing ring = ring_bicrossed(mp);
    if (!ring.multiplicity_free()) throw InputError("bicrossed ring is not multiplicity-free");
    const FusionCategoryData& A = lift.A;
    const FusionCategoryData& C = lift.C;
    const FiniteGroup& H = mp.H();
    const FiniteGroup& K = mp.K();
    const int nc = mp.C.rank();
    auto tri = [&](int k, int a) { return mp.act_l[k][a]; };
    auto tle = [&](int c, int h) { return mp.act_r[h][c]; };
    auto bl = [&](int k, int h) { return mp.gmp.act_l[k][h]; };
    auto br = [&](int k, int h) { return mp.gmp.act_r[k][h]; };
    const auto& dA = mp.deg_A;
    const auto& dC = mp.deg_C;

    FusionCategoryData cat{ring, {}, {}, {}};
    const int n = ring.rank();
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int x3 = 0; x3 < n; ++x3)
                for (int d = 0; d < n; ++d) {
                    auto rows = row_space(ring, x1, x2, x3, d);
                    if (rows.empty()) continue;
                    auto cols = col_space(ring, x1, x2, x3, d);
                    const int a1 = x1 / nc, c1 = x1 % nc, a2 = x2 / nc, c2 = x2 % nc;
                    const int a3 = x3 / nc, c3 = x3 % nc, a = d / nc, c = d % nc;
                    const int k1 = dC[c1], k2 = dC[c2], h2 = dA[a2], h3 = dA[a3];
                    const int ke = K.mul(br(k1, h2), k2);
                    const int haf = H.mul(h2, bl(k2, h3));
                    AssocBlock blk{rows, cols, Eigen::MatrixXcd(rows.size(), cols.size())};
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        for (std::size_t s = 0; s < cols.size(); ++s) {
                            const int ae = rows[r] / nc, ce = rows[r] % nc;
                            const int af = cols[s] / nc, cf = cols[s] % nc;
                            Complex left = A.F(a1, tri(k1, a2), tri(ke, a3), a, ae, tri(k1, af)) /
                                           lift.L2(br(k1, h2), k2, a3) / lift.gamma(k1, a2, tri(k2, a3), af);
                            Complex right = lift.eta(h3, tle(c1, h2), c2, ce) * lift.R2(h2, bl(k2, h3), c1) *
                                            C.F(tle(c1, haf), tle(c2, h3), c3, c, tle(ce, h3), cf);
                            blk.m(r, s) = left * right;
                        }
                    cat.assoc.emplace(BlockKey{x1, x2, x3, d}, std::move(blk));
                }

    const int uA = mp.A.unit(), uC = mp.C.unit();
    for (int x = 0; x < n; ++x) {
        const int a = x / nc, c = x % nc;
        cat.unit_l.push_back(A.unit_l[a] * C.unit_l[c] * lift.L2(K.identity(), K.identity(), a) /
                             lift.eta(dA[a], uC, uC, uC));
        cat.unit_r.push_back(A.unit_r[a] * C.unit_r[c] * lift.R2(H.identity(), H.identity(), c) /
                             lift.gamma(dC[c], uA, uA, uA));
    }
    return cat;
}

FiniteGroup sigma_group() {
    return FiniteGroup({"e", "σ"}, {{0, 1}, {1, 0}}, 0);
}

FiniteGroup rename_generators(const FiniteGroup& G, const std::string& g, const std::string& h) {
    std::vector<std::string> labels;
    for (const auto& l : G.labels()) {
        std::string out;
        for (char ch : l) {
            if (ch == 'g') out += g;
            else if (ch == 'h') out += h;
            else out += ch;
        }
        labels.push_back(out);
    }
    return FiniteGroup(std::move(labels), G.table(), G.identity());
}

// ---------------------------------------------------------------------------
// Tambara-Yamagami bicrossed a pointed category.

TYPointedParams TYPointedParams::trivial(Bicharacter chi, Complex tau, ThreeCocycle omega) {
    const int nk = omega.group.order();
    const int ng = chi.group.order();
    TYPointedParams p{std::move(chi), tau, std::move(omega), {}, {}, {}, {}, {}, {}, {}};
    for (int k = 0; k < nk; ++k) p.phi.push_back(k);
    for (int k = 0; k < nk; ++k) {
        std::vector<int> id(ng);
        for (int g = 0; g < ng; ++g) id[g] = g;
        p.phi_action.push_back(id);
    }
    p.lambda_X.assign(nk * nk, 1.0);
    p.mu.assign(nk, 1.0);
    p.f.assign(nk, 1.0);
    p.beta.assign(nk * nk, 1.0);
    p.lambda.assign(nk * 4, 1.0);
    return p;
}

namespace {

// Index 1 is σ in the two-element grading group.
constexpr int kSigma = 1;

struct TYPointedView {
    const TYPointedParams& p;
    int nk;
    Complex lamX(int k, int k2) const { return p.lambda_X[k * nk + k2]; }
    Complex beta(int k, int k2) const { return p.beta[k * nk + k2]; }
    Complex lam(int k, int h, int h2) const { return p.lambda[(k * 2 + h) * 2 + h2]; }
    int act_r(int k, int h) const { return h == kSigma ? p.phi[k] : k; }  // k ◀ h
};

}  // namespace

Report validate_ty_pointed_params(const TYPointedParams& p) {
    const FiniteGroup& G = p.Gamma();
    const FiniteGroup& K = p.K();
    const int ng = G.order(), nk = K.order();
    Report rep;
    rep.merge(validate_bicharacter(p.chi), "chi");
    rep.merge(tau_check(p.tau, ng, "tau_normalization"));
    rep.merge(validate_cocycle(p.omega), "omega");

    bool shape = static_cast<int>(p.phi.size()) == nk && static_cast<int>(p.phi_action.size()) == nk &&
                 static_cast<int>(p.lambda_X.size()) == nk * nk && static_cast<int>(p.mu.size()) == nk &&
                 static_cast<int>(p.f.size()) == nk && static_cast<int>(p.beta.size()) == nk * nk &&
                 static_cast<int>(p.lambda.size()) == nk * 4;
    for (const auto& row : p.phi_action) shape = shape && static_cast<int>(row.size()) == ng;
    for (int v : p.phi) shape = shape && v >= 0 && v < nk;
    for (const auto& row : p.phi_action)
        for (int v : row) shape = shape && v >= 0 && v < ng;
    rep.add("table_shapes", shape, shape ? "" : "parameter tables have wrong sizes or entries");
    if (!shape) return rep;

    const TYPointedView v{p, nk};
    auto KL = [&](int k) { return K.label(k); };
    const double tol = kParameterTolerance;

    {
        std::string w;
        if (!is_automorphism(K, p.phi)) w = "phi is not an automorphism of K";
        for (int k = 0; k < nk && w.empty(); ++k)
            if (p.phi[p.phi[k]] != k) w = "phi(phi(" + KL(k) + ")) != " + KL(k);
        rep.add("phi_automorphism", w.empty(), w);
    }
    {
        std::string w;
        for (int k = 0; k < nk && w.empty(); ++k)
            if (!is_automorphism(G, p.phi_action[k])) w = "phi_" + KL(k) + " is not an automorphism of Gamma";
        for (int g = 0; g < ng && w.empty(); ++g)
            if (p.phi_action[K.identity()][g] != g) w = "phi_e is not the identity";
        for (int k = 0; k < nk && w.empty(); ++k)
            for (int t = 0; t < nk && w.empty(); ++t)
                for (int g = 0; g < ng && w.empty(); ++g)
                    if (p.phi_action[K.mul(k, t)][g] != p.phi_action[k][p.phi_action[t][g]])
                        w = "phi_" + KL(K.mul(k, t)) + " != phi_" + KL(k) + " phi_" + KL(t);
        rep.add("phi_action", w.empty(), w);
    }
    {
        Worst inv;
        for (int k = 0; k < nk; ++k)
            for (int g = 0; g < ng; ++g)
                for (int g2 = 0; g2 < ng; ++g2) {
                    auto at = [&] {
                        return "k=" + KL(k) + ", g=" + G.label(g) + ", g'=" + G.label(g2);
                    };
                    inv.see(dev(p.chi(p.phi_action[k][g], g2), p.chi(g, g2)), at);
                    inv.see(dev(p.chi(g, p.phi_action[k][g2]), p.chi(g, g2)), at);
                }
        inv.report(rep, "chi_invariance", tol);
    }
    const int e = K.identity();
    {
        Worst c;
        for (int k = 0; k < nk; ++k) {
            c.see(dev(v.lamX(e, k), 1.0), [&] { return "lambda_X(e," + KL(k) + ") != 1"; });
            c.see(dev(v.lamX(k, e), 1.0), [&] { return "lambda_X(" + KL(k) + ",e) != 1"; });
            for (int k2 = 0; k2 < nk; ++k2)
                for (int k3 = 0; k3 < nk; ++k3)
                    c.see(dev(v.lamX(k, k2) * v.lamX(K.mul(k, k2), k3), v.lamX(k2, k3) * v.lamX(k, K.mul(k2, k3))),
                          [&] { return "2-cocycle identity fails at (" + KL(k) + "," + KL(k2) + "," + KL(k3) + ")"; });
        }
        c.report(rep, "lambda_X_cocycle", tol);
    }
    {
        Worst c;
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                c.see(dev(p.mu[K.mul(k, k2)], p.mu[k] * p.mu[k2]),
                      [&] { return "mu(" + KL(k) + KL(k2) + ") != mu(" + KL(k) + ")mu(" + KL(k2) + ")"; });
        for (int k = 0; k < nk; ++k)
            if (std::abs(p.mu[k]) < 1e-12) c.see(1.0, [&] { return "mu(" + KL(k) + ") = 0"; });
        c.report(rep, "mu_character", tol);
    }
    {
        Worst c;
        for (int k = 0; k < nk; ++k) {
            if (std::abs(p.f[k]) < 1e-12) {
                c.see(1.0, [&] { return "f(" + KL(k) + ") = 0"; });
                continue;
            }
            c.see(dev(p.f[p.phi[k]], p.f[k] * p.mu[k] / p.mu[p.phi[k]]),
                  [&] { return "f(phi(k)) != f(k)mu(k)/mu(phi(k)) at k=" + KL(k); });
            for (int k2 = 0; k2 < nk; ++k2)
                c.see(dev(p.f[K.mul(k, k2)],
                          p.f[k] * p.f[k2] * v.lamX(k, k2) * v.lamX(p.phi[k], p.phi[k2])),
                      [&] { return "f(kk') != f(k)f(k')lambda_X(k,k')lambda_X(phi(k),phi(k')) at k=" + KL(k) + ", k'=" + KL(k2); });
        }
        c.report(rep, "f_conditions", tol);
    }
    {
        Worst c;
        const auto& w = p.omega;
        const auto& ph = p.phi;
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                for (int k3 = 0; k3 < nk; ++k3) {
                    Complex lhs = w(k, k2, k3) * v.beta(k, K.mul(k2, k3)) * v.beta(k2, k3);
                    Complex rhs = v.beta(K.mul(k, k2), k3) * v.beta(k, k2) * w(ph[k], ph[k2], ph[k3]);
                    c.see(dev(lhs, rhs), [&] { return "beta condition fails at (" + KL(k) + "," + KL(k2) + "," + KL(k3) + ")"; });
                }
        for (int t = 0; t < nk * nk; ++t)
            if (std::abs(p.beta[t]) < 1e-12) c.see(1.0, [&] { return "beta has a zero entry"; });
        c.report(rep, "beta_condition", tol);
    }
    {
        Worst c;
        for (int k = 0; k < nk; ++k)
            for (int h = 0; h < 2; ++h)
                for (int h2 = 0; h2 < 2; ++h2)
                    for (int h3 = 0; h3 < 2; ++h3) {
                        Complex lhs = v.lam(k, h ^ h2, h3) * v.lam(k, h, h2);
                        Complex rhs = v.lam(k, h, h2 ^ h3) * v.lam(v.act_r(k, h), h2, h3);
                        c.see(dev(lhs, rhs), [&] { return "lambda_k condition fails at k=" + KL(k); });
                    }
        for (Complex x : p.lambda)
            if (std::abs(x) < 1e-12) c.see(1.0, [&] { return "lambda_k has a zero entry"; });
        c.report(rep, "lambda_k_condition", tol);
    }
    {
        // R2_{h,h'} must be monoidal for the tensor structures eta^h.
        auto eta = [&](int h, int k, int k2) -> Complex { return h == kSigma ? v.beta(k, k2) : 1.0; };
        Worst c;
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                for (int h = 0; h < 2; ++h)
                    for (int h2 = 0; h2 < 2; ++h2) {
                        Complex lhs = v.lam(K.mul(k, k2), h, h2) * eta(h ^ h2, k, k2);
                        Complex rhs = v.lam(k, h, h2) * v.lam(k2, h, h2) * eta(h, k, k2) *
                                      eta(h2, v.act_r(k, h), v.act_r(k2, h));
                        c.see(dev(lhs, rhs), [&] {
                            return "lambda_kk'(h,h') eta^hh' != lambda_k lambda_k' eta^h eta^h' at k=" + KL(k) +
                                   ", k'=" + KL(k2) + ", h=" + (h ? "σ" : "e") + ", h'=" + (h2 ? "σ" : "e");
                        });
                    }
        c.report(rep, "lambda_beta_compatibility", tol);
    }
    {
        bool normalized = true;
        for (int k = 0; k < nk; ++k) normalized = normalized && dev(v.lam(k, 0, 0), 1.0) <= tol;
        rep.add("lambda_k_normalization", true,
                normalized ? "lambda_k(e,e) = 1 for all k" : "lambda_k(e,e) != 1 for some k; table used as given");
    }
    return rep;
}

RingMatchedPair ty_pointed_matched_pair(const TYPointedParams& p) {
    const FiniteGroup& G = p.Gamma();
    const FiniteGroup& K = p.K();
    const int ng = G.order(), nk = K.order();
    FiniteGroup S = sigma_group();
    RingMatchedPair m{tambara_yamagami_ring(G), group_ring(K), {}, {}, GroupMatchedPair::trivial(S, K), {}, {}};
    for (int g = 0; g < ng; ++g) m.deg_A.push_back(0);
    m.deg_A.push_back(kSigma);
    for (int k = 0; k < nk; ++k) m.deg_C.push_back(k);
    for (int k = 0; k < nk; ++k) m.gmp.act_r[k][kSigma] = p.phi[k];
    m.act_l.assign(nk, std::vector<int>(ng + 1));
    for (int k = 0; k < nk; ++k) {
        for (int g = 0; g < ng; ++g) m.act_l[k][g] = p.phi_action[k][g];
        m.act_l[k][ng] = ng;
    }
    m.act_r.assign(2, std::vector<int>(nk));
    for (int k = 0; k < nk; ++k) {
        m.act_r[0][k] = k;
        m.act_r[kSigma][k] = p.phi[k];
    }
    return m;
}

namespace {

void require_params(const Report& rep, const char* what) {
    if (!rep.pass) throw ValidationError(what, rep);
}

}  // namespace

CategoricalLifting ty_pointed_lifting(const TYPointedParams& p) {
    require_params(validate_ty_pointed_params(p), "invalid Tambara-Yamagami/pointed parameters");
    const int ng = p.Gamma().order(), nk = p.K().order();
    const int X = ng;
    CategoricalLifting lift{ty_pointed_matched_pair(p), build_TY(p.chi, p.tau), build_pointed(p.omega), {}, {}, {}, {}};
    // Copies keep the lifting self-contained.
    auto mu = p.mu;
    auto f = p.f;
    auto phi = p.phi;
    auto beta = p.beta;
    auto lamX = p.lambda_X;
    auto lam = p.lambda;
    lift.gamma = [=](int k, int a, int a2, int) -> Complex {
        if (a < X) return mu[k];
        if (a2 < X) return mu[phi[k]];
        return f[k];
    };
    lift.eta = [=](int h, int c, int c2, int) -> Complex { return h == kSigma ? beta[c * nk + c2] : 1.0; };
    lift.L2 = [=](int k, int k2, int a) -> Complex { return a == X ? lamX[k * nk + k2] : 1.0; };
    lift.R2 = [=](int h, int h2, int c) -> Complex { return lam[(c * 2 + h) * 2 + h2]; };
    return lift;
}

FusionCategoryData build_TY_pointed_bicrossed(const TYPointedParams& p) {
    require_params(validate_ty_pointed_params(p), "invalid Tambara-Yamagami/pointed parameters");
    const RingMatchedPair mp = ty_pointed_matched_pair(p);
    FusionCategoryData cat = identity_associator(ring_bicrossed(mp));
    const FiniteGroup& K = p.K();
    const int ng = p.Gamma().order(), nk = K.order();
    const int X = ng, e = 0, s = kSigma;
    const TYPointedView v{p, nk};
    const auto& phi = p.phi;
    const auto& w = p.omega;
    auto mui = [&](int k) { return 1.0 / p.mu[k]; };
    auto chi = [&](int g, int h) { return p.chi(g, h); };
    auto vphi = [&](int k, int g) { return p.phi_action[k][g]; };

    for (auto& [key, blk] : cat.assoc) {
        const int a1 = key.a / nk, k1 = key.a % nk;
        const int a2 = key.b / nk, k2 = key.b % nk;
        const int a3 = key.c / nk, k3 = key.c % nk;
        const int gd = key.d / nk;  // Gamma part of the target
        const bool g1 = a1 < X, g2 = a2 < X, g3 = a3 < X;
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
            for (std::size_t c = 0; c < blk.cols.size(); ++c) {
                Complex val;
                if (g1 && g2 && g3)
                    val = mui(k1) * w(k1, k2, k3) * v.lam(k1, e, e);
                else if (g1 && g2 && !g3)
                    val = mui(k1) / v.lamX(k1, k2) * w(phi[k1], phi[k2], k3) * v.beta(k1, k2) * v.lam(k1, e, s);
                else if (g1 && !g2 && g3)
                    val = mui(phi[k1]) * w(phi[k1], k2, k3) * chi(a1, vphi(K.mul(phi[k1], k2), a3)) * v.lam(k1, s, e);
                else if (!g1 && g2 && g3)
                    val = w(k1, k2, k3) * mui(k1) * v.lam(k1, e, e);
                else if (g1 && !g2 && !g3)
                    val = w(k1, phi[k2], k3) / p.f[k1] * v.beta(phi[k1], k2) / v.lamX(phi[k1], k2) * v.lam(k1, s, s);
                else if (!g1 && !g2 && g3)
                    val = w(phi[k1], k2, k3) * mui(phi[k1]) * v.lam(k1, s, e);
                else if (!g1 && g2 && !g3)
                    val = w(phi[k1], phi[k2], k3) * mui(k1) / v.lamX(k1, k2) * chi(vphi(k1, a2), gd) * v.beta(k1, k2) *
                          v.lam(k1, e, s);
                else {
                    const int g = blk.rows[r] / nk, h = blk.cols[c] / nk;
                    val = p.tau * w(k1, phi[k2], k3) / v.lamX(phi[k1], k2) / p.f[k1] * v.beta(phi[k1], k2) *
                          v.lam(k1, s, s) / chi(g, h);
                }
                blk.m(r, c) = val;
            }
    }
    // Unitor scalars: ℓ carries 1/β(e,e) on X⋈k, r carries λ_k(e,e)/μ(k).
    for (int x = 0; x < cat.ring.rank(); ++x) {
        const int a = x / nk, k = x % nk;
        cat.unit_l[x] = a == X ? 1.0 / v.beta(e, e) : Complex(1.0);
        cat.unit_r[x] = v.lam(k, e, e) / p.mu[k];
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Two Tambara-Yamagami categories.

Report validate_ty_ty_params(const TYTYParams& p) {
    Report rep;
    rep.merge(validate_bicharacter(p.chi), "chi");
    rep.merge(validate_bicharacter(p.zeta), "zeta");
    rep.merge(tau_check(p.tau, p.H().order(), "tau_normalization"));
    rep.merge(tau_check(p.upsilon, p.K().order(), "upsilon_normalization"));
    auto involution = [&](const FiniteGroup& G, const std::vector<int>& a, const std::string& name) {
        std::string w;
        if (static_cast<int>(a.size()) != G.order() || !is_automorphism(G, a)) w = name + " is not an automorphism";
        for (int x = 0; x < G.order() && w.empty(); ++x)
            if (a[a[x]] != x) w = name + " has order greater than two";
        rep.add(name + "_automorphism", w.empty(), w);
        return w.empty();
    };
    bool okp = involution(p.H(), p.phi, "phi");
    bool oks = involution(p.K(), p.psi, "psi");
    auto invariance = [&](const Bicharacter& b, const std::vector<int>& a, bool ok, const std::string& name) {
        const FiniteGroup& G = b.group;
        Worst c;
        if (ok)
            for (int x = 0; x < G.order(); ++x)
                for (int y = 0; y < G.order(); ++y) {
                    auto at = [&] { return "at (" + G.label(x) + "," + G.label(y) + ")"; };
                    c.see(dev(b(a[x], y), b(x, y)), at);
                    c.see(dev(b(x, a[y]), b(x, y)), at);
                }
        c.report(rep, name, kParameterTolerance);
    };
    invariance(p.chi, p.phi, okp, "chi_invariance");
    invariance(p.zeta, p.psi, oks, "zeta_invariance");
    bool signs = (p.theta_l == 1 || p.theta_l == -1) && (p.theta_r == 1 || p.theta_r == -1);
    rep.add("theta_signs", signs, signs ? "" : "theta values must be +1 or -1");
    return rep;
}

RingMatchedPair ty_ty_matched_pair(const TYTYParams& p) {
    const int nh = p.H().order(), nk = p.K().order();
    FiniteGroup S = sigma_group();
    RingMatchedPair m{tambara_yamagami_ring(p.H(), "X"), tambara_yamagami_ring(p.K(), "Y"), {}, {},
                      GroupMatchedPair::trivial(S, S), {}, {}};
    m.deg_A.assign(nh, 0);
    m.deg_A.push_back(kSigma);
    m.deg_C.assign(nk, 0);
    m.deg_C.push_back(kSigma);
    std::vector<int> id_a(nh + 1), phi_a(nh + 1), id_c(nk + 1), psi_c(nk + 1);
    for (int x = 0; x <= nh; ++x) {
        id_a[x] = x;
        phi_a[x] = x < nh ? p.phi[x] : x;
    }
    for (int x = 0; x <= nk; ++x) {
        id_c[x] = x;
        psi_c[x] = x < nk ? p.psi[x] : x;
    }
    m.act_l = {id_a, phi_a};
    m.act_r = {id_c, psi_c};
    return m;
}

CategoricalLifting ty_ty_lifting(const TYTYParams& p) {
    require_params(validate_ty_ty_params(p), "invalid Tambara-Yamagami pair parameters");
    const int X = p.H().order(), Y = p.K().order();
    const Complex tl = p.theta_l, tr = p.theta_r;
    CategoricalLifting lift{ty_ty_matched_pair(p), build_TY(p.chi, p.tau, "X"), build_TY(p.zeta, p.upsilon, "Y"),
                            {}, {}, {}, {}};
    lift.gamma = [=](int k, int a, int a2, int) -> Complex {
        return k == kSigma && a == X && a2 == X ? tl : Complex(1.0);
    };
    lift.eta = [=](int h, int c, int c2, int) -> Complex {
        return h == kSigma && c == Y && c2 == Y ? tr : Complex(1.0);
    };
    lift.L2 = [](int, int, int) -> Complex { return 1.0; };
    lift.R2 = [](int, int, int) -> Complex { return 1.0; };
    return lift;
}

FusionCategoryData build_TY_TY_bicrossed(const TYTYParams& p) {
    return build_bicrossed_category(ty_ty_lifting(p));
}

}  // namespace fusionbench
