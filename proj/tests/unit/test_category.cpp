#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "fusionbench/category.hpp"
#include "fusionbench/errors.hpp"
#include "fusionbench/group.hpp"
#include "fusionbench/matched_pair.hpp"
#include "fusionbench/rings.hpp"

using namespace fusionbench;

namespace {

const double kRootHalf = 1 / std::sqrt(2.0);
const Complex I(0.0, 1.0);

Complex root_of_unity(int n, int k) { return std::polar(1.0, 2 * std::numbers::pi * k / n); }

Bicharacter ising_chi() { return diagonal_bicharacter({2}, {-1.0}); }

double pentagon(const FusionCategoryData& cat) { return check_pentagon(cat).find("pentagon")->residual.value(); }

double oracle_pentagon(const FusionCategoryData& cat) {
    return oracle::pentagon_residual(oracle::from_library(cat.ring),
                                     [&](int a, int b, int c, int d, int e, int f) { return cat.F(a, b, c, d, e, f); });
}

// Tambara-Yamagami F-symbols on Γ = {0..m-1}, X = m.
oracle::FSymbol ty_symbol(const Bicharacter& chi, Complex tau) {
    const int X = chi.group.order();
    return [chi, tau, X](int a, int b, int c, int d, int e, int f) -> Complex {
        if (a < X && b == X && c < X) return chi(a, c);
        if (a == X && b < X && c == X) return chi(b, d);
        if (a == X && b == X && c == X) return tau / chi(e, f);
        return 1.0;
    };
}

// Patterns of (x1, x2, x3) in TY(H) ⋈ TY(K) as strings like "hY", "Xk".
using Pattern = std::array<std::string, 3>;

// TY ⋈ TY with trivial φ, ψ: the Deligne product F-symbols times a sign
// depending only on the pattern.
oracle::FSymbol ty_ty_symbol(const TYTYParams& p, std::function<Complex(const Pattern&)> sign) {
    const int nh = p.H().order(), nk = p.K().order();
    auto FH = ty_symbol(p.chi, p.tau), FK = ty_symbol(p.zeta, p.upsilon);
    return [=](int x1, int x2, int x3, int x, int ex, int fx) -> Complex {
        const int w = nk + 1;
        auto tag = [&](int y) {
            return std::string(y / w == nh ? "X" : "h") + (y % w == nk ? "Y" : "k");
        };
        return FH(x1 / w, x2 / w, x3 / w, x / w, ex / w, fx / w) * FK(x1 % w, x2 % w, x3 % w, x % w, ex % w, fx % w) *
               sign({tag(x1), tag(x2), tag(x3)});
    };
}

std::function<Complex(const Pattern&)> generic_signs(int tl, int tr) {
    return [=](const Pattern& q) -> Complex {
        Complex v = 1.0;
        if (q[0][1] == 'Y' && q[1][0] == 'X' && q[2][0] == 'X') v *= tl;
        if (q[0][1] == 'Y' && q[1][1] == 'Y' && q[2][0] == 'X') v *= tr;
        return v;
    };
}

// θ placement copied from the explicit associator list of the family, first
// occurrence winning where the list repeats an entry.
std::function<Complex(const Pattern&)> listed_signs(int tl, int tr) {
    std::map<Pattern, int> L = {
        {{"hY", "hY", "Xk"}, tr},      {{"hY", "XY", "Xk"}, tl * tr}, {{"XY", "hY", "Xk"}, tr},
        {{"hY", "Xk", "XY"}, tl},      {{"XY", "Xk", "Xk"}, tl},      {{"XY", "XY", "Xk"}, tl * tr},
        {{"Xk", "XY", "Xk"}, tl},      {{"XY", "Xk", "XY"}, tl},      {{"hY", "hY", "XY"}, tr},
        {{"XY", "XY", "hY"}, tl},      {{"hY", "XY", "XY"}, tr},      {{"XY", "hY", "XY"}, tr},
        {{"XY", "XY", "XY"}, tl * tr},
    };
    return [L](const Pattern& q) -> Complex {
        auto it = L.find(q);
        return it == L.end() ? 1.0 : static_cast<double>(it->second);
    };
}

TYTYParams ty_ty_c2(int tl, int tr) {
    return TYTYParams{ising_chi(), kRootHalf, ising_chi(), kRootHalf, {0, 1}, {0, 1}, tl, tr};
}

void same_entries(const FusionCategoryData& cat, const oracle::FSymbol& F, double tol = 1e-12) {
    double worst = 0.0;
    for (const auto& [key, blk] : cat.assoc)
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
            for (std::size_t c = 0; c < blk.cols.size(); ++c)
                worst = std::max(worst, std::abs(blk.m(r, c) - F(key.a, key.b, key.c, key.d, blk.rows[r], blk.cols[c])));
    CHECK(worst < tol);
}

bool is_identity(const AssocBlock& b) {
    return b.m.rows() == b.m.cols() && (b.m - Eigen::MatrixXcd::Identity(b.m.rows(), b.m.cols())).norm() < 1e-12;
}

// Klein four-group element x = g^a h^b, read off the library table.
std::pair<int, int> klein_coords(const FiniteGroup& G, int x) {
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int y = G.identity();
            if (a) y = G.mul(y, 1);
            if (b) y = G.mul(y, 2);
            if (y == x) return {a, b};
        }
    throw std::logic_error("not a Klein element");
}

// χ(g^a h^b, g^c h^d) = (-1)^(s00 ac + s01 (ad + bc) + s11 bd)
Bicharacter klein_chi(int s00, int s01, int s11) {
    FiniteGroup G = cyclic_product(2, 2);
    Bicharacter chi{G, std::vector<Complex>(16)};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            auto [a, b] = klein_coords(G, x);
            auto [c, d] = klein_coords(G, y);
            chi.table[x * 4 + y] = (s00 * a * c + s01 * (a * d + b * c) + s11 * b * d) % 2 ? -1.0 : 1.0;
        }
    return chi;
}

// The scalar lifting data of the family, assembled without any parameter
// validation, for probing parameter sets the validator rejects.
FusionCategoryData unchecked_ty_pointed(const TYPointedParams& p) {
    const int nk = p.K().order(), X = p.Gamma().order();
    CategoricalLifting lift{ty_pointed_matched_pair(p), build_TY(p.chi, p.tau), build_pointed(p.omega), {}, {}, {}, {}};
    lift.gamma = [=](int k, int a, int a2, int) -> Complex {
        if (a < X) return p.mu[k];
        if (a2 < X) return p.mu[p.phi[k]];
        return p.f[k];
    };
    lift.eta = [=](int h, int c, int c2, int) -> Complex { return h == 1 ? p.beta[c * nk + c2] : 1.0; };
    lift.L2 = [=](int k, int k2, int a) -> Complex { return a == X ? p.lambda_X[k * nk + k2] : 1.0; };
    lift.R2 = [=](int h, int h2, int c) -> Complex { return p.lambda[(c * 2 + h) * 2 + h2]; };
    return build_bicrossed_category(lift);
}

TYPointedParams ty_pointed_c2() { return TYPointedParams::trivial(ising_chi(), kRootHalf, trivial_cocycle(cyclic_group(2))); }

// Parameter sets accepted by the validator.
std::vector<TYPointedParams> ty_pointed_catalog() {
    std::vector<TYPointedParams> out;
    out.push_back(ty_pointed_c2());
    out.push_back(TYPointedParams::trivial(ising_chi(), -kRootHalf, cyclic_cocycle(2, 1)));
    {
        // β(g,g) = i needs λ_g(σ,σ) = ±i.
        TYPointedParams p = ty_pointed_c2();
        p.beta[3] = I;
        p.lambda[(1 * 2 + 1) * 2 + 1] = I;
        out.push_back(p);
    }
    {
        TYPointedParams p = ty_pointed_c2();
        p.beta[3] = I;
        p.lambda[(1 * 2 + 1) * 2 + 1] = -I;
        p.mu = {1.0, -1.0};
        out.push_back(p);
    }
    {
        // inversion on C3
        TYPointedParams p = TYPointedParams::trivial(ising_chi(), kRootHalf, trivial_cocycle(cyclic_group(3)));
        p.phi = {0, 2, 1};
        out.push_back(p);
    }
    {
        // β(a,b) = q^{ab} with λ_k(σ,σ) = q^{k^2} on C3
        TYPointedParams p = TYPointedParams::trivial(ising_chi(), kRootHalf, trivial_cocycle(cyclic_group(3)));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) p.beta[a * 3 + b] = root_of_unity(3, a * b);
        for (int k = 0; k < 3; ++k) p.lambda[(k * 2 + 1) * 2 + 1] = root_of_unity(3, k * k);
        out.push_back(p);
    }
    {
        // Γ = C2xC2 with ω trivial
        TYPointedParams p =
            TYPointedParams::trivial(klein_chi(1, 0, 1), 0.5, trivial_cocycle(cyclic_group(2)));
        out.push_back(p);
    }
    {
        // λ_k ≡ sign(k) is a normalization change moving the right unitor.
        TYPointedParams p = ty_pointed_c2();
        for (int t = 4; t < 8; ++t) p.lambda[t] = -1.0;
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("bicharacters") {
    CHECK(validate_bicharacter(ising_chi()).pass);
    Report deg = validate_bicharacter(diagonal_bicharacter({2}, {1.0}));
    CHECK_FALSE(deg.pass);
    CHECK_FALSE(deg.find("nondegenerate")->pass);
    CHECK(validate_bicharacter(diagonal_bicharacter({4}, {I})).pass);
    CHECK(validate_bicharacter(klein_chi(1, 0, 1)).pass);
    CHECK(validate_bicharacter(klein_chi(1, 1, 0)).pass);
    CHECK_FALSE(validate_bicharacter(klein_chi(1, 0, 0)).pass);
    Bicharacter asym = ising_chi();
    asym.group = cyclic_group(2);
    asym.table = {1.0, I, 1.0, -1.0};
    CHECK_FALSE(validate_bicharacter(asym).pass);
    CHECK_THROWS_AS(validate_bicharacter(Bicharacter{symmetric_group_3(), std::vector<Complex>(36, 1.0)}), InputError);
}

TEST_CASE("3-cocycles") {
    CHECK(validate_cocycle(trivial_cocycle(symmetric_group_3())).pass);
    ThreeCocycle w = cyclic_cocycle(2, 1);
    CHECK(w(1, 1, 1) == Complex(-1.0));
    CHECK(validate_cocycle(w).pass);
    for (int p = 0; p < 4; ++p) CHECK(validate_cocycle(cyclic_cocycle(4, p)).pass);

    ThreeCocycle bad = trivial_cocycle(cyclic_group(2));
    bad.table[7] = I;
    Report r = validate_cocycle(bad);
    CHECK_FALSE(r.pass);
    const Check* c = r.find("cocycle_identity");
    REQUIRE(c->residual.has_value());
    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    worst = std::max(worst, std::abs(bad(b, x, y) * bad(a, b ^ x, y) * bad(a, b, x) -
                                                     bad(a ^ b, x, y) * bad(a, b, x ^ y)));
    CHECK(*c->residual == doctest::Approx(worst).epsilon(1e-12));
    CHECK(worst == doctest::Approx(2.0));
}

TEST_CASE("pointed categories") {
    FusionCategoryData triv = build_pointed(trivial_cocycle(cyclic_group(3)));
    for (const auto& [key, blk] : triv.assoc) CHECK(is_identity(blk));
    FusionCategoryData cat = build_pointed(cyclic_cocycle(2, 1));
    CHECK(cat.block(1, 1, 1, 1).m(0, 0) == Complex(-1.0));
    CHECK(pentagon(cat) < 1e-12);
    CHECK(check_triangle(cat, 1e-12).pass);
    CHECK(oracle_pentagon(cat) < 1e-12);
    for (int p = 1; p < 4; ++p) {
        FusionCategoryData c4 = build_pointed(cyclic_cocycle(4, p));
        CHECK(pentagon(c4) < 1e-12);
        CHECK(oracle_pentagon(c4) < 1e-12);
    }
    ThreeCocycle bad = trivial_cocycle(cyclic_group(2));
    bad.table[7] = I;
    CHECK_THROWS_AS(build_pointed(bad), ValidationError);
}

TEST_CASE("Tambara-Yamagami categories") {
    for (double tau : {kRootHalf, -kRootHalf}) {
        FusionCategoryData cat = build_TY(ising_chi(), tau);
        same_entries(cat, ty_symbol(ising_chi(), tau));
        CHECK(pentagon(cat) < 1e-9);
        CHECK(oracle_pentagon(cat) < 1e-9);
        CHECK(check_triangle(cat, 1e-12).pass);
    }
    FusionCategoryData ising = build_TY(ising_chi(), kRootHalf);
    CHECK(ising.F(1, 2, 1, 2, 2, 2) == Complex(-1.0));

    std::vector<std::pair<Bicharacter, Complex>> more = {
        {diagonal_bicharacter({3}, {root_of_unity(3, 1)}), 1 / std::sqrt(3.0)},
        {diagonal_bicharacter({4}, {I}), -0.5},
        {klein_chi(1, 0, 1), 0.5},
        {klein_chi(0, 1, 0), -0.5},
    };
    for (const auto& [chi, tau] : more) {
        FusionCategoryData cat = build_TY(chi, tau);
        same_entries(cat, ty_symbol(chi, tau));
        CHECK(pentagon(cat) < 1e-9);
        CHECK(oracle_pentagon(cat) < 1e-9);
    }

    CHECK_THROWS_AS(build_TY(ising_chi(), 0.5), ValidationError);
    CHECK_THROWS_AS(build_TY(diagonal_bicharacter({2}, {1.0}), kRootHalf), ValidationError);
}

TEST_CASE("tampering is detected") {
    FusionCategoryData cat = build_TY(ising_chi(), kRootHalf);
    cat.assoc.at({2, 2, 2, 2}).m(1, 1) *= -1.0;
    Report r = check_pentagon(cat);
    CHECK_FALSE(r.pass);
    CHECK(*r.find("pentagon")->residual >= 0.5);
    CHECK(oracle_pentagon(cat) >= 0.5);

    FusionCategoryData tri = build_TY(ising_chi(), kRootHalf);
    tri.assoc.at({2, 0, 2, 0}).m(0, 0) = 2.0;
    CHECK_FALSE(check_triangle(tri).pass);

    FusionCategoryData missing = build_TY(ising_chi(), kRootHalf);
    missing.assoc.erase({2, 2, 2, 2});
    CHECK_THROWS_AS(check_pentagon(missing), StructuralError);
    CHECK_FALSE(validate_category_structure(missing).pass);
}

TEST_CASE("single-entry sign flips break the pentagon") {
    std::vector<FusionCategoryData> cats = {build_TY(ising_chi(), kRootHalf), build_TY(ising_chi(), -kRootHalf),
                                            build_TY(klein_chi(1, 0, 1), 0.5),
                                            build_TY_pointed_bicrossed(ty_pointed_c2()),
                                            build_TY_TY_bicrossed(ty_ty_c2(-1, 1))};
    for (const auto& cat : cats) {
        int flipped = 0;
        for (const auto& [key, blk] : cat.assoc) {
            if (is_identity(blk)) continue;
            for (Eigen::Index r = 0; r < blk.m.rows(); ++r)
                for (Eigen::Index c = 0; c < blk.m.cols(); ++c) {
                    if (std::abs(blk.m(r, c)) < 1e-12) continue;
                    FusionCategoryData bad = cat;
                    bad.assoc.at(key).m(r, c) *= -1.0;
                    INFO("flipped (", key.a, ",", key.b, ",", key.c, ";", key.d, ")[", r, ",", c, "]");
                    CHECK(pentagon(bad) >= 0.1);
                    ++flipped;
                }
        }
        CHECK(flipped > 0);
    }
}

TEST_CASE("on Vec_C2 a sign flip moves between the two cocycles") {
    // The only non-identity block of the nontrivial cocycle is (g,g,g) = [-1];
    // flipping it gives the trivial cocycle, which satisfies the pentagon.
    FusionCategoryData w = build_pointed(cyclic_cocycle(2, 1));
    int non_identity = 0;
    for (const auto& [key, blk] : w.assoc) non_identity += !is_identity(blk);
    CHECK(non_identity == 1);
    w.assoc.at({1, 1, 1, 1}).m(0, 0) *= -1.0;
    CHECK(pentagon(w) == 0.0);
    FusionCategoryData triv = build_pointed(trivial_cocycle(cyclic_group(2)));
    for (const auto& [key, blk] : triv.assoc) CHECK(blk.m == w.assoc.at(key).m);

    // Entries of identity blocks are still detected, e.g. ω(g,g,e).
    FusionCategoryData v = build_pointed(cyclic_cocycle(2, 1));
    v.assoc.at({1, 1, 0, 0}).m(0, 0) *= -1.0;
    CHECK(pentagon(v) >= 0.1);
}

TEST_CASE("gauge transformations preserve the pentagon") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::vector<FusionCategoryData> cats = {build_TY(diagonal_bicharacter({3}, {root_of_unity(3, 1)}), 1 / std::sqrt(3.0)),
                                            build_TY_TY_bicrossed(ty_ty_c2(-1, -1)),
                                            build_TY_pointed_bicrossed(ty_pointed_catalog()[2])};
    for (const auto& cat : cats) {
        const int n = cat.ring.rank();
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Complex> u(n * n);
            for (auto& x : u) x = std::polar(1.0, angle(rng));
            auto g = [&](int a, int b) { return u[a * n + b]; };
            FusionCategoryData t = cat;
            for (auto& [key, blk] : t.assoc)
                for (std::size_t r = 0; r < blk.rows.size(); ++r)
                    for (std::size_t c = 0; c < blk.cols.size(); ++c)
                        blk.m(r, c) *= g(key.a, key.b) * g(blk.rows[r], key.c) / (g(key.b, key.c) * g(key.a, blk.cols[c]));
            CHECK(pentagon(t) < 1e-9);
            CHECK(std::abs(pentagon(t) - pentagon(cat)) < 1e-9);
        }
    }
}

TEST_CASE("TY bicrossed pointed: displayed formulas") {
    for (const auto& p : ty_pointed_catalog()) {
        REQUIRE(validate_ty_pointed_params(p).pass);
        FusionCategoryData shown = build_TY_pointed_bicrossed(p);
        FusionCategoryData generic = build_bicrossed_category(ty_pointed_lifting(p));
        CHECK(shown.ring.constants() == generic.ring.constants());
        CHECK(shown.ring.constants() == ring_bicrossed(ty_pointed_matched_pair(p)).constants());
        REQUIRE(shown.assoc.size() == generic.assoc.size());
        double diff = 0.0;
        for (const auto& [key, blk] : shown.assoc) diff = std::max(diff, (blk.m - generic.assoc.at(key).m).cwiseAbs().maxCoeff());
        CHECK(diff < 1e-12);
        for (std::size_t x = 0; x < shown.unit_l.size(); ++x) {
            CHECK(std::abs(shown.unit_l[x] - generic.unit_l[x]) < 1e-12);
            CHECK(std::abs(shown.unit_r[x] - generic.unit_r[x]) < 1e-12);
        }
        CHECK(validate_category_structure(shown).pass);
        CHECK(pentagon(shown) < 1e-9);
        CHECK(oracle_pentagon(shown) < 1e-9);
        CHECK(check_triangle(shown, 1e-12).pass);
    }
}

TEST_CASE("TY bicrossed pointed: trivial data is the Deligne product") {
    FusionCategoryData cat = build_TY_pointed_bicrossed(ty_pointed_c2());
    FusionCategoryData ty = build_TY(ising_chi(), kRootHalf);
    const int nk = 2;
    for (const auto& [key, blk] : cat.assoc)
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
            for (std::size_t c = 0; c < blk.cols.size(); ++c)
                CHECK(blk.m(r, c) == ty.F(key.a / nk, key.b / nk, key.c / nk, key.d / nk, blk.rows[r] / nk,
                                          blk.cols[c] / nk));
}

TEST_CASE("TY bicrossed pointed: nontrivial unitors") {
    TYPointedParams p = ty_pointed_catalog().back();
    FusionCategoryData cat = build_TY_pointed_bicrossed(p);
    CHECK(cat.unit_r[1] == Complex(-1.0));
    CHECK(check_triangle(cat, 1e-12).pass);
    CHECK(validate_ty_pointed_params(p).find("lambda_k_normalization")->witness.find("!= 1") != std::string::npos);
    cat.unit_r[1] = 1.0;
    CHECK_FALSE(check_triangle(cat).pass);
}

TEST_CASE("TY bicrossed pointed: parameter gatekeeping") {
    auto rejects = [](const TYPointedParams& p, const std::string& check) {
        Report r = validate_ty_pointed_params(p);
        CHECK_FALSE(r.pass);
        const Check* c = r.find(check);
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->pass);
        CHECK_FALSE(c->witness.empty());
        CHECK_THROWS_AS(build_TY_pointed_bicrossed(p), ValidationError);
    };
    {
        TYPointedParams p = ty_pointed_c2();
        p.f = {2.0, 2.0};
        rejects(p, "f_conditions");
    }
    {
        TYPointedParams p = ty_pointed_c2();
        p.tau = 0.5;
        rejects(p, "tau_normalization");
    }
    {
        TYPointedParams p = TYPointedParams::trivial(klein_chi(1, 1, 0), 0.5, trivial_cocycle(cyclic_group(2)));
        p.phi_action[1] = {0, 2, 1, 3};
        rejects(p, "chi_invariance");
    }
    {
        // β(e,g) = -1 alone breaks the β condition.
        TYPointedParams p = ty_pointed_c2();
        p.beta[1] = -1.0;
        rejects(p, "beta_condition");
    }
    {
        TYPointedParams p = ty_pointed_c2();
        p.phi_action[1] = {1, 0};
        rejects(p, "phi_action");
    }
    {
        TYPointedParams p = ty_pointed_c2();
        p.mu = {1.0, 2.0};
        rejects(p, "mu_character");
    }
}

TEST_CASE("TY bicrossed pointed: β and λ_k must be compatible") {
    struct Probe {
        TYPointedParams p;
        double min_residual;
    };
    std::vector<Probe> probes;
    {
        TYPointedParams p = ty_pointed_c2();
        p.beta[3] = I;
        probes.push_back({p, 1.0});
    }
    {
        TYPointedParams p = ty_pointed_c2();
        for (int h = 0; h < 4; ++h) p.lambda[h] = std::polar(1.0, 0.3);
        probes.push_back({p, 0.2});
    }
    {
        TYPointedParams p = ty_pointed_c2();
        p.beta.assign(4, I);
        probes.push_back({p, 1.0});
    }
    for (const auto& [p, floor] : probes) {
        Report r = validate_ty_pointed_params(p);
        CHECK(r.find("beta_condition")->pass);
        CHECK(r.find("lambda_k_condition")->pass);
        CHECK_FALSE(r.find("lambda_beta_compatibility")->pass);
        FusionCategoryData cat = unchecked_ty_pointed(p);
        CHECK(oracle_pentagon(cat) >= floor);
    }

    // q^{-k^2} has the wrong sign of the exponent.
    TYPointedParams p = TYPointedParams::trivial(ising_chi(), kRootHalf, trivial_cocycle(cyclic_group(3)));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) p.beta[a * 3 + b] = root_of_unity(3, a * b);
    for (int k = 0; k < 3; ++k) p.lambda[(k * 2 + 1) * 2 + 1] = root_of_unity(3, -k * k);
    CHECK_FALSE(validate_ty_pointed_params(p).find("lambda_beta_compatibility")->pass);
    CHECK(oracle_pentagon(unchecked_ty_pointed(p)) > 0.1);
}

TEST_CASE("TY bicrossed TY: every sign choice lifts") {
    for (int tl : {1, -1})
        for (int tr : {1, -1}) {
            TYTYParams p = ty_ty_c2(tl, tr);
            FusionCategoryData cat = build_TY_TY_bicrossed(p);
            CHECK(cat.ring.rank() == 9);
            CHECK(cat.ring.constants() == ring_bicrossed(ty_ty_matched_pair(p)).constants());
            same_entries(cat, ty_ty_symbol(p, generic_signs(tl, tr)));
            CHECK(pentagon(cat) < 1e-9);
            CHECK(oracle_pentagon(cat) < 1e-9);
            CHECK(check_triangle(cat, 1e-12).pass);
            // The block on (X⋈Y)^3 is υτθθ/(χζ).
            const AssocBlock& top = cat.block(8, 8, 8, 8);
            CHECK(top.m.rows() == 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    int h = top.rows[r] / 3, k = top.rows[r] % 3, h2 = top.cols[c] / 3, k2 = top.cols[c] % 3;
                    Complex want = 0.5 * double(tl * tr) / (p.chi(h, h2) * p.zeta(k, k2));
                    CHECK(std::abs(top.m(r, c) - want) < 1e-12);
                }
        }
}

TEST_CASE("TY bicrossed TY: the listed sign placement fails") {
    TYTYParams p = ty_ty_c2(1, 1);
    oracle::DenseRing D = oracle::from_library(build_TY_TY_bicrossed(p).ring);
    CHECK(oracle::pentagon_residual(D, ty_ty_symbol(p, listed_signs(1, 1))) < 1e-9);
    for (auto [tl, tr] : {std::pair{-1, 1}, std::pair{-1, -1}}) {
        CHECK(oracle::pentagon_residual(D, ty_ty_symbol(p, generic_signs(tl, tr))) < 1e-9);
        CHECK(oracle::pentagon_residual(D, ty_ty_symbol(p, listed_signs(tl, tr))) >= 1.0);
    }
}

TEST_CASE("TY bicrossed TY: larger groups and automorphisms") {
    TYTYParams p{klein_chi(1, 0, 1), 0.5, diagonal_bicharacter({3}, {root_of_unity(3, 1)}), -1 / std::sqrt(3.0),
                 {0, 1, 2, 3}, {0, 1, 2}, -1, 1};
    REQUIRE(validate_ty_ty_params(p).pass);
    FusionCategoryData cat = build_TY_TY_bicrossed(p);
    CHECK(cat.ring.rank() == 20);
    CHECK(check_pentagon(cat, 1e-9, 4).pass);
    CHECK(check_triangle(cat, 1e-12).pass);

    // Invariance in each variable separately plus nondegeneracy leaves only
    // φ = id: the swap on C2xC2 is rejected for every admissible χ.
    int nondegenerate = 0;
    for (int s00 = 0; s00 < 2; ++s00)
        for (int s01 = 0; s01 < 2; ++s01)
            for (int s11 = 0; s11 < 2; ++s11) {
                Bicharacter chi = klein_chi(s00, s01, s11);
                if (!validate_bicharacter(chi).pass) continue;
                ++nondegenerate;
                TYTYParams q = p;
                q.chi = chi;
                q.phi = {0, 2, 1, 3};
                CHECK_FALSE(validate_ty_ty_params(q).find("chi_invariance")->pass);
                TYPointedParams t = TYPointedParams::trivial(chi, 0.5, trivial_cocycle(cyclic_group(2)));
                t.phi_action[1] = {0, 2, 1, 3};
                CHECK_FALSE(validate_ty_pointed_params(t).find("chi_invariance")->pass);
            }
    CHECK(nondegenerate == 4);

    TYTYParams q = ty_ty_c2(1, -1);
    q.zeta = diagonal_bicharacter({3}, {root_of_unity(3, 1)});
    q.upsilon = 1 / std::sqrt(3.0);
    q.psi = {0, 2, 1};  // ζ(k^2, k) = ζ(k,k)^2 != ζ(k,k)
    Report r = validate_ty_ty_params(q);
    CHECK_FALSE(r.find("zeta_invariance")->pass);
    CHECK_THROWS_AS(build_TY_TY_bicrossed(q), ValidationError);
}

TEST_CASE("TY bicrossed TY: parameter gatekeeping") {
    TYTYParams p = ty_ty_c2(1, 1);
    p.chi = klein_chi(1, 1, 0);
    p.tau = 0.5;
    p.phi = {0, 2, 1, 3};
    Report r = validate_ty_ty_params(p);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.find("chi_invariance")->pass);
    CHECK_THROWS_AS(build_TY_TY_bicrossed(p), ValidationError);

    TYTYParams s = ty_ty_c2(2, 1);
    CHECK_FALSE(validate_ty_ty_params(s).find("theta_signs")->pass);
    TYTYParams u = ty_ty_c2(1, 1);
    u.upsilon = 1.0;
    CHECK_FALSE(validate_ty_ty_params(u).find("upsilon_normalization")->pass);
}

TEST_CASE("structure validation") {
    FusionCategoryData cat = build_TY(ising_chi(), kRootHalf);
    CHECK(validate_category_structure(cat).pass);
    FusionCategoryData sing = cat;
    sing.assoc.at({2, 2, 2, 2}).m.setZero();
    CHECK_FALSE(validate_category_structure(sing).find("blocks_invertible")->pass);
    FusionCategoryData unit = cat;
    unit.unit_l[2] = 0.0;
    CHECK_FALSE(validate_category_structure(unit).find("unitors")->pass);
    CHECK(identity_associator(fibonacci_ring()).F(1, 1, 1, 1, 0, 0) == Complex(1.0));
    CHECK_THROWS_AS(identity_associator(fibonacci_ring()).F(1, 1, 1, 0, 0, 0), StructuralError);
    CHECK_THROWS_AS(identity_associator(ring_bicrossed(ty_ty_matched_pair(ty_ty_c2(1, 1)))).block(0, 0, 0, 1),
                    StructuralError);
}

TEST_CASE("pentagon threads agree") {
    FusionCategoryData cat = build_TY_TY_bicrossed(ty_ty_c2(-1, -1));
    Report one = check_pentagon(cat, 1e-9, 1);
    Report four = check_pentagon(cat, 1e-9, 4);
    CHECK(one.to_text() == four.to_text());
}
