#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/group.hpp"
#include "fusionbench/matched_pair.hpp"
#include "fusionbench/report.hpp"

namespace fusionbench {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kParameterTolerance = 1e-9;

struct Bicharacter {
    FiniteGroup group;
    std::vector<Complex> table;  // n x n
    Complex operator()(int g, int h) const { return table[g * group.order() + h]; }
};

struct ThreeCocycle {
    FiniteGroup group;
    std::vector<Complex> table;  // n x n x n
    Complex operator()(int a, int b, int c) const {
        const int n = group.order();
        return table[(a * n + b) * n + c];
    }
};

Report validate_bicharacter(const Bicharacter& b);
Report validate_cocycle(const ThreeCocycle& w);

ThreeCocycle trivial_cocycle(const FiniteGroup& G);
// omega_p(a,b,c) = exp(2 pi i p a (b + c - [b+c]) / n^2) on Cn.
ThreeCocycle cyclic_cocycle(int n, int p);
// chi(a, b) = prod_t q_t^{a_t b_t} on C_{n1} (x C_{n2}), built with
// cyclic_group or cyclic_product; one q per factor.
Bicharacter diagonal_bicharacter(const std::vector<int>& factors, const std::vector<Complex>& q);

struct BlockKey {
    int a, b, c, d;
    auto operator<=>(const BlockKey&) const = default;
};

// F^{abc}_d: rows are the e with N_{ab}^e N_{ec}^d = 1, columns the f with
// N_{bc}^f N_{af}^d = 1, both ascending.
struct AssocBlock {
    std::vector<int> rows, cols;
    Eigen::MatrixXcd m;
};

struct FusionCategoryData {
    FusionRing ring;
    std::map<BlockKey, AssocBlock> assoc;
    std::vector<Complex> unit_l, unit_r;

    const AssocBlock& block(int a, int b, int c, int d) const;
    // Entry F^{abc}_d[e,f]; throws StructuralError if absent.
    Complex F(int a, int b, int c, int d, int e, int f) const;
};

// An all-identity associator on a multiplicity-free ring.
FusionCategoryData identity_associator(const FusionRing& ring);
std::vector<int> row_space(const FusionRing& R, int a, int b, int c, int d);
std::vector<int> col_space(const FusionRing& R, int a, int b, int c, int d);

// Multiplicity-free ring, blocks exactly on admissible tuples with the
// admissible row/column lists, square and invertible, unitors nonzero.
Report validate_category_structure(const FusionCategoryData& cat);

Report check_pentagon(const FusionCategoryData& cat, double tol = kDefaultTolerance, int threads = 1);
Report check_triangle(const FusionCategoryData& cat, double tol = kDefaultTolerance);

FusionCategoryData build_pointed(const ThreeCocycle& w);
FusionCategoryData build_TY(const Bicharacter& chi, Complex tau, const std::string& x = "X");

// Scalar data lifting a ring matched pair to the bicrossed category:
// gamma(k, a, a', x) is γ^k_{a,a'} on the summand x of a⊗a';
// eta(h, c, c', y) is η^h_{c,c'} on y in c⊗c'; L2(k, k', a) and
// R2(h, h', c) are the action constraints.
struct CategoricalLifting {
    RingMatchedPair pair;
    FusionCategoryData A, C;
    std::function<Complex(int, int, int, int)> gamma;
    std::function<Complex(int, int, int, int)> eta;
    std::function<Complex(int, int, int)> L2;
    std::function<Complex(int, int, int)> R2;
};

FusionCategoryData build_bicrossed_category(const CategoricalLifting& lift);

struct TYPointedParams {
    Bicharacter chi;
    Complex tau;
    ThreeCocycle omega;                        // on K
    std::vector<int> phi;                      // automorphism of K, order <= 2
    std::vector<std::vector<int>> phi_action;  // [k][g] = φ_k(g)
    std::vector<Complex> lambda_X;             // K x K
    std::vector<Complex> mu;                   // K
    std::vector<Complex> f;                    // K
    std::vector<Complex> beta;                 // K x K
    std::vector<Complex> lambda;               // [k][h][h'], h, h' in {e, σ}

    const FiniteGroup& Gamma() const { return chi.group; }
    const FiniteGroup& K() const { return omega.group; }
    // Every optional parameter set to its trivial value.
    static TYPointedParams trivial(Bicharacter chi, Complex tau, ThreeCocycle omega);
};

Report validate_ty_pointed_params(const TYPointedParams& p);
RingMatchedPair ty_pointed_matched_pair(const TYPointedParams& p);
CategoricalLifting ty_pointed_lifting(const TYPointedParams& p);
// Blocks from the explicit closed-form associator list of the family.
FusionCategoryData build_TY_pointed_bicrossed(const TYPointedParams& p);

struct TYTYParams {
    Bicharacter chi;
    Complex tau;
    Bicharacter zeta;
    Complex upsilon;
    std::vector<int> phi;  // automorphism of H
    std::vector<int> psi;  // automorphism of K
    int theta_l = 1, theta_r = 1;

    const FiniteGroup& H() const { return chi.group; }
    const FiniteGroup& K() const { return zeta.group; }
};

Report validate_ty_ty_params(const TYTYParams& p);
RingMatchedPair ty_ty_matched_pair(const TYTYParams& p);
CategoricalLifting ty_ty_lifting(const TYTYParams& p);
FusionCategoryData build_TY_TY_bicrossed(const TYTYParams& p);

// Order-two group {e, σ} grading TY rings.
FiniteGroup sigma_group();
// Renames "g"/"h" generator letters in element labels, e.g. to "k"/"l".
FiniteGroup rename_generators(const FiniteGroup& G, const std::string& g, const std::string& h);

}  // namespace fusionbench
