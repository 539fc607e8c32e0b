#pragma once

#include <optional>
#include <vector>

#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/matched_pair.hpp"
#include "fusionbench/report.hpp"

namespace fusionbench {

// R = A•C. Positions index the sorted subring indices:
// ac[p*|C| + q] = basis index of A[p]·C[q]; ca likewise for C[q]·A[p].
struct Factorization {
    FusionRing R;
    Subring A, C;
    std::vector<int> ac;
    std::vector<int> ca;

    int a_size() const { return A.size(); }
    int c_size() const { return C.size(); }
    int product(int p, int q) const { return ac[p * c_size() + q]; }
};

struct FactorizationCheck {
    Report report;
    std::optional<Factorization> factorization;  // set iff report.pass
};

FactorizationCheck check_exact_factorization(const FusionRing& R, const std::vector<int>& A,
                                             const std::vector<int>& C);

// ell[q][p] = position of ℓ_c(a), r[p][q] = position of r_a(c), where
// C[q]·A[p] = A[ℓ]·C[r].
struct RecoveredActions {
    std::vector<std::vector<int>> ell;
    std::vector<std::vector<int>> r;
};

RecoveredActions recover_actions(const Factorization& f);
// A and C as rings of their own, graded by their universal groups.
RingMatchedPair canonical_matched_pair(const Factorization& f);
Report certify_theorem_iso(const Factorization& f);

// A = {a⋈1}, C = {1⋈c} inside a ring whose labels carry the pair separator.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bicrossed_split(const FusionRing& R);

}  // namespace fusionbench
