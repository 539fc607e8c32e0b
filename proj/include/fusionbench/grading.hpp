#pragma once

#include <optional>
#include <vector>

#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/group.hpp"
#include "fusionbench/report.hpp"

namespace fusionbench {

struct Grading {
    FiniteGroup group;
    std::vector<int> degree;  // basis index -> group element
    bool operator==(const Grading&) const = default;
};

// U(R) and the universal degree map. Group elements are the components of the
// adjoint action, ordered by smallest basis index and labelled "[b]" after it.
using UniversalGrading = Grading;

Subring adjoint_subring(const FusionRing& R);
UniversalGrading universal_grading(const FusionRing& R);
Subring pointed_subring(const FusionRing& R);

struct Nilpotency {
    bool nilpotent = false;
    int depth = 0;  // strictly decreasing steps of the adjoint series
};
Nilpotency is_nilpotent(const FusionRing& R);

Report verify_grading(const FusionRing& R, const FiniteGroup& G, const std::vector<int>& degree);

// The surjective map U(R) -> G commuting with degrees, located by search over
// all homomorphisms; nullopt when none exists.
std::optional<std::vector<int>> factor_through_universal(const FusionRing& R, const Grading& g);

}  // namespace fusionbench
