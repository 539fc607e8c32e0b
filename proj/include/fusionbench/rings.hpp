#pragma once

#include <string>

#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/group.hpp"

namespace fusionbench {

// ZG with basis the group elements, in group index order.
FusionRing group_ring(const FiniteGroup& G);
// Basis Gamma followed by one non-invertible element named `x` (Gamma abelian).
FusionRing tambara_yamagami_ring(const FiniteGroup& Gamma, const std::string& x = "X");
// {1, x} with x^2 = 1 + x.
FusionRing fibonacci_ring();

}  // namespace fusionbench
