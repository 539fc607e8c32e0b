#pragma once

#include <string>
#include <vector>

#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/grading.hpp"
#include "fusionbench/group.hpp"
#include "fusionbench/report.hpp"

namespace fusionbench {

inline constexpr int kRankCap = 64;
inline constexpr const char* kPairSeparator = "⋈";  // the bowtie in "a⋈c"

// Tables are indexed [k][h]: act_l[k][h] = k ▶ h, act_r[k][h] = k ◀ h.
struct GroupMatchedPair {
    FiniteGroup H, K;
    std::vector<std::vector<int>> act_l;
    std::vector<std::vector<int>> act_r;

    static GroupMatchedPair trivial(const FiniteGroup& H, const FiniteGroup& K);
};

Report validate_group_matched_pair(const GroupMatchedPair& p);
// Elements (h,k) at index h*|K| + k with (h,k)(g,t) = (h(k▶g), (k◀g)t).
FiniteGroup group_bicrossed(const GroupMatchedPair& p);
// Every matched pair on (H,K), by exhaustive search over action tables.
// Only feasible for tiny groups.
std::vector<GroupMatchedPair> all_group_matched_pairs(const FiniteGroup& H, const FiniteGroup& K);

// A graded by gmp.H via HA, C graded by gmp.K via KC.
// act_l[k][a] = k ▷ a on B(A); act_r[h][c] = c ◁ h on B(C).
struct RingMatchedPair {
    FusionRing A, C;
    std::vector<int> deg_A, deg_C;
    GroupMatchedPair gmp;
    std::vector<std::vector<int>> act_l;
    std::vector<std::vector<int>> act_r;

    const FiniteGroup& H() const { return gmp.H; }
    const FiniteGroup& K() const { return gmp.K; }
};

Report validate_ring_matched_pair(const RingMatchedPair& m);
// Basis (a,c) at index a*|B(C)| + c, labelled "a⋈c".
FusionRing ring_bicrossed(const RingMatchedPair& m);
inline int bicrossed_index(const RingMatchedPair& m, int a, int c) { return a * m.C.rank() + c; }

}  // namespace fusionbench
