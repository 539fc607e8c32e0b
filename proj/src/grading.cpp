#include "fusionbench/grading.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fusionbench/errors.hpp"

namespace fusionbench {

Subring adjoint_subring(const FusionRing& R) {
    std::set<int> support;
    for (int i = 0; i < R.rank(); ++i)
        for (const auto& t : R.product(i, R.dual(i))) support.insert(t.k);
    return subring_generated(R, std::vector<int>(support.begin(), support.end()));
}

namespace {

// Component index of each basis element under x*b (left) or b*x (right), x adjoint.
std::vector<int> components(const FusionRing& R, const Subring& ad, bool left) {
    const int n = R.rank();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> work{s};
        while (!work.empty()) {
            int i = work.front();
            work.pop_front();
            for (int x : ad.indices) {
                auto terms = left ? R.product(x, i) : R.product(i, x);
                for (const auto& t : terms)
                    if (comp[t.k] == -1) {
                        comp[t.k] = next;
                        work.push_back(t.k);
                    }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

UniversalGrading universal_grading(const FusionRing& R) {
    const int n = R.rank();
    const Subring ad = adjoint_subring(R);
    // Components are numbered in order of their smallest basis index.
    const std::vector<int> comp = components(R, ad, true);
    if (components(R, ad, false) != comp)
        throw InternalError("left and right adjoint components differ");

    const int m = *std::max_element(comp.begin(), comp.end()) + 1;
    if (m > kGroupCap) throw CapExceeded("universal grading group exceeds cap");
    std::vector<int> rep(m, -1);
    for (int i = 0; i < n; ++i)
        if (rep[comp[i]] == -1) rep[comp[i]] = i;

    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& t : R.product(i, j)) {
                int& slot = table[comp[i]][comp[j]];
                if (slot == -1) slot = comp[t.k];
                else if (slot != comp[t.k])
                    throw InternalError("class product not well defined at (" + R.label(i) + "," +
                                        R.label(j) + ")");
            }
    for (const auto& row : table)
        if (std::find(row.begin(), row.end(), -1) != row.end())
            throw InternalError("class product has an empty entry");

    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c) labels.push_back("[" + R.label(rep[c]) + "]");
    try {
        return Grading{FiniteGroup(std::move(labels), std::move(table), comp[R.unit()]), comp};
    } catch (const InputError& e) {
        throw InternalError(std::string("component classes do not form a group: ") + e.what());
    }
}

Subring pointed_subring(const FusionRing& R) {
    std::vector<int> idx;
    for (int i = 0; i < R.rank(); ++i) {
        auto p = multiply_basis(R, i, R.dual(i)).as_basis();
        if (p && *p == R.unit()) idx.push_back(i);
    }
    return Subring{idx};
}

Nilpotency is_nilpotent(const FusionRing& R) {
    FusionRing cur = R;
    Nilpotency out;
    while (true) {
        Subring ad = adjoint_subring(cur);
        if (ad.size() == cur.rank()) break;
        ++out.depth;
        cur = restrict_ring(cur, ad);
    }
    out.nilpotent = cur.rank() == 1;
    return out;
}

Report verify_grading(const FusionRing& R, const FiniteGroup& G, const std::vector<int>& degree) {
    if (static_cast<int>(degree.size()) != R.rank())
        throw InputError("degree map is not total on the basis");
    for (int d : degree)
        if (d < 0 || d >= G.order()) throw InputError("degree out of group range");
    Report rep;
    auto name = [&](int i) { return R.label(i) + " in " + G.label(degree[i]); };

    rep.add("unit_degree", degree[R.unit()] == G.identity(),
            degree[R.unit()] == G.identity() ? "" : name(R.unit()));

    std::string w;
    for (int i = 0; i < R.rank() && w.empty(); ++i)
        if (degree[R.dual(i)] != G.inv(degree[i]))
            w = name(i) + " but " + R.label(R.dual(i)) + " in " + G.label(degree[R.dual(i)]);
    rep.add("dual_degree", w.empty(), w);

    w.clear();
    for (int i = 0; i < R.rank() && w.empty(); ++i)
        for (int j = 0; j < R.rank() && w.empty(); ++j)
            for (const auto& t : R.product(i, j))
                if (degree[t.k] != G.mul(degree[i], degree[j])) {
                    w = R.label(i) + "*" + R.label(j) + " contains " + name(t.k) + ", expected " +
                        G.label(G.mul(degree[i], degree[j]));
                    break;
                }
    rep.add("homogeneity", w.empty(), w);

    w.clear();
    std::vector<char> hit(G.order(), 0);
    for (int d : degree) hit[d] = 1;
    for (int g = 0; g < G.order(); ++g)
        if (!hit[g]) {
            w = G.label(g) + " has empty component";
            break;
        }
    rep.add("faithfulness", w.empty(), w);
    return rep;
}

std::optional<std::vector<int>> factor_through_universal(const FusionRing& R, const Grading& g) {
    const UniversalGrading U = universal_grading(R);
    std::optional<std::vector<int>> found;
    for_each_homomorphism(U.group, g.group, [&](const std::vector<int>& f) {
        for (int i = 0; i < R.rank(); ++i)
            if (f[U.degree[i]] != g.degree[i]) return false;
        std::set<int> image(f.begin(), f.end());
        if (static_cast<int>(image.size()) != g.group.order()) return false;
        found = f;
        return true;
    });
    return found;
}

}  // namespace fusionbench
