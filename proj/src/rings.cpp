#include "fusionbench/rings.hpp"

#include "fusionbench/errors.hpp"

namespace fusionbench {

FusionRing group_ring(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<int> dual(n);
    std::vector<Constant> cs;
    for (int a = 0; a < n; ++a) {
        dual[a] = G.inv(a);
        for (int b = 0; b < n; ++b) cs.push_back({a, b, G.mul(a, b), 1});
    }
    return FusionRing(G.labels(), G.identity(), std::move(dual), std::move(cs));
}

FusionRing tambara_yamagami_ring(const FiniteGroup& Gamma, const std::string& x) {
    if (!Gamma.is_abelian()) throw InputError("Tambara-Yamagami ring needs an abelian group");
    const int m = Gamma.order();
    const int X = m;
    std::vector<std::string> labels = Gamma.labels();
    labels.push_back(x);
    std::vector<int> dual(m + 1);
    std::vector<Constant> cs;
    for (int a = 0; a < m; ++a) {
        dual[a] = Gamma.inv(a);
        for (int b = 0; b < m; ++b) cs.push_back({a, b, Gamma.mul(a, b), 1});
        cs.push_back({a, X, X, 1});
        cs.push_back({X, a, X, 1});
        cs.push_back({X, X, a, 1});
    }
    dual[X] = X;
    return FusionRing(std::move(labels), Gamma.identity(), std::move(dual), std::move(cs));
}

FusionRing fibonacci_ring() {
    return FusionRing({"1", "x"}, 0, {0, 1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
}

}  // namespace fusionbench
