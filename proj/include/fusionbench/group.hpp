#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionbench/report.hpp"

namespace fusionbench {

inline constexpr int kGroupCap = 64;

// A finite group as an explicit multiplication table: table[a][b] = a*b.
// The constructor rejects anything failing validate_group.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                int identity);

    int order() const { return static_cast<int>(labels_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int element_order(int a) const;
    bool is_abelian() const;
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    std::optional<int> index_of(const std::string& label) const;

    bool operator==(const FiniteGroup& o) const {
        return labels_ == o.labels_ && table_ == o.table_ && identity_ == o.identity_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

// Latin square, identity, inverses, associativity.
Report validate_group(const std::vector<std::string>& labels,
                      const std::vector<std::vector<int>>& table, int identity);

FiniteGroup cyclic_group(int n);
// Cn x Cm with generators g (first factor) and h (second factor).
FiniteGroup cyclic_product(int n, int m);
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
FiniteGroup symmetric_group_3();
// "Cn" or "CnxCm".
FiniteGroup group_from_shorthand(const std::string& s);

// A small generating set, chosen greedily by index.
std::vector<int> generators(const FiniteGroup& G);
bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f);
// Calls `visit` on each homomorphism G -> H; stops early when it returns true.
// Returns whether a visit returned true.
template <class Visit>
bool for_each_homomorphism(const FiniteGroup& G, const FiniteGroup& H, Visit&& visit);
std::vector<std::vector<int>> homomorphisms(const FiniteGroup& G, const FiniteGroup& H);
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);
bool is_automorphism(const FiniteGroup& G, const std::vector<int>& f);

// "C2", "C2xC2", "S3", or "order-n nonabelian group".
std::string describe_group(const FiniteGroup& G);

namespace detail {
// Extends images of the generators to a map, or nullopt if inconsistent.
std::optional<std::vector<int>> extend_from_generators(const FiniteGroup& G, const FiniteGroup& H,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images);
}  // namespace detail

template <class Visit>
bool for_each_homomorphism(const FiniteGroup& G, const FiniteGroup& H, Visit&& visit) {
    const std::vector<int> gens = generators(G);
    std::vector<int> images(gens.size(), 0);
    // Odometer over H^gens, filtered by element order.
    while (true) {
        bool orders_ok = true;
        for (std::size_t t = 0; t < gens.size() && orders_ok; ++t)
            orders_ok = G.element_order(gens[t]) % H.element_order(images[t]) == 0;
        if (orders_ok) {
            if (auto f = detail::extend_from_generators(G, H, gens, images)) {
                if (visit(*f)) return true;
            }
        }
        std::size_t t = 0;
        while (t < images.size() && ++images[t] == H.order()) images[t++] = 0;
        if (t == images.size()) return false;
    }
}

}  // namespace fusionbench
