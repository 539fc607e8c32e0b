#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionbench/report.hpp"

namespace fusionbench {

struct Constant {
    int i = 0, j = 0, k = 0;
    std::uint64_t v = 0;
    auto operator<=>(const Constant&) const = default;
};

// Basis, unit, duality and sparse structure constants N_{i,j}^k.
// Construction checks shape only (ranges, unique labels); the axioms are
// checked by validate_fusion_ring.
class FusionRing {
public:
    struct Term {
        int k;
        std::uint64_t v;
        bool operator==(const Term&) const = default;
    };

    FusionRing() = default;
    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
               std::vector<Constant> constants);

    int rank() const { return static_cast<int>(labels_.size()); }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& duals() const { return dual_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    std::uint64_t N(int i, int j, int k) const;
    // Support of b_i b_j, sorted by k.
    std::span<const Term> product(int i, int j) const { return products_[i * rank() + j]; }
    // All nonzero constants in lexicographic order.
    std::vector<Constant> constants() const;
    bool multiplicity_free() const;

    bool operator==(const FusionRing& o) const;

private:
    std::vector<std::string> labels_;
    int unit_ = 0;
    std::vector<int> dual_;
    std::vector<std::vector<Term>> products_;
};

// Finitely supported integer combination of basis elements.
class RingElement {
public:
    RingElement() = default;
    static RingElement basis(int i, std::int64_t c = 1);

    std::int64_t coeff(int i) const;
    void add(int i, std::int64_t c);
    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // The single basis index when the element is b_i with coefficient 1.
    std::optional<int> as_basis() const;

    RingElement operator+(const RingElement& o) const;
    bool operator==(const RingElement&) const = default;

    std::string to_string(const FusionRing& R) const;

private:
    std::map<int, std::int64_t> coeffs_;
};

struct Subring {
    std::vector<int> indices;  // sorted basis indices of the parent ring
    bool contains(int i) const;
    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const Subring&) const = default;
};

Report validate_fusion_ring(const FusionRing& R);

RingElement multiply(const FusionRing& R, const RingElement& x, const RingElement& y);
RingElement multiply_basis(const FusionRing& R, int i, int j);
RingElement dual_element(const FusionRing& R, const RingElement& x);

Subring subring_generated(const FusionRing& R, const std::vector<int>& seed);
// Unit, dual closure and product closure, one check each.
Report check_subring(const FusionRing& R, const std::vector<int>& indices);
// The subring as a ring of its own; basis order follows the sorted indices.
FusionRing restrict_ring(const FusionRing& R, const Subring& S);
std::string subring_to_string(const FusionRing& R, const Subring& S);

// Frobenius-Perron dimensions of all basis elements, normalized at the unit.
std::vector<double> fpdims(const FusionRing& R);
double fpdim_basis(const FusionRing& R, int i);
double fpdim_ring(const FusionRing& R);

}  // namespace fusionbench
