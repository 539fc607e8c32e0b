#include "fusionbench/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "fusionbench/errors.hpp"

namespace fusionbench {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw NumericError("integer overflow in ring product");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw NumericError("integer overflow in ring product");
    return r;
}

std::int64_t to_signed(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(INT64_MAX))
        throw NumericError("structure constant exceeds signed 64-bit range");
    return static_cast<std::int64_t>(v);
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       std::vector<Constant> constants)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
    const int n = rank();
    if (n == 0) throw InputError("fusion ring has an empty basis");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw InputError("empty basis label");
        if (!seen.insert(l).second) throw InputError("duplicate basis label '" + l + "'");
    }
    if (unit_ < 0 || unit_ >= n) throw InputError("unit index out of range");
    if (static_cast<int>(dual_.size()) != n) throw InputError("dual has wrong length");
    for (int d : dual_)
        if (d < 0 || d >= n) throw InputError("dual index out of range");

    products_.assign(static_cast<std::size_t>(n) * n, {});
    std::sort(constants.begin(), constants.end());
    for (std::size_t t = 0; t < constants.size(); ++t) {
        const auto& c = constants[t];
        if (c.i < 0 || c.i >= n || c.j < 0 || c.j >= n || c.k < 0 || c.k >= n)
            throw InputError("structure constant index out of range");
        if (t > 0 && constants[t - 1].i == c.i && constants[t - 1].j == c.j &&
            constants[t - 1].k == c.k)
            throw InputError("duplicate structure constant entry");
        if (c.v != 0) products_[c.i * n + c.j].push_back({c.k, c.v});
    }
}

std::optional<int> FusionRing::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

std::uint64_t FusionRing::N(int i, int j, int k) const {
    auto row = product(i, j);
    auto it = std::lower_bound(row.begin(), row.end(), k,
                               [](const Term& t, int key) { return t.k < key; });
    return (it != row.end() && it->k == k) ? it->v : 0;
}

std::vector<Constant> FusionRing::constants() const {
    std::vector<Constant> out;
    const int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& t : product(i, j)) out.push_back({i, j, t.k, t.v});
    return out;
}

bool FusionRing::multiplicity_free() const {
    for (const auto& row : products_)
        for (const auto& t : row)
            if (t.v > 1) return false;
    return true;
}

bool FusionRing::operator==(const FusionRing& o) const {
    return labels_ == o.labels_ && unit_ == o.unit_ && dual_ == o.dual_ && products_ == o.products_;
}

RingElement RingElement::basis(int i, std::int64_t c) {
    RingElement x;
    x.add(i, c);
    return x;
}

std::int64_t RingElement::coeff(int i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? 0 : it->second;
}

void RingElement::add(int i, std::int64_t c) {
    if (c == 0) return;
    auto& slot = coeffs_[i];
    slot = checked_add(slot, c);
    if (slot == 0) coeffs_.erase(i);
}

std::optional<int> RingElement::as_basis() const {
    if (coeffs_.size() == 1 && coeffs_.begin()->second == 1) return coeffs_.begin()->first;
    return std::nullopt;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    for (auto [i, c] : o.coeffs_) r.add(i, c);
    return r;
}

std::string RingElement::to_string(const FusionRing& R) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [i, c] : coeffs_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << R.label(i);
    }
    return os.str();
}

bool Subring::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

RingElement multiply_basis(const FusionRing& R, int i, int j) {
    RingElement r;
    for (const auto& t : R.product(i, j)) r.add(t.k, to_signed(t.v));
    return r;
}

RingElement multiply(const FusionRing& R, const RingElement& x, const RingElement& y) {
    RingElement r;
    for (auto [i, a] : x.coeffs())
        for (auto [j, b] : y.coeffs()) {
            std::int64_t ab = checked_mul(a, b);
            for (const auto& t : R.product(i, j)) r.add(t.k, checked_mul(ab, to_signed(t.v)));
        }
    return r;
}

RingElement dual_element(const FusionRing& R, const RingElement& x) {
    RingElement r;
    for (auto [i, c] : x.coeffs()) r.add(R.dual(i), c);
    return r;
}

namespace {

// Dense copy of the tensor for exhaustive checks.
struct Dense {
    int n;
    std::vector<std::uint64_t> t;
    explicit Dense(const FusionRing& R) : n(R.rank()), t(static_cast<std::size_t>(n) * n * n, 0) {
        for (const auto& c : R.constants()) t[(c.i * n + c.j) * n + c.k] = c.v;
    }
    std::uint64_t operator()(int i, int j, int k) const { return t[(i * n + j) * n + k]; }
};

std::string tuple_witness(const FusionRing& R, std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ",";
        first = false;
        os << R.label(i);
    }
    os << ")";
    return os.str();
}

}  // namespace

Report validate_fusion_ring(const FusionRing& R) {
    const int n = R.rank();
    const int u = R.unit();
    const Dense N(R);
    Report rep;

    {
        std::string w;
        for (int i = 0; i < n && w.empty(); ++i)
            if (R.dual(R.dual(i)) != i)
                w = "i=" + R.label(i) + ": dual(dual(i))=" + R.label(R.dual(R.dual(i)));
        rep.add("dual_involution", w.empty(), w);
    }
    {
        std::string w;
        for (int i = 0; i < n && w.empty(); ++i)
            for (int k = 0; k < n && w.empty(); ++k) {
                std::uint64_t want = i == k ? 1 : 0;
                if (N(i, u, k) != want)
                    w = "N" + tuple_witness(R, {i, u, k}) + "=" + std::to_string(N(i, u, k));
                else if (N(u, i, k) != want)
                    w = "N" + tuple_witness(R, {u, i, k}) + "=" + std::to_string(N(u, i, k));
            }
        rep.add("unit_axiom", w.empty(), w);
    }
    {
        std::string w;
        for (int i = 0; i < n && w.empty(); ++i)
            for (int j = 0; j < n && w.empty(); ++j) {
                std::uint64_t want = j == R.dual(i) ? 1 : 0;
                if (N(i, j, u) != want)
                    w = "N" + tuple_witness(R, {i, j, u}) + "=" + std::to_string(N(i, j, u)) +
                        ", expected " + std::to_string(want);
            }
        rep.add("duality_axiom", w.empty(), w);
    }
    {
        std::string w;
        for (int i = 0; i < n && w.empty(); ++i)
            for (int j = 0; j < n && w.empty(); ++j)
                for (int k = 0; k < n && w.empty(); ++k) {
                    int di = R.dual(i), dj = R.dual(j), dk = R.dual(k);
                    if (N(i, j, k) != N(dj, di, dk))
                        w = "N" + tuple_witness(R, {i, j, k}) + "=" + std::to_string(N(i, j, k)) +
                            " but N" + tuple_witness(R, {dj, di, dk}) + "=" +
                            std::to_string(N(dj, di, dk));
                }
        rep.add("anti_automorphism", w.empty(), w);
    }
    {
        std::string w;
        try {
            for (int i = 0; i < n && w.empty(); ++i)
                for (int j = 0; j < n && w.empty(); ++j) {
                    RingElement ij = multiply_basis(R, i, j);
                    for (int k = 0; k < n && w.empty(); ++k) {
                        RingElement left = multiply(R, ij, RingElement::basis(k));
                        RingElement right = multiply(R, RingElement::basis(i), multiply_basis(R, j, k));
                        if (!(left == right))
                            w = "(b_i b_j) b_k != b_i (b_j b_k) at " + tuple_witness(R, {i, j, k}) +
                                ": " + left.to_string(R) + " vs " + right.to_string(R);
                    }
                }
        } catch (const NumericError& e) {
            w = e.what();
        }
        rep.add("associativity", w.empty(), w);
    }
    {
        std::string w;
        for (int i = 0; i < n && w.empty(); ++i)
            for (int j = 0; j < n && w.empty(); ++j)
                for (int k = 0; k < n && w.empty(); ++k) {
                    std::uint64_t v = N(i, j, k);
                    std::uint64_t a = N(R.dual(i), k, j);
                    std::uint64_t b = N(k, R.dual(j), i);
                    if (v != a)
                        w = "N" + tuple_witness(R, {i, j, k}) + "=" + std::to_string(v) + " but N" +
                            tuple_witness(R, {R.dual(i), k, j}) + "=" + std::to_string(a);
                    else if (v != b)
                        w = "N" + tuple_witness(R, {i, j, k}) + "=" + std::to_string(v) + " but N" +
                            tuple_witness(R, {k, R.dual(j), i}) + "=" + std::to_string(b);
                }
        rep.add("frobenius_reciprocity", w.empty(), w);
    }
    return rep;
}

Subring subring_generated(const FusionRing& R, const std::vector<int>& seed) {
    const int n = R.rank();
    std::vector<char> in(n, 0);
    std::vector<int> members;
    std::deque<int> work;
    auto push = [&](int i) {
        if (i < 0 || i >= n) throw InputError("seed index out of range");
        if (!in[i]) {
            in[i] = 1;
            members.push_back(i);
            work.push_back(i);
        }
    };
    push(R.unit());
    for (int s : seed) push(s);
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        push(R.dual(x));
        // Products with every member found so far, in both orders.
        for (std::size_t t = 0; t < members.size(); ++t) {
            int y = members[t];
            for (const auto& term : R.product(x, y)) push(term.k);
            for (const auto& term : R.product(y, x)) push(term.k);
        }
    }
    std::sort(members.begin(), members.end());
    return Subring{members};
}

Report check_subring(const FusionRing& R, const std::vector<int>& indices) {
    Report rep;
    std::vector<int> idx = indices;
    std::sort(idx.begin(), idx.end());
    for (int i : idx)
        if (i < 0 || i >= R.rank()) throw InputError("subring index out of range");
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw InputError("subring index listed twice");
    Subring S{idx};
    rep.add("contains_unit", S.contains(R.unit()), S.contains(R.unit()) ? "" : "unit missing");
    std::string w;
    for (int i : idx)
        if (!S.contains(R.dual(i))) {
            w = R.label(i) + "* = " + R.label(R.dual(i)) + " missing";
            break;
        }
    rep.add("closed_under_dual", w.empty(), w);
    w.clear();
    for (int i : idx) {
        for (int j : idx) {
            for (const auto& t : R.product(i, j))
                if (!S.contains(t.k)) {
                    w = R.label(i) + "*" + R.label(j) + " contains " + R.label(t.k);
                    break;
                }
            if (!w.empty()) break;
        }
        if (!w.empty()) break;
    }
    rep.add("closed_under_products", w.empty(), w);
    return rep;
}

FusionRing restrict_ring(const FusionRing& R, const Subring& S) {
    Report rep = check_subring(R, S.indices);
    if (!rep.pass) throw InputError("not a subring: " + rep.first_failure());
    std::vector<int> pos(R.rank(), -1);
    for (int t = 0; t < S.size(); ++t) pos[S.indices[t]] = t;
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<Constant> cs;
    for (int i : S.indices) {
        labels.push_back(R.label(i));
        dual.push_back(pos[R.dual(i)]);
        for (int j : S.indices)
            for (const auto& t : R.product(i, j)) cs.push_back({pos[i], pos[j], pos[t.k], t.v});
    }
    return FusionRing(std::move(labels), pos[R.unit()], std::move(dual), std::move(cs));
}

std::string subring_to_string(const FusionRing& R, const Subring& S) {
    std::string s = "{";
    for (int t = 0; t < S.size(); ++t) {
        if (t) s += ",";
        s += R.label(S.indices[t]);
    }
    return s + "}";
}

std::vector<double> fpdims(const FusionRing& R) {
    // Common eigenvector of all left multiplications: the Perron vector of the
    // matrix of sum_i b_i, which has positive entries for any fusion ring.
    const int n = R.rank();
    std::vector<double> M(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& c : R.constants()) M[c.j * n + c.k] += static_cast<double>(c.v);

    constexpr int kMaxIter = 10000;
    constexpr double kTol = 1e-12;
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0.0;
    for (int it = 1; it <= kMaxIter; ++it) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += M[j * n + k] * v[k];
            w[j] = s;
        }
        double norm = *std::max_element(w.begin(), w.end());
        if (!(norm > 0.0)) throw NumericError("power iteration collapsed to zero");
        double diff = 0.0;
        for (int j = 0; j < n; ++j) {
            w[j] /= norm;
            diff = std::max(diff, std::abs(w[j] - v[j]));
        }
        bool settled = diff <= kTol && std::abs(norm - lambda) <= kTol * norm;
        lambda = norm;
        v.swap(w);
        if (settled) {
            const double at_unit = v[R.unit()];
            for (auto& x : v) x /= at_unit;
            v[R.unit()] = 1.0;
            return v;
        }
    }
    throw NumericError("power iteration did not converge after " + std::to_string(kMaxIter) +
                       " iterations");
}

double fpdim_basis(const FusionRing& R, int i) {
    if (i < 0 || i >= R.rank()) throw InputError("basis index out of range");
    return fpdims(R)[i];
}

double fpdim_ring(const FusionRing& R) {
    double s = 0.0;
    for (double d : fpdims(R)) s += d * d;
    return s;
}

}  // namespace fusionbench
