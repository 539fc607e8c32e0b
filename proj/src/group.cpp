#include "fusionbench/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>

#include "fusionbench/errors.hpp"

namespace fusionbench {

Report validate_group(const std::vector<std::string>& labels,
                      const std::vector<std::vector<int>>& table, int identity) {
    const int n = static_cast<int>(labels.size());
    Report rep;
    auto L = [&](int a) { return labels[a]; };

    std::string w;
    if (n == 0) w = "empty group";
    else if (static_cast<int>(table.size()) != n) w = "table has wrong number of rows";
    for (int a = 0; a < n && w.empty(); ++a) {
        if (static_cast<int>(table[a].size()) != n) w = "row " + L(a) + " has wrong length";
        for (int b = 0; b < n && w.empty(); ++b)
            if (table[a][b] < 0 || table[a][b] >= n) w = "entry out of range at " + L(a);
    }
    if (w.empty() && (identity < 0 || identity >= n)) w = "identity index out of range";
    rep.add("table_shape", w.empty(), w);
    if (!w.empty()) return rep;

    for (int a = 0; a < n && w.empty(); ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n && w.empty(); ++b) {
            if (row[table[a][b]]++) w = "row " + L(a) + " repeats " + L(table[a][b]);
            else if (col[table[b][a]]++) w = "column " + L(a) + " repeats " + L(table[b][a]);
        }
    }
    rep.add("latin_square", w.empty(), w);

    w.clear();
    for (int a = 0; a < n && w.empty(); ++a)
        if (table[identity][a] != a || table[a][identity] != a) w = "e*" + L(a) + " != " + L(a);
    rep.add("identity", w.empty(), w);

    w.clear();
    for (int a = 0; a < n && w.empty(); ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = table[a][b] == identity && table[b][a] == identity;
        if (!found) w = L(a) + " has no two-sided inverse";
    }
    rep.add("inverses", w.empty(), w);

    w.clear();
    for (int a = 0; a < n && w.empty(); ++a)
        for (int b = 0; b < n && w.empty(); ++b)
            for (int c = 0; c < n && w.empty(); ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    w = "(" + L(a) + "," + L(b) + "," + L(c) + ")";
    rep.add("associativity", w.empty(), w);
    return rep;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                         int identity)
    : labels_(std::move(labels)), table_(std::move(table)), identity_(identity) {
    if (order() > kGroupCap) throw CapExceeded("group order exceeds " + std::to_string(kGroupCap));
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InputError("duplicate group element label");
    Report rep = validate_group(labels_, table_, identity_);
    if (!rep.pass) throw InputError("not a group: " + rep.first_failure());
    inverse_.assign(order(), 0);
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            if (table_[a][b] == identity_) inverse_[a] = b;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

namespace {

std::string power_label(const std::string& gen, int p) {
    if (p == 0) return "";
    if (p == 1) return gen;
    return gen + "^" + std::to_string(p);
}

}  // namespace

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw InputError("cyclic group order must be positive");
    if (n > kGroupCap) throw CapExceeded("group order exceeds " + std::to_string(kGroupCap));
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "1" : power_label("g", a));
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
}

FiniteGroup cyclic_product(int n, int m) {
    if (n < 1 || m < 1) throw InputError("cyclic group order must be positive");
    if (n * m > kGroupCap) throw CapExceeded("group order exceeds " + std::to_string(kGroupCap));
    const int N = n * m;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x) {
        int a = x / m, b = x % m;
        std::string s = power_label("g", a) + power_label("h", b);
        labels.push_back(s.empty() ? "1" : s);
        for (int y = 0; y < N; ++y) {
            int c = y / m, d = y % m;
            table[x][y] = ((a + c) % n) * m + (b + d) % m;
        }
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
    const int n = G.order(), m = H.order();
    if (n * m > kGroupCap) throw CapExceeded("group order exceeds " + std::to_string(kGroupCap));
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
    for (int x = 0; x < n * m; ++x) {
        labels.push_back("(" + G.label(x / m) + "," + H.label(x % m) + ")");
        for (int y = 0; y < n * m; ++y)
            table[x][y] = G.mul(x / m, y / m) * m + H.mul(x % m, y % m);
    }
    return FiniteGroup(std::move(labels), std::move(table), G.identity() * m + H.identity());
}

FiniteGroup symmetric_group_3() {
    // r^a s^b with s r = r^2 s; index = 3b + a.
    std::vector<std::string> labels = {"1", "r", "r^2", "s", "rs", "r^2s"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
            int cc = b ? (3 - c) % 3 : c;
            table[x][y] = ((b + d) % 2) * 3 + (a + cc) % 3;
        }
    return FiniteGroup(std::move(labels), std::move(table), 0);
}

FiniteGroup group_from_shorthand(const std::string& s) {
    static const std::regex one("C([0-9]+)");
    static const std::regex two("C([0-9]+)[xX]C([0-9]+)");
    std::smatch m;
    if (std::regex_match(s, m, one)) return cyclic_group(std::stoi(m[1]));
    if (std::regex_match(s, m, two)) return cyclic_product(std::stoi(m[1]), std::stoi(m[2]));
    throw InputError("unknown group shorthand '" + s + "' (use Cn or CnxCm)");
}

std::vector<int> generators(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<char> span(G.order(), 0);
    span[G.identity()] = 1;
    auto close = [&] {
        std::deque<int> work;
        for (int x = 0; x < G.order(); ++x)
            if (span[x]) work.push_back(x);
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (int g : gens) {
                int y = G.mul(x, g);
                if (!span[y]) {
                    span[y] = 1;
                    work.push_back(y);
                }
            }
        }
    };
    // Prefer elements of large order so cyclic groups get one generator.
    std::vector<int> order(G.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return G.element_order(a) > G.element_order(b);
    });
    for (int x : order)
        if (!span[x]) {
            gens.push_back(x);
            close();
        }
    return gens;
}

bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != G.order()) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return false;
    return true;
}

namespace detail {

std::optional<std::vector<int>> extend_from_generators(const FiniteGroup& G, const FiniteGroup& H,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images) {
    std::vector<int> f(G.order(), -1);
    f[G.identity()] = H.identity();
    std::deque<int> work{G.identity()};
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (std::size_t t = 0; t < gens.size(); ++t) {
            int y = G.mul(x, gens[t]);
            int fy = H.mul(f[x], images[t]);
            if (f[y] == -1) {
                f[y] = fy;
                work.push_back(y);
            } else if (f[y] != fy) {
                return std::nullopt;
            }
        }
    }
    if (!is_homomorphism(G, H, f)) return std::nullopt;
    return f;
}

}  // namespace detail

std::vector<std::vector<int>> homomorphisms(const FiniteGroup& G, const FiniteGroup& H) {
    std::vector<std::vector<int>> out;
    for_each_homomorphism(G, H, [&](const std::vector<int>& f) {
        out.push_back(f);
        return false;
    });
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.order() != H.order()) return std::nullopt;
    if (G.is_abelian() != H.is_abelian()) return std::nullopt;
    auto profile = [](const FiniteGroup& X) {
        std::vector<int> p;
        for (int a = 0; a < X.order(); ++a) p.push_back(X.element_order(a));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(G) != profile(H)) return std::nullopt;
    std::optional<std::vector<int>> found;
    for_each_homomorphism(G, H, [&](const std::vector<int>& f) {
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
        found = f;
        return true;
    });
    return found;
}

bool is_automorphism(const FiniteGroup& G, const std::vector<int>& f) {
    if (!is_homomorphism(G, G, f)) return false;
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::string describe_group(const FiniteGroup& G) {
    const int n = G.order();
    if (n == 1) return "C1";
    if (G.is_abelian()) {
        // Invariant factors d1 | d2 | ... with product n, tried by isomorphism.
        std::vector<std::vector<int>> candidates;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int last) -> void {
            if (rest == 1) {
                candidates.push_back(cur);
                return;
            }
            for (int d = 2; d <= rest; ++d)
                if (rest % d == 0 && (last == 0 || d % last == 0)) {
                    cur.push_back(d);
                    self(self, rest / d, d);
                    cur.pop_back();
                }
        };
        rec(rec, n, 0);
        for (const auto& c : candidates) {
            FiniteGroup P = cyclic_group(c[0]);
            for (std::size_t t = 1; t < c.size(); ++t) P = direct_product(P, cyclic_group(c[t]));
            if (find_isomorphism(P, G)) {
                std::string s;
                for (std::size_t t = 0; t < c.size(); ++t)
                    s += (t ? "xC" : "C") + std::to_string(c[t]);
                return s;
            }
        }
    }
    if (n == 6) return "S3";
    return "order-" + std::to_string(n) + " nonabelian group";
}

}  // namespace fusionbench
