#include "fusionbench/catalog.hpp"

#include <cmath>
#include <numbers>
#include <regex>

#include "fusionbench/errors.hpp"
#include "fusionbench/rings.hpp"

namespace fusionbench {

namespace {

std::vector<int> cyclic_factors(const std::string& spec) {
    static const std::regex re(R"(C([0-9]+)(?:xC([0-9]+))?)");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) return {};
    std::vector<int> out{std::stoi(m[1])};
    if (m[2].matched) out.push_back(std::stoi(m[2]));
    return out;
}

Bicharacter make_bicharacter(const std::string& spec, const std::vector<std::string>& tokens) {
    auto factors = cyclic_factors(spec);
    if (factors.empty()) throw InputError("bicharacters are built only for shorthand groups Cn or CnxCm");
    std::vector<Complex> q;
    if (tokens.empty()) q.assign(factors.size(), -1.0);
    else
        for (const auto& t : tokens) q.push_back(parse_root(t));
    if (q.size() != factors.size())
        throw InputError("need one bicharacter value per cyclic factor of " + spec);
    return diagonal_bicharacter(factors, q);
}

Complex tau_value(int sign, int order) {
    if (sign != 1 && sign != -1) throw InputError("tau sign must be + or -");
    return sign / std::sqrt(static_cast<double>(order));
}

ThreeCocycle make_cocycle(const FiniteGroup& G, const std::string& spec, int p) {
    auto factors = cyclic_factors(spec);
    if (p == 0) return trivial_cocycle(G);
    if (factors.size() != 1) throw InputError("nontrivial --omega needs a cyclic group Cn");
    ThreeCocycle w = cyclic_cocycle(factors[0], p);
    w.group = G;
    return w;
}

std::vector<int> identity_or(const std::vector<int>& v, int n) {
    if (!v.empty()) return v;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return id;
}

// φ_{g^j} = perm^j for K cyclic with generator index 1 in power order.
std::vector<std::vector<int>> gamma_action(const FiniteGroup& Gamma, const FiniteGroup& K,
                                           const std::string& kspec, const std::vector<int>& perm) {
    const int ng = Gamma.order();
    std::vector<int> p = identity_or(perm, ng);
    if (static_cast<int>(p.size()) != ng) throw InputError("--gamma-perm needs one entry per element of Γ");
    for (int v : p)
        if (v < 0 || v >= ng) throw InputError("--gamma-perm entry out of range");
    auto factors = cyclic_factors(kspec);
    if (!perm.empty() && factors.size() != 1) throw InputError("--gamma-perm needs a cyclic K");
    std::vector<std::vector<int>> act(K.order());
    std::vector<int> cur = identity_or({}, ng);
    for (int j = 0; j < K.order(); ++j) {
        act[j] = cur;
        std::vector<int> next(ng);
        for (int g = 0; g < ng; ++g) next[g] = p[cur[g]];
        cur = next;
    }
    return act;
}

TYPointedParams ty_pointed_params(const MakeOptions& o) {
    Bicharacter chi = make_bicharacter(o.group, o.chi);
    FiniteGroup K = rename_generators(resolve_group(o.k_group), "k", "l");
    TYPointedParams p = TYPointedParams::trivial(chi, tau_value(o.tau, chi.group.order()), make_cocycle(K, o.k_group, o.omega));
    p.phi = identity_or(o.phi, K.order());
    p.phi_action = gamma_action(chi.group, K, o.k_group, o.gamma_perm);
    return p;
}

TYTYParams ty_ty_params(const MakeOptions& o) {
    Bicharacter chi = make_bicharacter(o.group, o.chi);
    Bicharacter zeta = make_bicharacter(o.k_group, o.zeta);
    zeta.group = rename_generators(zeta.group, "k", "l");
    TYTYParams p{chi, tau_value(o.tau, chi.group.order()), zeta, tau_value(o.upsilon, zeta.group.order()),
                 identity_or(o.phi, chi.group.order()), identity_or(o.psi, zeta.group.order()), o.theta_l, o.theta_r};
    return p;
}

}  // namespace

Complex parse_root(const std::string& t) {
    if (t == "1" || t == "+1") return 1.0;
    if (t == "-1") return -1.0;
    if (t == "i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    static const std::regex frac(R"((-?[0-9]+)/([0-9]+))");
    std::smatch m;
    if (std::regex_match(t, m, frac)) {
        long p = std::stol(m[1]), q = std::stol(m[2]);
        if (q == 0) throw InputError("zero denominator in root of unity '" + t + "'");
        long r = ((p % q) + q) % q;
        if (r == 0) return 1.0;
        if (2 * r == q) return -1.0;
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    }
    throw InputError("cannot parse root of unity '" + t + "' (use 1, -1, i, -i or p/q)");
}

FiniteGroup resolve_group(const std::string& spec) {
    if (!cyclic_factors(spec).empty()) return group_from_shorthand(spec);
    if (spec == "S3") return symmetric_group_3();
    return group_from_json(read_json_file(spec));
}

std::vector<std::string> make_kinds() {
    return {"group-ring", "ty-ring", "fibonacci", "pointed", "ty", "ty-pointed", "ty-pointed-pair", "ty-ty", "ty-ty-pair"};
}

Json make_object(const MakeOptions& o) {
    const std::string& k = o.kind;
    if (k == "group-ring") return to_json(group_ring(resolve_group(o.group)));
    if (k == "ty-ring") return to_json(tambara_yamagami_ring(resolve_group(o.group)));
    if (k == "fibonacci") return to_json(fibonacci_ring());
    if (k == "pointed") {
        FiniteGroup G = resolve_group(o.group);
        return to_json(build_pointed(make_cocycle(G, o.group, o.omega)));
    }
    if (k == "ty") {
        Bicharacter chi = make_bicharacter(o.group, o.chi);
        return to_json(build_TY(chi, tau_value(o.tau, chi.group.order())));
    }
    if (k == "ty-pointed") return to_json(build_TY_pointed_bicrossed(ty_pointed_params(o)));
    if (k == "ty-pointed-pair") return to_json(ty_pointed_matched_pair(ty_pointed_params(o)));
    if (k == "ty-ty") return to_json(build_TY_TY_bicrossed(ty_ty_params(o)));
    if (k == "ty-ty-pair") return to_json(ty_ty_matched_pair(ty_ty_params(o)));
    throw InputError("unknown kind '" + k + "'");
}

std::vector<CatalogEntry> examples_catalog() {
    auto opt = [](std::string kind, std::string group = "C2") {
        MakeOptions o;
        o.kind = std::move(kind);
        o.group = std::move(group);
        return o;
    };
    std::vector<CatalogEntry> out{
        {"z_c2", "group ring of C2", opt("group-ring", "C2")},
        {"z_c3", "group ring of C3", opt("group-ring", "C3")},
        {"z_c6", "group ring of C6", opt("group-ring", "C6")},
        {"z_s3", "group ring of S3", opt("group-ring", "S3")},
        {"ty_c2", "Tambara-Yamagami ring of C2", opt("ty-ring", "C2")},
        {"ty_c3", "Tambara-Yamagami ring of C3", opt("ty-ring", "C3")},
        {"ty_c2xc2", "Tambara-Yamagami ring of C2xC2", opt("ty-ring", "C2xC2")},
        {"fibonacci", "Fibonacci ring, x^2 = 1 + x", opt("fibonacci")},
    };
    MakeOptions vec = opt("pointed", "C2");
    vec.omega = 1;
    out.push_back({"vec_c2_omega", "Vec_C2 with the nontrivial 3-cocycle", vec});
    out.push_back({"ising", "TY(C2, chi(g,g) = -1, tau = 1/sqrt 2)", opt("ty", "C2")});
    out.push_back({"ty_c2xc2_cat", "TY(C2xC2) with the diagonal bicharacter", opt("ty", "C2xC2")});
    out.push_back({"ty_pointed_c2", "TY(C2) bicrossed Vec_C2, trivial lifting data", opt("ty-pointed", "C2")});
    out.push_back({"ty_ty_c2", "TY(C2) bicrossed TY(C2), rank 9", opt("ty-ty", "C2")});
    out.push_back({"ty_c2_zc2_pair", "matched pair TY(C2) and ZC2, trivial actions", opt("ty-pointed-pair", "C2")});
    MakeOptions swap = opt("ty-pointed-pair", "C2xC2");
    swap.gamma_perm = {0, 2, 1, 3};
    out.push_back({"ty_c2xc2_swap_pair", "matched pair TY(C2xC2) and ZC2, k swaps the factors", swap});
    out.push_back({"ty_ty_c2_pair", "matched pair TY(C2) and TY(C2), trivial actions", opt("ty-ty-pair", "C2")});
    return out;
}

}  // namespace fusionbench
