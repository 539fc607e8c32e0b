#include "fusionbench/serialize.hpp"

#include <fstream>
#include <sstream>

#include "fusionbench/errors.hpp"
#include "fusionbench/format.hpp"

namespace fusionbench {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) out.push_back(int_list(row, what));
    return out;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw InputError(std::string(what) + " entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<Complex> complex_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<Complex> out;
    for (const auto& x : j) out.push_back(complex_from_json(x));
    return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const FusionRing& R) {
    Json N = Json::array();
    for (const auto& c : R.constants()) N.push_back({c.i, c.j, c.k, c.v});
    return Json{{"basis", R.labels()}, {"unit", R.unit()}, {"dual", R.duals()}, {"N", N}};
}

FusionRing ring_from_json(const Json& j) {
    auto labels = string_list(field(j, "basis"), "basis");
    int unit = as_int(field(j, "unit"), "unit");
    auto dual = int_list(field(j, "dual"), "dual");
    const Json& N = field(j, "N");
    if (!N.is_array()) throw InputError("N must be an array");
    std::vector<Constant> cs;
    for (const auto& e : N) {
        if (!e.is_array() || e.size() != 4) throw InputError("N entries are [i, j, k, v]");
        if (!e[3].is_number_integer() || e[3].get<std::int64_t>() < 0)
            throw InputError("structure constants must be nonnegative integers");
        cs.push_back({as_int(e[0], "N index"), as_int(e[1], "N index"), as_int(e[2], "N index"),
                      e[3].get<std::uint64_t>()});
    }
    return FusionRing(std::move(labels), unit, std::move(dual), std::move(cs));
}

Json to_json(const FiniteGroup& G) {
    return Json{{"elements", G.labels()}, {"identity", G.identity()}, {"table", G.table()}};
}

FiniteGroup group_from_json(const Json& j) {
    return FiniteGroup(string_list(field(j, "elements"), "elements"), int_table(field(j, "table"), "table"),
                       as_int(field(j, "identity"), "identity"));
}

Json to_json(const Grading& g) { return Json{{"group", to_json(g.group)}, {"degree", g.degree}}; }

Grading grading_from_json(const Json& j) {
    return Grading{group_from_json(field(j, "group")), int_list(field(j, "degree"), "degree")};
}

Json to_json(const RingMatchedPair& m) {
    return Json{{"A", to_json(m.A)},
                {"C", to_json(m.C)},
                {"H", to_json(Grading{m.H(), m.deg_A})},
                {"K", to_json(Grading{m.K(), m.deg_C})},
                {"gmp", Json{{"act_l", m.gmp.act_l}, {"act_r", m.gmp.act_r}}},
                {"act_l", m.act_l},
                {"act_r", m.act_r}};
}

RingMatchedPair matched_pair_from_json(const Json& j, const std::filesystem::path& base) {
    auto ring_at = [&](const char* key) {
        const Json& r = field(j, key);
        if (r.is_string()) return ring_from_json(read_json_file(base / r.get<std::string>()));
        return ring_from_json(r);
    };
    Grading H = grading_from_json(field(j, "H"));
    Grading K = grading_from_json(field(j, "K"));
    const Json& gmp = field(j, "gmp");
    GroupMatchedPair p{H.group, K.group, int_table(field(gmp, "act_l"), "gmp.act_l"),
                       int_table(field(gmp, "act_r"), "gmp.act_r")};
    return RingMatchedPair{ring_at("A"),
                           ring_at("C"),
                           H.degree,
                           K.degree,
                           std::move(p),
                           int_table(field(j, "act_l"), "act_l"),
                           int_table(field(j, "act_r"), "act_r")};
}

Json to_json(const FusionCategoryData& cat) {
    Json assoc = Json::array();
    for (const auto& [k, blk] : cat.assoc) {
        Json m = Json::array();
        for (Eigen::Index r = 0; r < blk.m.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index s = 0; s < blk.m.cols(); ++s) row.push_back(complex_to_json(blk.m(r, s)));
            m.push_back(row);
        }
        assoc.push_back({{"a", k.a}, {"b", k.b}, {"c", k.c}, {"d", k.d}, {"rows", blk.rows}, {"cols", blk.cols}, {"m", m}});
    }
    Json ul = Json::array(), ur = Json::array();
    for (Complex z : cat.unit_l) ul.push_back(complex_to_json(z));
    for (Complex z : cat.unit_r) ur.push_back(complex_to_json(z));
    return Json{{"ring", to_json(cat.ring)}, {"assoc", assoc}, {"unit_l", ul}, {"unit_r", ur}};
}

FusionCategoryData category_from_json(const Json& j) {
    FusionCategoryData cat{ring_from_json(field(j, "ring")), {}, complex_list(field(j, "unit_l"), "unit_l"),
                           complex_list(field(j, "unit_r"), "unit_r")};
    const Json& assoc = field(j, "assoc");
    if (!assoc.is_array()) throw InputError("assoc must be an array");
    for (const auto& e : assoc) {
        BlockKey key{as_int(field(e, "a"), "a"), as_int(field(e, "b"), "b"), as_int(field(e, "c"), "c"),
                     as_int(field(e, "d"), "d")};
        AssocBlock blk{int_list(field(e, "rows"), "rows"), int_list(field(e, "cols"), "cols"), {}};
        const Json& m = field(e, "m");
        if (!m.is_array() || m.size() != blk.rows.size()) throw InputError("block matrix has the wrong row count");
        blk.m.resize(static_cast<Eigen::Index>(blk.rows.size()), static_cast<Eigen::Index>(blk.cols.size()));
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
            if (!m[r].is_array() || m[r].size() != blk.cols.size())
                throw InputError("block matrix has the wrong column count");
            for (std::size_t s = 0; s < blk.cols.size(); ++s) blk.m(r, s) = complex_from_json(m[r][s]);
        }
        if (!cat.assoc.emplace(key, std::move(blk)).second) throw InputError("duplicate associator block");
    }
    return cat;
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json residual = c.residual ? Json(round12(*c.residual)) : Json(nullptr);
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"residual", residual}});
    }
    return Json{{"pass", r.pass}, {"checks", checks}};
}

ObjectKind detect_kind(const Json& j) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    if (j.contains("assoc")) return ObjectKind::Category;
    if (j.contains("gmp")) return ObjectKind::MatchedPair;
    if (j.contains("basis")) return ObjectKind::Ring;
    if (j.contains("elements")) return ObjectKind::Group;
    if (j.contains("degree")) return ObjectKind::Grading;
    throw InputError("unrecognized object: expected a ring, group, grading, matched pair or category");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cannot write " + p.string());
    out << text;
}

}  // namespace fusionbench
