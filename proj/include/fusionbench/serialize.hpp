#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fusionbench/category.hpp"
#include "fusionbench/fusion_ring.hpp"
#include "fusionbench/grading.hpp"
#include "fusionbench/group.hpp"
#include "fusionbench/matched_pair.hpp"
#include "fusionbench/report.hpp"

namespace fusionbench {

using Json = nlohmann::json;

Json to_json(const FusionRing& R);
Json to_json(const FiniteGroup& G);
Json to_json(const Grading& g);
Json to_json(const RingMatchedPair& m);
Json to_json(const FusionCategoryData& cat);
Json to_json(const Report& r);
Json complex_to_json(Complex z);

// Parsers throw InputError on any shape problem.
FusionRing ring_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);
Grading grading_from_json(const Json& j);
// "A" and "C" may be inline rings or paths relative to `base`.
RingMatchedPair matched_pair_from_json(const Json& j, const std::filesystem::path& base = {});
FusionCategoryData category_from_json(const Json& j);
Complex complex_from_json(const Json& j);

enum class ObjectKind { Ring, Group, Grading, MatchedPair, Category };
ObjectKind detect_kind(const Json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
Json parse_text(const std::string& text);
Json read_json_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

}  // namespace fusionbench
