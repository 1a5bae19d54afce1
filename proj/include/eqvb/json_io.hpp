#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eqvb/cocharacter.hpp"
#include "eqvb/filtered.hpp"
#include "eqvb/gl2.hpp"
#include "eqvb/hom.hpp"
#include "eqvb/rees.hpp"

namespace eqvb::json_io {

using nlohmann::json;

// Every reader takes the JSON path of its payload so that errors name the
// offending location, e.g. "$.steps[1].basis[0][2]".

json to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& path);

json to_json(const Vec& v);
Vec vec_from_json(const json& j, const std::string& path);

json to_json(const Mat& m);
Mat mat_from_json(const json& j, const std::string& path);

json to_json(const FilteredSpace& f);
FilteredSpace filtered_from_json(const json& j, const std::string& path = "$");

json to_json(const GradedVectorSpace& g);

json to_json(const GradedFreeModule& m);
GradedFreeModule module_from_json(const json& j, const std::string& path = "$");

json to_json(const RepLabel& label);
RepLabel label_from_json(const json& j, const std::string& path = "$");

json to_json(const RepData& rep);
/// Built-in {"group": ..., "label": ...} or generic {"dim", "weights", "ops"}.
RepData rep_from_json(const json& j, const std::string& path = "$");

json to_json(const GroupActionData& h);
GroupActionData group_action_from_json(const json& j, const std::string& path = "$");

FiltObject filt_object_from_json(const json& j, const std::string& path = "$");

/// Custom variety: {"group_rank" or "group", "cocharacters",
/// "x_module_weights", "stabilizer": {"lie": [...], "elements": [...]}}.
VarietySpec variety_from_json(const json& j, const std::string& path = "$");

json to_json(const std::vector<TableRow>& rows);
/// Label columns then the value, one row per line, with a header.
std::string to_tsv(const std::vector<TableRow>& rows, GroupKind group, const std::string& value_column);

/// Parses text, rethrowing syntax errors as Error(Parse) with the byte
/// offset.
json parse(const std::string& text, const std::string& source);

}  // namespace eqvb::json_io
