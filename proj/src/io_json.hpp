#pragma once

#include <string>

#include "classify.hpp"
#include "dynkin.hpp"

namespace tg {

struct parse_error_ex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"mode":"exact","entries":[{"I":1,"i":1,"j":2,"v":"3/2"},...]}; indices are
// 1-based on the wire, i < j enforced, duplicate keys rejected.
Bracket bracket_from_json(const std::string& text);
std::string bracket_to_json(const Bracket& b);

std::string report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

std::string components_to_json(const CrossedDiagram& d, const std::vector<CohomologyComponent>& comps);
std::string components_to_text(const CrossedDiagram& d, const std::vector<CohomologyComponent>& comps);

std::string enumeration_to_json(const std::vector<CrossedDiagram>& ds);
std::string enumeration_to_text(const std::vector<CrossedDiagram>& ds);

// Corank-major rows; csv mirrors the printed layout for eyeball diffs.
std::string rank_table_to_csv(const RankTable& t);
std::string rank_table_to_json(const RankTable& t);

}  // namespace tg
