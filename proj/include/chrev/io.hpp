#pragma once

#include <string>

#include <json.hpp>

#include "chrev/belief_base.hpp"
#include "chrev/operators.hpp"
#include "chrev/remainders.hpp"
#include "chrev/selection.hpp"

namespace chrev {

using Json = nlohmann::ordered_json;

// Belief-base text format: one formula per line, '#' starts a comment, blank
// lines are ignored. Parse errors carry the byte offset within the whole text.
BeliefBase parse_base_text(const std::string& text);
BeliefBase load_base_file(const std::string& path);
std::string render_base_text(const BeliefBase& base);

// Comma-separated formulas, as accepted inline on the command line.
BeliefBase parse_formula_list(const std::string& text);

// Priority file: one "rank formula" pair per line (integer, whitespace,
// formula). Unlisted formulas rank after all listed ones.
PriorityOrder parse_priority_text(const std::string& text);
PriorityOrder load_priority_file(const std::string& path);

Json to_json(const BeliefBase& base);          // sorted formula strings
Json to_json(const SubsetFamily& family);      // sorted array of string arrays
Json to_json(const NegationSet& n);
Json to_json(const RevisionTrace& trace);

}  // namespace chrev
