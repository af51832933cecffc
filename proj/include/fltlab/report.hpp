#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fltlab/appendix.hpp"
#include "fltlab/claims.hpp"
#include "fltlab/solution.hpp"

namespace fltlab {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

std::optional<Equation> parse_equation(const std::string& name);

/// {"equation", "vars": {name: decimal}, "constraints": [...]}
Json record_to_json(const SolutionRecord& rec);
/// Inverse of record_to_json; the record is re-verified (std::runtime_error).
SolutionRecord record_from_json(const Json& j);

Json params_to_json(const Params& p);

/// One JSONL line each; keys in fixed order, integers as decimal strings.
/// Either claim or family names the source; the other is null.
Json solution_line(const SolutionRecord& rec, const std::string& claim, const std::string& family);
Json outcome_line(const ClaimOutcome& o);
Json appendix_line(const AppendixVerdict& v);

}  // namespace fltlab
