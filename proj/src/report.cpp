#include "fltlab/report.hpp"

#include <stdexcept>

namespace fltlab {

std::optional<Equation> parse_equation(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Equation::CubicSplit); ++i) {
    const auto e = static_cast<Equation>(i);
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

Json record_to_json(const SolutionRecord& rec) {
  Json vars = Json::object();
  for (const auto& [name, value] : rec.vars) vars[name] = value.to_string();
  Json j;
  j["equation"] = to_string(rec.equation);
  j["vars"] = std::move(vars);
  j["constraints"] = rec.constraint_profile;
  return j;
}

SolutionRecord record_from_json(const Json& j) {
  const auto eq = parse_equation(j.at("equation").get<std::string>());
  if (!eq) throw std::runtime_error("unknown equation " + j.at("equation").dump());
  SolutionRecord rec;
  rec.equation = *eq;
  for (const auto& [name, value] : j.at("vars").items()) {
    rec.vars.emplace_back(name, ExactInt::parse(value.get<std::string>()));
  }
  rec.constraint_profile = j.at("constraints").get<std::vector<std::string>>();
  if (auto err = verify_record(rec); !err.empty()) {
    throw std::runtime_error("stored record fails verification: " + err);
  }
  return rec;
}

Json params_to_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [name, value] : p) j[name] = std::to_string(value);
  return j;
}

Json solution_line(const SolutionRecord& rec, const std::string& claim, const std::string& family) {
  auto str_or_null = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
  Json j;
  j["schema"] = kJsonSchema;
  j["type"] = "solution";
  j["claim"] = str_or_null(claim);
  j["family"] = str_or_null(family);
  Json r = record_to_json(rec);
  j["equation"] = r["equation"];
  j["vars"] = r["vars"];
  j["constraints"] = r["constraints"];
  return j;
}

Json outcome_line(const ClaimOutcome& o) {
  Json j;
  j["schema"] = kJsonSchema;
  j["type"] = "outcome";
  j["claim"] = to_string(o.claim);
  j["params"] = params_to_json(o.params);
  j["status"] = to_string(o.status);
  if (o.counterexample) {
    j["counterexample"] = record_to_json(*o.counterexample);
  } else {
    j["counterexample"] = nullptr;
  }
  j["reason"] = o.reason;
  Json stats;
  stats["candidates_tested"] = std::to_string(o.stats.candidates_tested);
  stats["expected_candidates"] = o.stats.expected_candidates.to_string();
  stats["filtered_count"] = std::to_string(o.stats.filtered_count);
  stats["counterexamples"] = std::to_string(o.stats.counterexamples);
  Json extra = Json::object();
  for (const auto& [k, v] : o.stats.extra) extra[k] = std::to_string(v);
  stats["extra"] = std::move(extra);
  j["stats"] = std::move(stats);
  return j;
}

Json appendix_line(const AppendixVerdict& v) {
  Json j;
  j["schema"] = kJsonSchema;
  j["type"] = "appendix_line";
  j["table_version"] = kAppendixTableVersion;
  j["attribution"] = v.line.attribution;
  j["k"] = std::to_string(v.line.k);
  Json terms = Json::array();
  for (const auto& t : v.line.terms) terms.push_back(t.to_string());
  j["terms"] = std::move(terms);
  j["rhs"] = v.line.rhs_value.to_string();
  j["as_printed"] = v.line.as_printed;
  j["verdict"] = v.identity.balanced ? "Balanced" : "Unbalanced";
  j["lhs_sum"] = v.identity.lhs_sum.to_string();
  j["rhs_sum"] = v.identity.rhs_sum.to_string();
  j["deficit"] = v.identity.deficit.to_string();
  j["pairwise_coprime"] = v.coprime.coprime;
  if (v.coprime.witness) {
    j["coprime_witness"] = {v.coprime.witness->first.to_string(), v.coprime.witness->second.to_string()};
  } else {
    j["coprime_witness"] = nullptr;
  }
  Json rec = Json::array();
  for (const auto& s : v.recoveries) {
    Json r;
    r["slot"] = s.slot;
    r["side"] = s.rhs ? "rhs" : "lhs";
    r["status"] = to_string(s.recovery.status);
    r["term"] = s.recovery.term ? Json(s.recovery.term->to_string()) : Json(nullptr);
    rec.push_back(std::move(r));
  }
  j["recoveries"] = std::move(rec);
  return j;
}

}  // namespace fltlab
