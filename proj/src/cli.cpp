#include "fltlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include "fltlab/appendix.hpp"
#include "fltlab/claims.hpp"
#include "fltlab/diophantine.hpp"
#include "fltlab/report.hpp"

namespace fltlab {

PolyParseError::PolyParseError(std::size_t position, const std::string& message)
    : UsageError("position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
constexpr unsigned kMaxExponent = 10000;

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view t) : t_(t) {}

  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool done() const { return i_ >= t_.size(); }
  std::size_t pos() const { return i_; }
  char peek() const { return done() ? '\0' : t_[i_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept_minus() {
    if (accept('-')) return true;
    if (t_.substr(i_, kUnicodeMinus.size()) == kUnicodeMinus) {
      i_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }
  bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(t_[i_])); }
  std::string_view digits() {
    const std::size_t start = i_;
    while (at_digit()) ++i_;
    return t_.substr(start, i_ - start);
  }
  std::string found() const {
    if (done()) return "end of input";
    return "'" + std::string(1, t_[i_]) + "'";
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

PolyExpr parse_poly(std::string_view text) {
  PolyLexer lx(text);
  lx.skip_ws();
  if (lx.done()) throw PolyParseError(0, "empty polynomial expression");

  std::map<unsigned, std::pair<ExactInt, std::size_t>> terms;  // exponent -> (coefficient, position)
  bool first = true;
  while (true) {
    lx.skip_ws();
    bool negative = false;
    if (first) {
      if (!lx.accept('+')) negative = lx.accept_minus();
    } else {
      if (lx.done()) break;
      if (!lx.accept('+')) {
        if (!lx.accept_minus()) throw PolyParseError(lx.pos(), "expected '+' or '-', found " + lx.found());
        negative = true;
      }
    }
    lx.skip_ws();
    const std::size_t term_pos = lx.pos();
    ExactInt coef(1);
    bool have_coef = false;
    if (lx.at_digit()) {
      coef = ExactInt::parse(lx.digits());
      have_coef = true;
      lx.skip_ws();
      if (lx.accept('*')) {
        lx.skip_ws();
        if (lx.peek() != 'x') throw PolyParseError(lx.pos(), "expected 'x' after '*', found " + lx.found());
      }
    }
    unsigned exponent = 0;
    if (lx.accept('x')) {
      exponent = 1;
      lx.skip_ws();
      if (lx.accept('^')) {
        lx.skip_ws();
        if (!lx.at_digit()) throw PolyParseError(lx.pos(), "expected exponent digits, found " + lx.found());
        const std::size_t epos = lx.pos();
        const std::string_view d = lx.digits();
        unsigned e = 0;
        const auto res = std::from_chars(d.data(), d.data() + d.size(), e);
        if (res.ec != std::errc() || e > kMaxExponent) {
          throw PolyParseError(epos, "exponent exceeds " + std::to_string(kMaxExponent));
        }
        exponent = e;
      }
    } else if (!have_coef) {
      throw PolyParseError(lx.pos(), "expected a coefficient or 'x', found " + lx.found());
    }
    if (terms.count(exponent)) {
      throw PolyParseError(term_pos, "duplicate exponent " + std::to_string(exponent));
    }
    terms.emplace(exponent, std::make_pair(negative ? -coef : coef, term_pos));
    first = false;
  }

  std::optional<unsigned> degree;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!it->second.first.is_zero()) {
      degree = it->first;
      break;
    }
  }
  if (!degree || *degree == 0) throw PolyParseError(0, "polynomial must have degree >= 1");
  const auto& [lead, lead_pos] = terms.at(*degree);
  if (lead != ExactInt(1)) {
    throw PolyParseError(lead_pos, "polynomial is not monic (leading coefficient " + lead.to_string() + ")");
  }
  std::vector<ExactInt> coeffs(*degree + 1, ExactInt(0));
  for (const auto& [e, cp] : terms) {
    if (e <= *degree) coeffs[*degree - e] = cp.first;
  }
  return {std::string(text), MonicIntPoly(std::move(coeffs))};
}

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitFound = 3;

std::size_t resolve_jobs(int flag) {
  if (flag > 0) return static_cast<std::size_t>(flag);
  if (flag < 0) throw UsageError("--jobs must be >= 1");
  if (const char* env = std::getenv("FLT_LAB_JOBS"); env && *env) {
    int v = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1) {
      throw UsageError("FLT_LAB_JOBS must be a positive integer, got '" + std::string(s) + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return 1;
}

std::string vars_text(const SolutionRecord& rec) {
  std::string s;
  for (const auto& [name, value] : rec.vars) {
    if (!s.empty()) s += " ";
    s += name + "=" + value.to_string();
  }
  return s;
}

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [name, value] : p) {
    if (!s.empty()) s += " ";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

void print_outcome(const ClaimOutcome& o, bool json, std::ostream& out) {
  if (json) {
    out << outcome_line(o).dump() << "\n";
    for (const auto& r : o.counterexamples) out << solution_line(r, to_string(o.claim), "").dump() << "\n";
    return;
  }
  out << std::left << std::setw(22) << to_string(o.claim) << std::setw(21) << to_string(o.status)
      << "candidates " << o.stats.candidates_tested << "/" << o.stats.expected_candidates.to_string()
      << "  filtered " << o.stats.filtered_count << "  [" << params_text(o.params) << "]\n";
  if (!o.reason.empty()) out << "    reason: " << o.reason << "\n";
  if (o.counterexample) {
    out << "    counterexample: " << to_string(o.counterexample->equation) << " " << vars_text(*o.counterexample);
    if (o.counterexamples.size() > 1) out << " (+" << o.counterexamples.size() - 1 << " more)";
    out << "\n";
  }
}

int exit_for(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::CounterexampleFound:
      return kExitFound;
    case ClaimStatus::Error:
      return kExitRuntime;
    default:
      return kExitOk;
  }
}

int cmd_claim_list(bool json, std::ostream& out) {
  for (const auto& c : list_claims()) {
    if (json) {
      Json j;
      j["schema"] = kJsonSchema;
      j["type"] = "claim";
      j["claim"] = to_string(c.id);
      j["statement"] = c.statement;
      j["quote"] = c.quote;
      Json schema = Json::array();
      for (const auto& p : c.schema) {
        Json s;
        s["name"] = p.name;
        s["min"] = std::to_string(p.min);
        s["max"] = std::to_string(p.max);
        s["help"] = p.help;
        schema.push_back(std::move(s));
      }
      j["params"] = std::move(schema);
      j["smoke"] = params_to_json(c.smoke);
      j["desk"] = params_to_json(c.desk);
      out << j.dump() << "\n";
    } else {
      out << to_string(c.id) << "\n    " << c.statement << "\n    quote: \"" << c.quote
          << "\"\n    desk: " << params_text(c.desk) << "\n";
    }
  }
  return kExitOk;
}

struct ClaimRunArgs {
  std::string id;
  std::vector<std::string> params;
  std::string profile = "desk";
  std::string checkpoint;
  int halt_after = -1;
};

Profile parse_profile(const std::string& s) {
  if (s == "smoke") return Profile::Smoke;
  if (s == "desk") return Profile::Desk;
  throw UsageError("profile must be smoke or desk, got '" + s + "'");
}

int cmd_claim_run(const ClaimRunArgs& a, std::size_t jobs, bool json, std::ostream& out, std::ostream& err) {
  const auto id = parse_claim_id(a.id);
  if (!id) {
    std::string known;
    for (const auto& c : list_claims()) known += " " + to_string(c.id);
    throw UsageError("unknown claim '" + a.id + "'; known:" + known);
  }
  std::vector<std::pair<std::string, std::string>> overrides;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + kv + "'\n" + schema_help(*id));
    std::string name = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    // n=V fixes both ends of the exponent range.
    if (name == "n" && !claim_info(*id).schema.empty() &&
        std::any_of(claim_info(*id).schema.begin(), claim_info(*id).schema.end(),
                    [](const ParamSpec& p) { return p.name == "n_min"; })) {
      overrides.emplace_back("n_min", value);
      overrides.emplace_back("n_max", value);
      continue;
    }
    overrides.emplace_back(std::move(name), value);
  }
  const Params params = resolve_params(*id, overrides, parse_profile(a.profile));
  RunOptions opts;
  opts.jobs = jobs;
  if (!a.checkpoint.empty()) opts.checkpoint_path = a.checkpoint;
  if (a.halt_after >= 0) opts.halt_after_chunks = static_cast<std::size_t>(a.halt_after);
  opts.stop = &interrupt_flag();
  opts.progress = [&err](const std::string& line) { err << line << "\n"; };
  const ClaimOutcome o = run_claim(*id, params, opts);
  err << to_string(o.claim) << " finished in " << std::fixed << std::setprecision(3) << o.stats.duration_seconds
      << " s\n";
  print_outcome(o, json, out);
  return exit_for(o.status);
}

int cmd_claim_suite(const std::string& profile, std::size_t jobs, bool json, std::ostream& out, std::ostream& err) {
  RunOptions opts;
  opts.jobs = jobs;
  const Profile p = parse_profile(profile);
  int code = kExitOk;
  double total = 0;
  const auto outcomes = run_suite(p, opts);
  for (const auto& o : outcomes) {
    err << to_string(o.claim) << ": " << to_string(o.status) << " in " << std::fixed << std::setprecision(3)
        << o.stats.duration_seconds << " s\n";
    total += o.stats.duration_seconds;
    print_outcome(o, json, out);
    const int c = exit_for(o.status);
    if (c == kExitRuntime || (c == kExitFound && code == kExitOk)) code = c;
  }
  err << "suite " << to_string(p) << " total " << std::fixed << std::setprecision(3) << total << " s\n";
  return code;
}

struct SearchArgs {
  std::string family;
  std::int64_t bound = 0;
  int exponent = -1;
  std::string coprime;
  std::string ring = "z";
  int h = -1;
  int l = -1;
  bool xy_eq_zu = false;
};

unsigned need_exponent(const SearchArgs& a) {
  if (a.exponent < 1) throw UsageError("search " + a.family + " needs --exponent >= 1");
  return static_cast<unsigned>(a.exponent);
}

CoprimeMode coprime_mode(const SearchArgs& a, CoprimeMode fallback) {
  if (a.coprime.empty()) return fallback;
  if (a.coprime == "none") return CoprimeMode::None;
  if (a.coprime == "pairwise") return CoprimeMode::Pairwise;
  throw UsageError("--coprime must be none or pairwise");
}

void require_pairwise_only(const SearchArgs& a) {
  if (!a.coprime.empty() && a.coprime != "pairwise") {
    throw UsageError("search " + a.family + " always applies its coprimality condition; --coprime none is not supported");
  }
}

int cmd_search(const SearchArgs& a, std::size_t jobs, bool json, std::ostream& out, std::ostream& err) {
  if (a.bound < 1) throw UsageError("--bound must be >= 1");
  const std::int64_t max = a.bound;
  const std::size_t parts = jobs;
  SearchResult res;
  std::uint64_t trivial = 0;
  const std::string& f = a.family;
  if (f == "fermat") {
    const SearchBounds b{ExactInt(max), need_exponent(a)};
    const bool primitive = coprime_mode(a, CoprimeMode::None) == CoprimeMode::Pairwise;
    res = run_partitioned({1, max}, parts, jobs, [&](const OuterRange& r) { return search_fermat_triples(b, primitive, r); });
  } else if (f == "pair_system") {
    require_pairwise_only(a);
    const SearchBounds b{ExactInt(max), need_exponent(a)};
    res = run_partitioned({1, max}, parts, jobs, [&](const OuterRange& r) { return search_pair_system(b, r); });
  } else if (f == "quadruple") {
    const SearchBounds b{ExactInt(max), need_exponent(a)};
    const QuadMode mode =
        coprime_mode(a, CoprimeMode::None) == CoprimeMode::Pairwise ? QuadMode::FullyPairwise : QuadMode::PairsXY_ZU;
    res = run_partitioned({1, max}, parts, jobs,
                          [&](const OuterRange& r) { return search_quadruple(b, mode, a.xy_eq_zu, r); });
  } else if (f == "sys3") {
    require_pairwise_only(a);
    const SearchBounds b{ExactInt(max), need_exponent(a)};
    res = run_partitioned(sys3_outer_range(b.max()), parts, jobs, [&](const OuterRange& r) { return search_sys3(b, r); });
  } else if (f == "product_form") {
    const unsigned n = need_exponent(a);
    const CoprimeMode mode = coprime_mode(a, CoprimeMode::None);
    res = run_partitioned({1, max}, parts, jobs, [&](const OuterRange& r) { return search_product_form(n, max, mode, r); });
  } else if (f == "product_squares") {
    require_pairwise_only(a);
    Ring ring;
    if (a.ring == "z") {
      ring = Ring::Z;
    } else if (a.ring == "zi") {
      ring = Ring::GaussianZ;
    } else {
      throw UsageError("--ring must be z or zi");
    }
    res = run_partitioned(product_squares_outer_range(max, ring), parts, jobs,
                          [&](const OuterRange& r) { return search_product_squares(max, ring, r); });
  } else if (f == "euler_product") {
    require_pairwise_only(a);
    const unsigned n = need_exponent(a);
    res = run_partitioned({1, max}, parts, jobs, [&](const OuterRange& r) { return search_euler_product(n, max, r); });
  } else if (f == "quadratic") {
    require_pairwise_only(a);
    const unsigned n_max = need_exponent(a);
    res = run_partitioned({1, max}, parts, jobs,
                          [&](const OuterRange& r) { return search_quadratic_irreducibility(max, n_max, r); });
  } else if (f == "equal_sums") {
    if (a.h < 1 || a.l < 1) throw UsageError("search equal_sums needs --h and --l");
    EqualSumsQuery q;
    q.h = static_cast<unsigned>(a.h);
    q.l = static_cast<unsigned>(a.l);
    q.k = need_exponent(a);
    q.max = max;
    q.mode = coprime_mode(a, CoprimeMode::None);
    const EqualSumsSearch s(q);
    std::mutex m;
    res = run_partitioned(equal_sums_outer_range(q), parts, jobs, [&](const OuterRange& r) {
      EqualSumsResult er = s.run(r);
      std::lock_guard lock(m);
      trivial += er.trivial_excluded;
      return std::move(er.search);
    });
  } else {
    throw UsageError("unknown search family '" + f +
                     "'; known: fermat pair_system quadruple sys3 product_form product_squares euler_product "
                     "quadratic equal_sums");
  }

  if (json) {
    for (const auto& r : res.records) out << solution_line(r, "", f).dump() << "\n";
    Json s;
    s["schema"] = kJsonSchema;
    s["type"] = "summary";
    s["family"] = f;
    s["solutions"] = std::to_string(res.records.size());
    s["candidates_tested"] = std::to_string(res.candidates);
    s["filtered_count"] = std::to_string(res.filtered);
    if (f == "equal_sums") s["trivial_excluded"] = std::to_string(trivial);
    out << s.dump() << "\n";
  } else {
    for (const auto& r : res.records) out << vars_text(r) << "\n";
    out << res.records.size() << " solution(s); " << res.candidates << " candidates tested; " << res.filtered
        << " rejected by the coprimality condition\n";
  }
  err << "search " << f << " done\n";
  return res.records.empty() ? kExitOk : kExitFound;
}

Json roots_json(const std::vector<ExactInt>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

int cmd_poly_analyze(const std::string& expr, int fermat_n, int powersum_k, bool json, std::ostream& out) {
  const PolyExpr pe = parse_poly(expr);
  const SplitReport rep = analyze(pe.poly);
  Json j;
  j["schema"] = kJsonSchema;
  j["type"] = "poly_analysis";
  j["poly"] = pe.poly.to_string();
  j["coefficients"] = roots_json(pe.poly.coeffs());
  j["integer_roots"] = roots_json(rep.integer_roots);
  j["residual_factor"] = rep.residual_factor ? Json(rep.residual_factor->to_string()) : Json(nullptr);
  j["split_type"] = to_string(rep.split_type);
  j["fermat"] = nullptr;
  j["powersum"] = nullptr;
  if (fermat_n >= 0) {
    if (fermat_n < 1) throw UsageError("--fermat-n must be >= 1");
    const FermatExtraction ex = extract_fermat_witness(pe.poly, static_cast<unsigned>(fermat_n));
    Json f;
    f["n"] = std::to_string(fermat_n);
    f["failure"] = to_string(ex.failure);
    f["distinct_roots"] = ex.distinct_roots;
    if (ex.witness) {
      f["witness"] = roots_json({ex.witness->p, ex.witness->q, ex.witness->r});
    } else {
      f["witness"] = nullptr;
    }
    j["fermat"] = std::move(f);
  }
  if (powersum_k >= 0) {
    if (powersum_k < 1) throw UsageError("--powersum-k must be >= 1");
    const PowerSumExtraction ex = extract_powersum_identity(pe.poly, static_cast<unsigned>(powersum_k));
    Json p;
    p["k"] = std::to_string(powersum_k);
    p["failure"] = to_string(ex.failure);
    p["distinct_roots"] = ex.distinct_roots;
    if (ex.instance) {
      p["lhs"] = roots_json(ex.instance->lhs);
      p["rhs"] = roots_json(ex.instance->rhs);
    } else {
      p["lhs"] = nullptr;
      p["rhs"] = nullptr;
    }
    j["powersum"] = std::move(p);
  }
  if (json) {
    out << j.dump() << "\n";
    return kExitOk;
  }
  auto list = [](const std::vector<ExactInt>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.to_string();
    return s;
  };
  out << "polynomial:     " << pe.poly.to_string() << "\n";
  out << "split type:     " << to_string(rep.split_type) << "\n";
  out << "integer roots:  " << list(rep.integer_roots) << "\n";
  if (rep.residual_factor) out << "residual:       " << rep.residual_factor->to_string() << "\n";
  if (!j["fermat"].is_null()) {
    const Json& f = j["fermat"];
    out << "fermat (n=" << fermat_n << "): ";
    if (f["witness"].is_null()) {
      out << "no witness (" << f["failure"].get<std::string>() << ")\n";
    } else {
      out << f["witness"][0].get<std::string>() << "^" << fermat_n << " + " << f["witness"][1].get<std::string>()
          << "^" << fermat_n << " = " << f["witness"][2].get<std::string>() << "^" << fermat_n << "\n";
    }
  }
  if (!j["powersum"].is_null()) {
    const Json& p = j["powersum"];
    out << "power sum (k=" << powersum_k << "): ";
    if (p["lhs"].is_null()) {
      out << "no identity (" << p["failure"].get<std::string>() << ")\n";
    } else {
      auto side = [&](const Json& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : " + ") + x.get<std::string>() + "^" + std::to_string(powersum_k);
        return s;
      };
      out << side(p["lhs"]) << " = " << side(p["rhs"]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify_appendix(bool json, std::ostream& out) {
  for (const auto& v : verify_appendix()) {
    if (json) {
      out << appendix_line(v).dump() << "\n";
      continue;
    }
    out << v.line.attribution << " (k=" << v.line.k << "): " << (v.identity.balanced ? "Balanced" : "Unbalanced");
    if (!v.identity.balanced) out << ", deficit " << v.identity.deficit.to_string();
    if (v.coprime.coprime) {
      out << "; pairwise coprime\n";
    } else {
      out << "; not pairwise coprime, witness (" << v.coprime.witness->first.to_string() << ", "
          << v.coprime.witness->second.to_string() << ")\n";
    }
    for (const auto& s : v.recoveries) {
      out << "    slot " << s.slot << (s.rhs ? " (rhs)" : "") << ": " << to_string(s.recovery.status);
      if (s.recovery.term) out << " " << s.recovery.term->to_string();
      out << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded exact searches for the power-sum and Fermat-type claims", "flt-lab"};
  app.require_subcommand(1);
  bool json = false;
  int jobs_flag = 0;

  auto add_common = [&](CLI::App* sub, bool with_jobs) {
    sub->add_flag("--json", json, "emit JSON lines on standard output");
    if (with_jobs) sub->add_option("--jobs", jobs_flag, "worker threads (default: FLT_LAB_JOBS or 1)");
  };

  CLI::App* claim = app.add_subcommand("claim", "claim registry");
  claim->require_subcommand(1);
  CLI::App* claim_list = claim->add_subcommand("list", "list every claim");
  add_common(claim_list, false);

  ClaimRunArgs run_args;
  CLI::App* claim_run = claim->add_subcommand("run", "run one claim");
  claim_run->add_option("id", run_args.id, "claim id")->required();
  claim_run->add_option("--param", run_args.params, "name=value override (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  claim_run->add_option("--profile", run_args.profile, "defaults to start from: smoke or desk");
  claim_run->add_option("--checkpoint", run_args.checkpoint, "checkpoint file (resumed when present)");
  claim_run->add_option("--halt-after-chunks", run_args.halt_after)->group("");
  add_common(claim_run, true);

  std::string suite_profile;
  CLI::App* claim_suite = claim->add_subcommand("suite", "run every claim at a profile's defaults");
  claim_suite->add_option("--profile", suite_profile, "smoke or desk")->required();
  add_common(claim_suite, true);

  SearchArgs sargs;
  CLI::App* search = app.add_subcommand("search", "run one bounded search");
  search->set_help_flag("--help", "print this help message and exit");
  search->add_option("family", sargs.family,
                     "fermat, pair_system, quadruple, sys3, product_form, product_squares, euler_product, quadratic, "
                     "equal_sums")
      ->required();
  search->add_option("--bound", sargs.bound, "inclusive bound on the enumerated variables")->required();
  search->add_option("--exponent", sargs.exponent, "exponent n (k for equal_sums, n_max for quadratic)");
  search->add_option("--coprime", sargs.coprime, "none or pairwise");
  search->add_option("--ring", sargs.ring, "product_squares ring: z or zi");
  search->add_option("--h", sargs.h, "equal_sums terms on the left");
  search->add_option("--l", sargs.l, "equal_sums terms on the right");
  search->add_flag("--xy-eq-zu", sargs.xy_eq_zu, "quadruple: require xy = zu");
  add_common(search, true);

  std::string expr;
  int fermat_n = -1;
  int powersum_k = -1;
  CLI::App* poly = app.add_subcommand("poly", "polynomial tools");
  poly->require_subcommand(1);
  CLI::App* poly_analyze = poly->add_subcommand("analyze", "find integer roots and read off identities");
  poly_analyze->add_option("expr", expr, "e.g. \"x^3 - 481*x + 3600\"")->required();
  poly_analyze->add_option("--fermat-n", fermat_n, "extract a Fermat witness for this exponent");
  poly_analyze->add_option("--powersum-k", powersum_k, "extract a power-sum identity for this power");
  add_common(poly_analyze, false);

  CLI::App* appendix = app.add_subcommand("verify-appendix", "evaluate the published counterexample table");
  add_common(appendix, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*claim_list) return cmd_claim_list(json, out);
    if (*claim_run) return cmd_claim_run(run_args, resolve_jobs(jobs_flag), json, out, err);
    if (*claim_suite) return cmd_claim_suite(suite_profile, resolve_jobs(jobs_flag), json, out, err);
    if (*search) return cmd_search(sargs, resolve_jobs(jobs_flag), json, out, err);
    if (*poly_analyze) return cmd_poly_analyze(expr, fermat_n, powersum_k, json, out);
    if (*appendix) return cmd_verify_appendix(json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RunInterrupted& e) {
    err << "interrupted: " << e.what() << "; rerun with the same --checkpoint to resume\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fltlab
