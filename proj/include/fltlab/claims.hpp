#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fltlab/exact_int.hpp"
#include "fltlab/solution.hpp"

namespace fltlab {

enum class ClaimId {
  T1_FORWARD,
  T1_CONVERSE,
  COR1_CUBIC,
  EULER_EKL,
  WEAK_CONJ,
  ALT_CONJ,
  THM2_EQUIV,
  LEM0_PARITY,
  LEM1_PAIR_SYSTEM,
  THM3_XYZU,
  COR_QUADRATIC,
  THM4_SYS3,
  FLT_PRODUCT_FORM,
  PRODUCT_QUARTIC,
  PRODUCT_SQUARES_Z,
  PRODUCT_SQUARES_ZI,
  EULER_PRODUCT,
  EULER_1769,
  CONCL_XYZU_PAIRWISE,
};

std::string to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(const std::string& text);

enum class Profile { Smoke, Desk };
std::string to_string(Profile p);

struct ParamSpec {
  std::string name;
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::string help;
};

/// Parameter values in schema order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t param(const Params& p, const std::string& name);

struct ClaimInfo {
  ClaimId id;
  std::string statement;  // what is being checked, in our words
  std::string quote;      // the statement as worded at the source
  std::vector<ParamSpec> schema;
  Params smoke;
  Params desk;
};

/// All claims in a fixed order.
const std::vector<ClaimInfo>& list_claims();
const ClaimInfo& claim_info(ClaimId id);

/// Starts from the profile defaults and applies name=value overrides.
/// Throws UsageError on unknown names, bad integers, out-of-range values or
/// violated cross-parameter constraints.
Params resolve_params(ClaimId id, const std::vector<std::pair<std::string, std::string>>& overrides,
                      Profile base = Profile::Desk);

/// Human-readable parameter schema, used in usage errors.
std::string schema_help(ClaimId id);

enum class ClaimStatus { HoldsUpToBound, CounterexampleFound, Inapplicable, Error };
std::string to_string(ClaimStatus s);

struct ClaimStats {
  std::uint64_t candidates_tested = 0;
  ExactInt expected_candidates;
  std::uint64_t filtered_count = 0;
  std::uint64_t counterexamples = 0;
  std::map<std::string, std::uint64_t> extra;  // claim-specific counters
  double duration_seconds = 0;
};

struct ClaimOutcome {
  ClaimId claim = ClaimId::T1_FORWARD;
  Params params;
  ClaimStatus status = ClaimStatus::HoldsUpToBound;
  std::optional<SolutionRecord> counterexample;  // smallest one found
  std::vector<SolutionRecord> counterexamples;   // all of them, sorted
  std::string reason;                            // Inapplicable / Error detail
  ClaimStats stats;
};

/// Partial result over part of the outer range. Mergeable in any order.
struct ClaimChunk {
  std::vector<SolutionRecord> counterexamples;
  std::uint64_t candidates = 0;
  std::uint64_t filtered = 0;
  std::map<std::string, std::uint64_t> extra;

  void merge(ClaimChunk&& other);
  void finalize();
};

/// A prepared claim. run() is thread-safe for disjoint ranges.
class ClaimRunner {
 public:
  virtual ~ClaimRunner() = default;
  virtual OuterRange outer() const = 0;
  virtual ClaimChunk run(const OuterRange& range) const = 0;
  /// Closed-form size of the space run() enumerates over outer().
  virtual ExactInt expected_candidates() const = 0;
  /// Set when the parameters fall outside the statement's hypotheses.
  virtual std::optional<std::string> inapplicable() const { return std::nullopt; }
};

/// Validates params and prepares the claim. Throws UsageError.
std::unique_ptr<ClaimRunner> make_runner(ClaimId id, const Params& params);

/// Thrown when a run stops early and leaves a checkpoint behind.
struct RunInterrupted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::size_t jobs = 1;
  std::optional<std::string> checkpoint_path;
  std::optional<std::size_t> halt_after_chunks;  // testing hook for kill/resume
  std::size_t chunks = 16;
  const std::atomic<bool>* stop = nullptr;         // checked between chunks
  std::function<void(const std::string&)> progress;
};

struct CheckpointFile {
  static constexpr int kFormatVersion = 1;
  int format_version = kFormatVersion;
  ClaimId claim = ClaimId::T1_FORWARD;
  Params params;
  std::int64_t completed_prefix = 0;  // exclusive upper value of the outer variable
  ClaimChunk partial;
  double elapsed_seconds = 0;
};

std::string checkpoint_to_json(const CheckpointFile& cp);
/// Throws std::runtime_error on malformed input; records are re-verified.
CheckpointFile checkpoint_from_json(const std::string& text);

/// Throws UsageError for bad params, RunInterrupted on an early stop,
/// std::runtime_error on a checkpoint mismatch. Search failures such as
/// FactorizationIncomplete propagate.
ClaimOutcome run_claim(ClaimId id, const Params& params, const RunOptions& opts = {});

/// Every claim at the profile defaults. Failures become Error outcomes.
std::vector<ClaimOutcome> run_suite(Profile profile, const RunOptions& opts = {});

}  // namespace fltlab
