#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fltlab/arith.hpp"
#include "fltlab/exact_int.hpp"
#include "fltlab/solution.hpp"

namespace fltlab {

/// x_1^k + ... + x_h^k = y_1^k + ... + y_l^k, each side ascending.
struct PowerSumInstance {
  unsigned k = 1;
  std::vector<ExactInt> lhs;
  std::vector<ExactInt> rhs;

  /// Sorts both sides. Throws UsageError for k = 0, an empty side or a
  /// nonpositive term.
  static PowerSumInstance make(unsigned k, std::vector<ExactInt> lhs, std::vector<ExactInt> rhs);

  std::size_t h() const { return lhs.size(); }
  std::size_t l() const { return rhs.size(); }
  /// lhs followed by rhs.
  std::vector<ExactInt> terms() const;

  friend bool operator==(const PowerSumInstance&, const PowerSumInstance&) = default;
};

struct IdentityVerdict {
  bool balanced = false;
  ExactInt lhs_sum;
  ExactInt rhs_sum;
  ExactInt deficit;  // rhs_sum - lhs_sum
};

IdentityVerdict verify_identity(const PowerSumInstance& inst);
IdentityVerdict verify_identity(unsigned k, const std::vector<ExactInt>& lhs, const std::vector<ExactInt>& rhs);

/// One side may hold a single unknown slot (nullopt).
struct PartialInstance {
  unsigned k = 1;
  std::vector<std::optional<ExactInt>> lhs;
  std::vector<std::optional<ExactInt>> rhs;
};

enum class RecoveryStatus { Recovered, NonPositiveDeficit, NotPerfectPower };
std::string to_string(RecoveryStatus s);

struct Recovery {
  RecoveryStatus status = RecoveryStatus::NotPerfectPower;
  std::optional<ExactInt> term;
  ExactInt deficit;  // the value the missing term's k-th power must equal
};

/// Throws UsageError unless exactly one slot is unknown and every known term
/// is positive.
Recovery recover_missing_term(const PartialInstance& partial);

enum class CoprimeMode { None, Pairwise };
std::string to_string(CoprimeMode m);

struct EqualSumsOptions {
  /// Entries allowed in the hash table before switching to the ordered join.
  std::size_t table_cap = std::size_t{1} << 24;
  /// Restricts the outermost probe variable (first element of the probe tuple).
  std::optional<OuterRange> outer;
};

struct EqualSumsResult {
  SearchResult search;          // candidates = size of the (left, right) join space covered
  std::uint64_t trivial_excluded = 0;
  bool used_ordered_join = false;
};

/// Validated parameters for an equal-sums search.
struct EqualSumsQuery {
  unsigned h = 1;
  unsigned l = 1;
  unsigned k = 1;
  std::int64_t max = 1;
  CoprimeMode mode = CoprimeMode::None;
};

/// Every (x_1 <= ... <= x_h ; y_1 <= ... <= y_l) with terms in [1, max],
/// sum x^k = sum y^k, no value on both sides, filtered by mode. Meet in the
/// middle: the first ceil(h/2) left terms are tabulated by power sum and
/// probed with (remaining left terms, right terms).
///
/// Throws UsageError unless h >= l >= 1 and h + l <= 6.
EqualSumsResult search_equal_sums(const EqualSumsQuery& q, const EqualSumsOptions& opts = {});

/// A search with its left table built once. run() only reads the table and
/// is safe to call concurrently on disjoint outer ranges.
class EqualSumsSearch {
 public:
  /// Same preconditions as search_equal_sums.
  EqualSumsSearch(const EqualSumsQuery& q, std::size_t table_cap = std::size_t{1} << 24);

  EqualSumsResult run(std::optional<OuterRange> outer = std::nullopt) const;
  bool ordered_join() const;
  const EqualSumsQuery& query() const { return query_; }

  struct Impl {
    virtual ~Impl() = default;
    virtual EqualSumsResult run(std::optional<OuterRange> outer) const = 0;
    virtual bool ordered_join() const = 0;
  };

 private:
  EqualSumsQuery query_;
  std::shared_ptr<const Impl> impl_;
};

/// Outer probe-variable range of a query, for partitioning.
OuterRange equal_sums_outer_range(const EqualSumsQuery& q);

/// Closed-form size of the join space: C(max+h-1, h) * C(max+l-1, l).
ExactInt equal_sums_space_size(const EqualSumsQuery& q);

/// Binomial coefficient with exact arithmetic.
ExactInt binomial(const ExactInt& n, unsigned k);

}  // namespace fltlab
