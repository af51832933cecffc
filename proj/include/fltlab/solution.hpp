#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fltlab/exact_int.hpp"

namespace fltlab {

/// Equations and systems that searches emit solutions for. Each has a fixed
/// variable layout checked by verify_record.
enum class Equation {
  Fermat,            // n, x, y, z:             x^n + y^n = z^n
  PairSystem,        // n, X, Y, Xp, Yp:        X^n + Y^n = Xp^n - Yp^n, XY = XpYp
  Quadruple,         // n, x, y, z, u:          x^n + y^n + z^n = u^n
  Sys3,              // n, x1, x2, x3, x4:      x1^3+x2^3+x3^3+3x4^n = 0, (x1+x2+x3)x4 = 0
  ProductForm,       // n, x1, x2, x3:          x1 x2 (x1 + x2) = x3^n
  ProductSquaresZ,   // x1, x2, x3:             x1 x2 (x1^2 + x2^2) = x3^2
  ProductSquaresZi,  // x1_re .. x3_im:         same over Z[i]
  EulerProduct,      // n, x1, x2, x3, x4:      x1 x2 x3 (x1 + x2 + x3) = x4^n
  Quadratic,         // a, b, n, r1, r2:        (x - r1)(x - r2) = x^2 + (a^n + b^n) x - (ab)^n
  EqualSums,         // k, x1..xh, y1..yl:      sum x^k = sum y^k
  CubicSplit,        // a, b, n, r1, r2, r3:    (x - r1)(x - r2)(x - r3) = x^3 + b x + a^n
};

std::string to_string(Equation e);

struct SolutionRecord {
  Equation equation = Equation::Fermat;
  std::vector<std::pair<std::string, ExactInt>> vars;
  std::vector<std::string> constraint_profile;

  const ExactInt& var(const std::string& name) const;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Substitutes the variables back into the equation (and every recognised
/// constraint in the profile) with exact arithmetic. Returns an empty string
/// on success, otherwise a description of the first failure.
std::string verify_record(const SolutionRecord& rec);

/// Builds a record and re-verifies it; a failing record is a logic error.
SolutionRecord make_record(Equation eq, std::vector<std::pair<std::string, ExactInt>> vars,
                           std::vector<std::string> profile = {});

/// Lexicographic on variable values (in declaration order), then equation.
bool record_less(const SolutionRecord& a, const SolutionRecord& b);
void sort_records(std::vector<SolutionRecord>& records);

struct SearchBounds {
  ExactInt per_var_max;  // inclusive bound on |v| for each variable
  unsigned exponent = 1;

  /// per_var_max as int64. Throws UsageError when < 1 or too large to enumerate.
  std::int64_t max() const;
};

/// Inclusive range of the outermost enumeration variable.
struct OuterRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return hi < lo; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
  OuterRange intersect(const OuterRange& o) const;
};

/// Splits r into `parts` contiguous, ordered, nonempty pieces (fewer if r is small).
std::vector<OuterRange> partition(const OuterRange& r, std::size_t parts);

struct SearchResult {
  std::vector<SolutionRecord> records;
  std::uint64_t candidates = 0;
  std::uint64_t filtered = 0;  // equation solutions rejected by a side condition

  void merge(SearchResult&& other);
  /// Sorts records and removes duplicates.
  void finalize();
};

/// Runs fn over each piece on up to `jobs` threads and merges the pieces in
/// range order, then finalizes. Exceptions from workers are rethrown.
SearchResult run_partitioned(const OuterRange& range, std::size_t parts, std::size_t jobs,
                             const std::function<SearchResult(const OuterRange&)>& fn);

}  // namespace fltlab
