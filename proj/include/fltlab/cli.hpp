#pragma once

#include <atomic>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fltlab/exact_int.hpp"
#include "fltlab/poly.hpp"

namespace fltlab {

/// Syntax or shape error in a polynomial expression. position is the
/// 0-based byte offset of the offending token.
class PolyParseError : public UsageError {
 public:
  PolyParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct PolyExpr {
  std::string source;
  MonicIntPoly poly;
};

/// Terms c*x^e, x^e, c*x, x, c joined by + or - (U+2212 accepted), with an
/// optional sign on the first term. Whitespace is ignored. The result must
/// be monic of degree >= 1 with each exponent used once.
PolyExpr parse_poly(std::string_view text);

/// Set by the SIGINT handler; checked between checkpointed chunks.
std::atomic<bool>& interrupt_flag();

/// Runs one command line. Exit codes: 0 success / holds, 1 usage error,
/// 2 runtime error, 3 solutions or counterexample found.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fltlab
