#pragma once

#include <string>
#include <vector>

#include "fltlab/arith.hpp"
#include "fltlab/powersum.hpp"

namespace fltlab {

/// Version of the embedded counterexample table; bump when lines change.
inline constexpr int kAppendixTableVersion = 1;

/// One published counterexample to Euler's sum-of-powers conjecture, stored
/// exactly as printed (term order and values), typos included.
struct AppendixLine {
  std::string attribution;
  unsigned k = 1;
  std::vector<ExactInt> terms;  // printed left-hand side, printed order
  ExactInt rhs_value;           // base of the right-hand side power
  bool as_printed = true;
};

const std::vector<AppendixLine>& appendix_lines();

struct SlotRecovery {
  std::size_t slot = 0;  // 1-based; terms first, then the right-hand side
  bool rhs = false;
  Recovery recovery;
};

struct AppendixVerdict {
  AppendixLine line;
  IdentityVerdict identity;
  CoprimeCheck coprime;  // over the printed terms followed by the rhs value
  std::vector<SlotRecovery> recoveries;  // only for unbalanced lines
};

/// Evaluates every line as printed. Nothing is corrected; unbalanced lines
/// get a missing-term recovery attempt per slot.
std::vector<AppendixVerdict> verify_appendix();

}  // namespace fltlab
