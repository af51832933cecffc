#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fltlab/arith.hpp"
#include "fltlab/exact_int.hpp"
#include "fltlab/powersum.hpp"

namespace fltlab {

/// Monic polynomial with integer coefficients, highest degree first.
class MonicIntPoly {
 public:
  /// Throws UsageError unless coeffs.size() >= 2 and coeffs.front() == 1.
  explicit MonicIntPoly(std::vector<ExactInt> coeffs);

  /// prod (x - r) over roots; degree 0 is rejected.
  static MonicIntPoly from_roots(const std::vector<ExactInt>& roots);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^power.
  const ExactInt& coeff(std::size_t power) const { return coeffs_[degree() - power]; }
  /// Signed trailing coefficient a0.
  const ExactInt& constant() const { return coeffs_.back(); }

  ExactInt evaluate(const ExactInt& x) const;

  /// Canonical text, e.g. "x^3 - 481*x + 3600".
  std::string to_string() const;

  friend bool operator==(const MonicIntPoly&, const MonicIntPoly&) = default;

 private:
  std::vector<ExactInt> coeffs_;
};

/// Product of two monic polynomials.
MonicIntPoly multiply(const MonicIntPoly& a, const MonicIntPoly& b);

/// Synthetic division by (x - r); the remainder is p(r).
struct LinearDivision {
  std::vector<ExactInt> quotient;  // highest first, monic, may be just {1}
  ExactInt remainder;
};
LinearDivision divide_linear(const std::vector<ExactInt>& coeffs, const ExactInt& r);

/// Integer roots with multiplicity, ascending.
std::vector<ExactInt> integer_roots(const MonicIntPoly& poly, const FactorizationBudget& budget = {});

enum class SplitType { FullySplit, PartialSplit, NoLinearFactor };
std::string to_string(SplitType t);

struct SplitReport {
  std::vector<ExactInt> integer_roots;
  std::optional<MonicIntPoly> residual_factor;
  SplitType split_type = SplitType::NoLinearFactor;
};

/// Splits off every integer root; the reconstruction
/// prod (x - r) * residual == poly is checked before returning.
SplitReport analyze(const MonicIntPoly& poly, const FactorizationBudget& budget = {});

enum class CubicClass { Irreducible, OneLinearTimesIrreducibleQuadratic, ThreeLinear };
std::string to_string(CubicClass c);

/// x^3 + b x + a^n. Throws UsageError unless a > 0, b != 0, gcd(a, b) = 1.
CubicClass classify_cubic(const ExactInt& b, const ExactInt& a, unsigned n);

MonicIntPoly cubic_from_params(const ExactInt& b, const ExactInt& a, unsigned n);

struct FermatWitness {
  ExactInt p;
  ExactInt q;
  ExactInt r;
  unsigned n = 1;
  friend bool operator==(const FermatWitness&, const FermatWitness&) = default;
};

/// Throws UsageError unless p, q, r > 0, n >= 1, p^n + q^n = r^n and the
/// three are pairwise coprime.
void validate_witness(const FermatWitness& w);

struct CubicConstruction {
  MonicIntPoly poly;
  ExactInt a;  // p*q*r
  ExactInt b;
  bool gcd_ab_is_one = false;
  bool distinct_roots = true;  // false only for p = q = 1
};

/// (x - p^n)(x - q^n)(x + r^n), expanded.
CubicConstruction build_cubic(const FermatWitness& w);

enum class ExtractFailure {
  None,
  NotSplit,
  NonDistinctRoots,
  NotPairwiseCoprime,
  NotPerfectPower,
  SignPattern,
};
std::string to_string(ExtractFailure f);

struct FermatExtraction {
  std::optional<FermatWitness> witness;  // p <= q
  ExtractFailure failure = ExtractFailure::None;
  bool distinct_roots = true;
};

/// Inverse of build_cubic for x^3 + b x + a^n. Throws UsageError when the
/// polynomial is not of that form with a > 0, b != 0, gcd(a, b) = 1.
FermatExtraction extract_fermat_witness(const MonicIntPoly& poly, unsigned n);

struct PowerSumExtraction {
  std::optional<PowerSumInstance> instance;
  ExtractFailure failure = ExtractFailure::None;
  bool distinct_roots = true;
};

/// Reads a balanced power-sum identity off the roots of a split polynomial
/// x^n + a_{n-2} x^{n-2} + ... + a_1 x + a_0. Throws UsageError naming the
/// violated precondition.
PowerSumExtraction extract_powersum_identity(const MonicIntPoly& poly, unsigned k);

struct PowerSumPoly {
  MonicIntPoly poly;
  CoprimeCheck terms_coprime;
  bool gcd_a1_a0_is_one = false;
};

/// Polynomial with roots x_i^k and -y_j^k. Throws UsageError when the
/// instance is not balanced.
PowerSumPoly build_poly_from_powersum(const PowerSumInstance& inst);

}  // namespace fltlab
