#pragma once

#include <string>
#include <vector>

#include "fltlab/arith.hpp"
#include "fltlab/exact_int.hpp"

namespace fltlab {

struct GaussianInt {
  ExactInt re;
  ExactInt im;

  GaussianInt() = default;
  GaussianInt(ExactInt r, ExactInt i = ExactInt(0)) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_unit() const;
  ExactInt norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  std::string to_string() const;

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Lexicographic on (re, im); only used for canonical ordering of results.
bool operator<(const GaussianInt& a, const GaussianInt& b);

/// Quotient and remainder with the quotient rounded to the nearest lattice
/// point, so norm(remainder) <= norm(divisor) / 2.
struct GaussianDivMod {
  GaussianInt quotient;
  GaussianInt remainder;
};
GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b);

/// a / b when b divides a in Z[i], otherwise nullopt.
std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b);

bool gaussian_divides(const GaussianInt& d, const GaussianInt& z);

/// The associate u*z (u in {1, i, -1, -i}) with re > 0 and im >= 0; zero maps
/// to zero.
GaussianInt canonical_associate(const GaussianInt& z);

/// Euclidean gcd, canonicalized to the first quadrant. Throws UsageError when
/// both inputs are zero.
GaussianInt gaussian_gcd(const GaussianInt& z, const GaussianInt& w);

struct GaussianPrimePower {
  GaussianInt prime;  // canonical associate
  unsigned exponent = 0;
};

struct GaussianFactorization {
  GaussianInt unit;  // one of 1, i, -1, -i
  std::vector<GaussianPrimePower> factors;

  GaussianInt product() const;
};

/// Factors z != 0 through the rational factorization of its norm.
GaussianFactorization gaussian_factorize(const GaussianInt& z, const FactorizationBudget& budget = {});

/// True iff z = w^2 for some Gaussian integer w: every prime exponent even and
/// the leftover unit is itself a square (1 or -1). Zero counts as a square.
bool is_gaussian_square(const GaussianInt& z, const FactorizationBudget& budget = {});

/// Some w with w^2 = z (the one with re > 0, or re = 0 and im >= 0), or
/// nullopt when z is not a square.
std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& z, const FactorizationBudget& budget = {});

}  // namespace fltlab
