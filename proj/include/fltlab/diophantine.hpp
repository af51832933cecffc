#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fltlab/arith.hpp"
#include "fltlab/gaussian.hpp"
#include "fltlab/powersum.hpp"
#include "fltlab/solution.hpp"

namespace fltlab {

// Bounded exhaustive searches. Every search enumerates a fixed domain whose
// size is given by the matching *_space_size function; `outer` restricts the
// outermost variable so that runs can be partitioned and merged.
//
// Bounds are inclusive and apply to |v| of each enumerated variable. Derived
// roots (x3 in the product forms, x4 in the Euler product) are not bounded.

/// x <= y < z <= max with x^n + y^n = z^n. Candidates: pairs x <= y.
SearchResult search_fermat_triples(const SearchBounds& b, bool primitive_only,
                                   std::optional<OuterRange> outer = std::nullopt);
ExactInt fermat_space_size(std::int64_t max);

struct PairSystem {
  ExactInt X, Y, Xp, Yp;
};
/// Throws UsageError unless all positive, gcd(X,Y) = gcd(Xp,Yp) = 1, XY = XpYp.
void validate(const PairSystem& s);

/// Coprime X <= Y and every coprime splitting Xp * Yp = XY, all <= max, with
/// X^n + Y^n = Xp^n - Yp^n. Candidates: pairs X <= Y.
SearchResult search_pair_system(const SearchBounds& b, std::optional<OuterRange> outer = std::nullopt);
ExactInt pair_system_space_size(std::int64_t max);

struct Mod4Counts {
  unsigned two = 0;
  unsigned plus_one = 0;
  unsigned minus_one = 0;  // counted with multiplicity
};

struct ParityReport {
  ExactInt xy_mod2;
  ExactInt lhs;  // X^n + Y^n
  ExactInt rhs;  // Xp^n - Yp^n
  unsigned lhs_mod4 = 0;
  unsigned rhs_mod4 = 0;
  std::array<Mod4Counts, 4> counts;  // X, Y, Xp, Yp
  bool obstructed = false;           // lhs != rhs (mod 4)
};

ParityReport parity_report(const PairSystem& s, unsigned n);

enum class QuadMode { PairsXY_ZU, FullyPairwise };
std::string to_string(QuadMode m);

/// x^n + y^n + z^n = u^n with the coprimality mode and optionally xy = zu.
/// Canonical order x <= y; in FullyPairwise mode without xy = zu also y <= z.
SearchResult search_quadruple(const SearchBounds& b, QuadMode mode, bool require_xy_eq_zu,
                              std::optional<OuterRange> outer = std::nullopt);
ExactInt quadruple_space_size(std::int64_t max, QuadMode mode, bool require_xy_eq_zu);

/// Signed x1 <= x2 <= x3 in [-max, max] \ {0}, pairwise coprime, and x4 in
/// [-max, max] with x1^3 + x2^3 + x3^3 + 3 x4^n = 0 and (x1+x2+x3) x4 = 0.
/// The outer variable is x1 over [-max, max].
SearchResult search_sys3(const SearchBounds& b, std::optional<OuterRange> outer = std::nullopt);
OuterRange sys3_outer_range(std::int64_t max);
ExactInt sys3_space_size(std::int64_t max);

/// x1 < x2 <= max with x1 x2 (x1 + x2) a perfect n-th power.
SearchResult search_product_form(unsigned n, std::int64_t max, CoprimeMode mode = CoprimeMode::Pairwise,
                                 std::optional<OuterRange> outer = std::nullopt);
ExactInt product_form_space_size(std::int64_t max);

enum class Ring { Z, GaussianZ };
std::string to_string(Ring r);

/// x1 x2 (x1^2 + x2^2) a nonzero perfect square. Over Z: coprime
/// 0 < x1 < x2 <= max. Over Z[i]: Gaussian-coprime x1, x2 with
/// 0 < norm <= max, one representative per orbit under joint units,
/// independent sign changes and swap. For Z[i] the outer variable is the
/// index of x1 in gaussian_ball(max).
SearchResult search_product_squares(std::int64_t max, Ring ring, std::optional<OuterRange> outer = std::nullopt);
OuterRange product_squares_outer_range(std::int64_t max, Ring ring);
ExactInt product_squares_space_size(std::int64_t max, Ring ring);

/// Nonzero Gaussian integers with norm <= max, sorted by (re, im).
std::vector<GaussianInt> gaussian_ball(std::int64_t max);
/// Lex-smallest (x1, x2) in the orbit used by search_product_squares.
std::pair<GaussianInt, GaussianInt> canonical_gaussian_pair(const GaussianInt& x1, const GaussianInt& x2);

/// x1 < x2 < x3 <= max, {x1, x2, x3, x1+x2+x3} pairwise coprime, product a
/// perfect n-th power.
SearchResult search_euler_product(unsigned n, std::int64_t max, std::optional<OuterRange> outer = std::nullopt);
ExactInt euler_product_space_size(std::int64_t max);

/// Coprime a < b <= a_max, 1 <= n <= n_max, whose x^2 + (a^n + b^n) x - (ab)^n
/// is reducible over Q. Candidates: all pairs a < b times n_max.
SearchResult search_quadratic_irreducibility(std::int64_t a_max, unsigned n_max,
                                             std::optional<OuterRange> outer = std::nullopt);
ExactInt quadratic_space_size(std::int64_t a_max, unsigned n_max);

}  // namespace fltlab
