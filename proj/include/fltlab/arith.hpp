#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fltlab/exact_int.hpp"

namespace fltlab {

/// Raised when trial division and the rho stage both give up on a cofactor.
class FactorizationIncomplete : public std::runtime_error {
 public:
  FactorizationIncomplete(ExactInt n, ExactInt cofactor);
  const ExactInt& input() const { return input_; }
  const ExactInt& cofactor() const { return cofactor_; }

 private:
  ExactInt input_;
  ExactInt cofactor_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);

struct CoprimeCheck {
  bool coprime = true;
  // Lexicographically first offending index pair (i < j) and its values.
  std::optional<std::pair<std::size_t, std::size_t>> witness_index;
  std::optional<std::pair<ExactInt, ExactInt>> witness;
};

/// Throws UsageError for fewer than two values.
CoprimeCheck pairwise_coprime(std::span<const ExactInt> xs);
bool is_pairwise_coprime(std::span<const ExactInt> xs);

/// Exact base^exp. exp = 0 is rejected with UsageError.
ExactInt pow(const ExactInt& base, unsigned exp);

struct KthRoot {
  ExactInt root;
  bool exact = false;
};

/// Floor of the k-th root of n >= 0; `exact` iff root^k == n.
KthRoot integer_kth_root(const ExactInt& n, unsigned k);

/// Signed variant: for odd k negative n has a negative root.
/// Returns nullopt when n is not a perfect k-th power of an integer.
std::optional<ExactInt> exact_signed_root(const ExactInt& n, unsigned k);

/// Miller-Rabin. Deterministic witness set below 2^64; above, 64 rounds with
/// bases drawn from a fixed-seed generator.
bool is_prime(const ExactInt& n);

struct PrimePower {
  ExactInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  ExactInt n;
  std::vector<PrimePower> factors;  // primes strictly increasing

  ExactInt product() const;
};

struct FactorizationBudget {
  std::uint64_t trial_limit = 1'000'000;
  std::uint64_t rho_iterations = std::uint64_t{1} << 24;
};

/// Trial division up to budget.trial_limit, then Pollard rho with Brent's
/// cycle detection on every composite cofactor. Throws
/// FactorizationIncomplete rather than returning a partial answer.
Factorization factorize(const ExactInt& n, const FactorizationBudget& budget = {});

/// All positive divisors of n >= 1, ascending.
std::vector<ExactInt> divisors(const Factorization& f);

enum class Mod4Class { Two, PlusOne, MinusOne };

std::string to_string(Mod4Class c);

/// Throws UsageError if p is not prime.
Mod4Class mod4_class(const ExactInt& p);

}  // namespace fltlab
