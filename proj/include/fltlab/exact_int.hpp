#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fltlab {

/// Raised when an operation's precondition is violated by the caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signed integer of unbounded size.
///
/// Values that fit in int64 are held inline and combined with
/// overflow-checked builtins; any result that leaves the int64 range is
/// recomputed in GMP. The representation is canonical: a value is stored
/// as big only when it does not fit in int64, so equality and hashing can
/// look at the active alternative first.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(int v) : rep_(static_cast<std::int64_t>(v)) {}
  ExactInt(long v) : rep_(static_cast<std::int64_t>(v)) {}
  ExactInt(long long v) : rep_(static_cast<std::int64_t>(v)) {}
  ExactInt(unsigned v) : rep_(static_cast<std::int64_t>(v)) {}
  ExactInt(unsigned long v);
  ExactInt(unsigned long long v);
  explicit ExactInt(const mpz_class& v);
  explicit ExactInt(mpz_class&& v);

  static ExactInt from_i128(__int128 v);
  /// Parses an optionally signed decimal literal. Throws UsageError.
  static ExactInt parse(std::string_view text);

  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::optional<std::int64_t> to_int64() const;
  std::optional<__int128> to_i128() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const;
  bool is_even() const { return !is_odd(); }
  /// Number of bits in |value|; 0 for zero.
  std::size_t bit_length() const;
  /// Value modulo m for 0 < m, in [0, m).
  std::uint64_t mod_u64(std::uint64_t m) const;

  ExactInt operator-() const;
  ExactInt& operator+=(const ExactInt& o);
  ExactInt& operator-=(const ExactInt& o);
  ExactInt& operator*=(const ExactInt& o);
  /// Truncating division, C++ semantics. Division by zero throws UsageError.
  ExactInt& operator/=(const ExactInt& o);
  ExactInt& operator%=(const ExactInt& o);

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  friend ExactInt operator/(ExactInt a, const ExactInt& b) { return a /= b; }
  friend ExactInt operator%(ExactInt a, const ExactInt& b) { return a %= b; }

  friend bool operator==(const ExactInt& a, const ExactInt& b);
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b);

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v);

  std::size_t hash() const;

 private:
  void normalize();
  const mpz_class& big() const { return std::get<mpz_class>(rep_); }

  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

ExactInt abs(const ExactInt& v);
/// True iff d divides n (d == 0 divides only 0).
bool divides(const ExactInt& d, const ExactInt& n);

// Checked fixed-width helpers. An empty result means the exact value does
// not fit and the caller must escalate to ExactInt.
std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b);
std::optional<std::int64_t> checked_sub(std::int64_t a, std::int64_t b);
std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b);
std::optional<__int128> checked_add(__int128 a, __int128 b);
std::optional<__int128> checked_mul(__int128 a, __int128 b);
std::optional<__int128> checked_pow(__int128 base, unsigned exp);

std::string i128_to_string(__int128 v);

}  // namespace fltlab

template <>
struct std::hash<fltlab::ExactInt> {
  std::size_t operator()(const fltlab::ExactInt& v) const noexcept { return v.hash(); }
};
