#include "fltlab/exact_int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace fltlab {

namespace {

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

mpz_class mpz_from_u64(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

ExactInt::ExactInt(unsigned long v) : ExactInt(static_cast<unsigned long long>(v)) {}

ExactInt::ExactInt(unsigned long long v) {
  if (v <= static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max())) {
    rep_ = static_cast<std::int64_t>(v);
  } else {
    rep_ = mpz_from_u64(v);
  }
}

ExactInt::ExactInt(const mpz_class& v) : rep_(v) { normalize(); }
ExactInt::ExactInt(mpz_class&& v) : rep_(std::move(v)) { normalize(); }

ExactInt ExactInt::from_i128(__int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return ExactInt(static_cast<long long>(v));
  }
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (neg) r = -r;
  return ExactInt(std::move(r));
}

ExactInt ExactInt::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw UsageError("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw UsageError("integer literal has no digits: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw UsageError("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(mpz_class(s, 10));
}

void ExactInt::normalize() {
  if (auto* b = std::get_if<mpz_class>(&rep_)) {
    if (mpz_fits_slong_p(b->get_mpz_t())) {
      rep_ = static_cast<std::int64_t>(mpz_get_si(b->get_mpz_t()));
    }
  }
}

std::optional<std::int64_t> ExactInt::to_int64() const {
  if (is_small()) return std::get<std::int64_t>(rep_);
  return std::nullopt;
}

std::optional<__int128> ExactInt::to_i128() const {
  if (is_small()) return std::get<std::int64_t>(rep_);
  const mpz_class& b = big();
  if (mpz_sizeinbase(b.get_mpz_t(), 2) > 126) return std::nullopt;
  std::uint64_t limbs[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(limbs, &count, -1, sizeof(std::uint64_t), 0, 0, b.get_mpz_t());
  __int128 mag = (static_cast<__int128>(limbs[1]) << 64) | limbs[0];
  return sgn(b) < 0 ? -mag : mag;
}

mpz_class ExactInt::to_mpz() const {
  if (is_small()) return mpz_from_i64(std::get<std::int64_t>(rep_));
  return big();
}

std::string ExactInt::to_string() const {
  if (is_small()) return std::to_string(std::get<std::int64_t>(rep_));
  return big().get_str(10);
}

int ExactInt::sign() const {
  if (is_small()) {
    const auto v = std::get<std::int64_t>(rep_);
    return (v > 0) - (v < 0);
  }
  return sgn(big());
}

bool ExactInt::is_odd() const {
  if (is_small()) return (std::get<std::int64_t>(rep_) & 1) != 0;
  return mpz_odd_p(big().get_mpz_t()) != 0;
}

std::size_t ExactInt::bit_length() const {
  if (is_zero()) return 0;
  if (is_small()) {
    const auto v = std::get<std::int64_t>(rep_);
    const std::uint64_t mag = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    return 64 - static_cast<std::size_t>(__builtin_clzll(mag));
  }
  return mpz_sizeinbase(big().get_mpz_t(), 2);
}

std::uint64_t ExactInt::mod_u64(std::uint64_t m) const {
  if (m == 0) throw UsageError("modulus must be positive");
  if (is_small()) {
    const auto v = std::get<std::int64_t>(rep_);
    const __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), big().get_mpz_t(), mpz_from_u64(m).get_mpz_t());
  return ExactInt(r).to_i128().value();
}

ExactInt ExactInt::operator-() const {
  if (is_small()) {
    const auto v = std::get<std::int64_t>(rep_);
    if (v != std::numeric_limits<std::int64_t>::min()) return ExactInt(static_cast<long long>(-v));
  }
  return ExactInt(mpz_class(-to_mpz()));
}

ExactInt& ExactInt::operator+=(const ExactInt& o) {
  if (is_small() && o.is_small()) {
    if (auto r = checked_add(std::get<std::int64_t>(rep_), std::get<std::int64_t>(o.rep_))) {
      rep_ = *r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() + o.to_mpz());
  normalize();
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& o) {
  if (is_small() && o.is_small()) {
    if (auto r = checked_sub(std::get<std::int64_t>(rep_), std::get<std::int64_t>(o.rep_))) {
      rep_ = *r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() - o.to_mpz());
  normalize();
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& o) {
  if (is_small() && o.is_small()) {
    if (auto r = checked_mul(std::get<std::int64_t>(rep_), std::get<std::int64_t>(o.rep_))) {
      rep_ = *r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() * o.to_mpz());
  normalize();
  return *this;
}

ExactInt& ExactInt::operator/=(const ExactInt& o) {
  if (o.is_zero()) throw UsageError("division by zero");
  if (is_small() && o.is_small()) {
    const auto a = std::get<std::int64_t>(rep_);
    const auto b = std::get<std::int64_t>(o.rep_);
    if (!(a == std::numeric_limits<std::int64_t>::min() && b == -1)) {
      rep_ = a / b;
      return *this;
    }
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  rep_ = std::move(q);
  normalize();
  return *this;
}

ExactInt& ExactInt::operator%=(const ExactInt& o) {
  if (o.is_zero()) throw UsageError("division by zero");
  if (is_small() && o.is_small()) {
    const auto a = std::get<std::int64_t>(rep_);
    const auto b = std::get<std::int64_t>(o.rep_);
    rep_ = (b == -1) ? std::int64_t{0} : a % b;
    return *this;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  rep_ = std::move(r);
  normalize();
  return *this;
}

bool operator==(const ExactInt& a, const ExactInt& b) {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return std::get<std::int64_t>(a.rep_) == std::get<std::int64_t>(b.rep_);
  return a.big() == b.big();
}

std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
  if (a.is_small() && b.is_small()) {
    return std::get<std::int64_t>(a.rep_) <=> std::get<std::int64_t>(b.rep_);
  }
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

std::size_t ExactInt::hash() const {
  if (is_small()) return std::hash<std::int64_t>{}(std::get<std::int64_t>(rep_));
  const mpz_srcptr p = big().get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  const int n = std::abs(p->_mp_size);
  for (int i = 0; i < n; ++i) {
    h ^= std::hash<mp_limb_t>{}(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ExactInt abs(const ExactInt& v) { return v.sign() < 0 ? -v : v; }

bool divides(const ExactInt& d, const ExactInt& n) {
  if (d.is_zero()) return n.is_zero();
  return (n % d).is_zero();
}

std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::int64_t> checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<__int128> checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<__int128> checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<__int128> checked_pow(__int128 base, unsigned exp) {
  __int128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

std::string i128_to_string(__int128 v) { return ExactInt::from_i128(v).to_string(); }

}  // namespace fltlab
