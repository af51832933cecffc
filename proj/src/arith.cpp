#include "fltlab/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace fltlab {

FactorizationIncomplete::FactorizationIncomplete(ExactInt n, ExactInt cofactor)
    : std::runtime_error("factorization incomplete: " + n.to_string() + " has unfactored cofactor " +
                         cofactor.to_string()),
      input_(std::move(n)),
      cofactor_(std::move(cofactor)) {}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  auto sa = a.to_int64();
  auto sb = b.to_int64();
  if (sa && sb) {
    auto abs_u = [](std::int64_t v) {
      return v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    };
    std::uint64_t x = abs_u(*sa);
    std::uint64_t y = abs_u(*sb);
    while (y != 0) {
      x %= y;
      std::swap(x, y);
    }
    return ExactInt(static_cast<unsigned long long>(x));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return ExactInt(std::move(g));
}

CoprimeCheck pairwise_coprime(std::span<const ExactInt> xs) {
  if (xs.size() < 2) throw UsageError("pairwise_coprime needs at least two values");
  CoprimeCheck out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (gcd(xs[i], xs[j]) != ExactInt(1)) {
        out.coprime = false;
        out.witness_index = {i, j};
        out.witness = {xs[i], xs[j]};
        return out;
      }
    }
  }
  return out;
}

bool is_pairwise_coprime(std::span<const ExactInt> xs) { return pairwise_coprime(xs).coprime; }

ExactInt pow(const ExactInt& base, unsigned exp) {
  if (exp == 0) throw UsageError("exponent must be >= 1");
  if (auto b = base.to_int64()) {
    if (auto r = checked_pow(*b, exp)) return ExactInt::from_i128(*r);
  }
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.to_mpz().get_mpz_t(), exp);
  return ExactInt(std::move(r));
}

namespace {

// Floor k-th root of a 64-bit value via integer Newton iteration.
std::uint64_t u64_kth_root(std::uint64_t n, unsigned k) {
  if (n < 2 || k == 1) return n;
  const unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(n));
  if ((bits + k - 1) / k >= 64) return 1;
  // 2^ceil(bits/k) is an upper bound on the root.
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + k - 1) / k);
  while (true) {
    // x^(k-1), saturating above n.
    unsigned __int128 p = 1;
    bool over = false;
    for (unsigned i = 0; i + 1 < k; ++i) {
      p *= x;
      if (p > n) {
        over = true;
        break;
      }
    }
    const unsigned __int128 q = over ? 0 : n / p;
    const unsigned __int128 y = ((k - 1) * x + q) / k;
    if (y >= x) break;
    x = y;
  }
  return static_cast<std::uint64_t>(x);
}

}  // namespace

KthRoot integer_kth_root(const ExactInt& n, unsigned k) {
  if (k == 0) throw UsageError("root index must be >= 1");
  if (n.sign() < 0) throw UsageError("integer_kth_root needs a nonnegative radicand");
  if (auto s = n.to_int64()) {
    const std::uint64_t r = u64_kth_root(static_cast<std::uint64_t>(*s), k);
    const auto rk = checked_pow(static_cast<__int128>(r), k);
    return {ExactInt(static_cast<unsigned long long>(r)), rk && *rk == *s};
  }
  mpz_class r;
  const bool exact = mpz_root(r.get_mpz_t(), n.to_mpz().get_mpz_t(), k) != 0;
  return {ExactInt(std::move(r)), exact};
}

std::optional<ExactInt> exact_signed_root(const ExactInt& n, unsigned k) {
  if (n.sign() >= 0) {
    auto r = integer_kth_root(n, k);
    if (!r.exact) return std::nullopt;
    return r.root;
  }
  if (k % 2 == 0) return std::nullopt;
  auto r = integer_kth_root(-n, k);
  if (!r.exact) return std::nullopt;
  return -r.root;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_round_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!mr_round_u64(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime_big(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return false;
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  const mpz_class nm1 = n - 1;
  const mpz_class span = n - 3;
  for (int round = 0; round < 64; ++round) {
    const mpz_class a = rng.get_z_range(span) + 2;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t as_u64(const ExactInt& n) {
  auto v = n.to_i128();
  return static_cast<std::uint64_t>(*v);
}

bool fits_u64(const ExactInt& n) {
  return n.sign() >= 0 && n.bit_length() <= 64;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kSieve = 1'000'000;
    std::vector<bool> composite(kSieve + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieve; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieve; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// One Brent rho attempt on n with polynomial x^2 + c. Returns a nontrivial
// factor or 0; `spent` accumulates iterations.
std::uint64_t brent_u64(std::uint64_t n, std::uint64_t c, std::uint64_t cap, std::uint64_t& spent) {
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  std::uint64_t r = 1;
  auto f = [&](std::uint64_t v) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(mulmod(v, v, n)) + c) % n);
  };
  auto absdiff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t m = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < m; ++i) {
        y = f(y);
        q = mulmod(q, absdiff(x, y), n);
      }
      g = std::gcd(q, n);
      k += m;
      spent += m;
      if (spent >= cap) break;
    }
    r <<= 1;
    if (spent >= cap && g == 1) return 0;
  }
  if (g == n) {
    // Batched product overshot; step back one at a time.
    do {
      ys = f(ys);
      g = std::gcd(absdiff(x, ys), n);
    } while (g == 1);
  }
  return (g == n || g == 1) ? 0 : g;
}

mpz_class brent_big(const mpz_class& n, unsigned long c, std::uint64_t cap, std::uint64_t& spent) {
  constexpr std::uint64_t kBatch = 128;
  mpz_class y = 2, x = 2, ys = 2, q = 1, g = 1, t;
  std::uint64_t r = 1;
  auto f = [&](mpz_class& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t m = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < m; ++i) {
        f(y);
        t = abs(x - y);
        q = q * t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      spent += m;
      if (spent >= cap) break;
    }
    r <<= 1;
    if (spent >= cap && g == 1) return 0;
  }
  if (g == n) {
    do {
      f(ys);
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n || g == 1) return 0;
  return g;
}

// Splits a composite n into a nontrivial factor, or returns nullopt when the
// iteration budget runs out.
std::optional<ExactInt> rho_split(const ExactInt& n, std::uint64_t cap) {
  std::uint64_t spent = 0;
  for (unsigned long c = 1; spent < cap; ++c) {
    if (fits_u64(n)) {
      const std::uint64_t d = brent_u64(as_u64(n), c, cap, spent);
      if (d != 0) return ExactInt(static_cast<unsigned long long>(d));
    } else {
      mpz_class d = brent_big(n.to_mpz(), c, cap, spent);
      if (d != 0) return ExactInt(std::move(d));
    }
  }
  return std::nullopt;
}

void split_fully(const ExactInt& input, const ExactInt& n, std::uint64_t cap, std::map<ExactInt, unsigned>& out) {
  if (n == ExactInt(1)) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Rho tends to return n itself on prime powers; peel them first.
  const auto max_k = static_cast<unsigned>(n.bit_length());
  for (unsigned k = 2; k <= max_k; ++k) {
    auto r = integer_kth_root(n, k);
    if (r.exact) {
      std::map<ExactInt, unsigned> sub;
      split_fully(input, r.root, cap, sub);
      for (auto& [p, e] : sub) out[p] += e * k;
      return;
    }
  }
  auto d = rho_split(n, cap);
  if (!d) throw FactorizationIncomplete(input, n);
  split_fully(input, *d, cap, out);
  split_fully(input, n / *d, cap, out);
}

}  // namespace

bool is_prime(const ExactInt& n) {
  if (n.sign() <= 0) return false;
  if (fits_u64(n)) return is_prime_u64(as_u64(n));
  return is_prime_big(n.to_mpz());
}

ExactInt Factorization::product() const {
  ExactInt r(1);
  for (const auto& pp : factors) r *= pow(pp.prime, pp.exponent);
  return r;
}

Factorization factorize(const ExactInt& n, const FactorizationBudget& budget) {
  if (n.sign() <= 0) throw UsageError("factorize needs n >= 1, got " + n.to_string());
  Factorization out{n, {}};
  std::map<ExactInt, unsigned> found;
  ExactInt rest = n;
  const auto& primes = small_primes();
  if (fits_u64(rest)) {
    std::uint64_t m = as_u64(rest);
    for (std::uint32_t p : primes) {
      if (p > budget.trial_limit) break;
      if (static_cast<unsigned __int128>(p) * p > m) break;
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      found[ExactInt(p)] = e;
    }
    rest = ExactInt(static_cast<unsigned long long>(m));
  } else {
    mpz_class m = rest.to_mpz();
    for (std::uint32_t p : primes) {
      if (p > budget.trial_limit) break;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      found[ExactInt(p)] = e;
      if (m == 1) break;
    }
    rest = ExactInt(std::move(m));
  }
  if (rest != ExactInt(1)) split_fully(n, rest, budget.rho_iterations, found);
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

std::vector<ExactInt> divisors(const Factorization& f) {
  std::vector<ExactInt> out{ExactInt(1)};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    ExactInt power(1);
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Mod4Class c) {
  switch (c) {
    case Mod4Class::Two:
      return "Two";
    case Mod4Class::PlusOne:
      return "PlusOne";
    case Mod4Class::MinusOne:
      return "MinusOne";
  }
  return "?";
}

Mod4Class mod4_class(const ExactInt& p) {
  if (!is_prime(p)) throw UsageError("mod4_class needs a prime, got " + p.to_string());
  if (p == ExactInt(2)) return Mod4Class::Two;
  return p.mod_u64(4) == 1 ? Mod4Class::PlusOne : Mod4Class::MinusOne;
}

}  // namespace fltlab
