#include <doctest.h>

#include <vector>

#include "fltlab/arith.hpp"

using namespace fltlab;

namespace {

std::vector<ExactInt> v(std::initializer_list<long long> xs) {
  std::vector<ExactInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

bool trial_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == ExactInt(6));
  CHECK(gcd(0, 5) == ExactInt(5));
  CHECK(gcd(0, 0) == ExactInt(0));
  CHECK(gcd(-12, 18) == ExactInt(6));
  CHECK(gcd(95800, 414560) == ExactInt(40));
  for (long long a = -20; a <= 20; ++a)
    for (long long b = -20; b <= 20; ++b) {
      const ExactInt g = gcd(a, b);
      CHECK(g == gcd(b, a));
      CHECK(g.sign() >= 0);
      CHECK(divides(g, ExactInt(a)));
      CHECK(divides(g, ExactInt(b)));
    }
}

TEST_CASE("pairwise coprime with witness") {
  CHECK(pairwise_coprime(v({3, 4, 5})).coprime);
  const auto lp = pairwise_coprime(v({27, 84, 110, 133, 144}));
  REQUIRE_FALSE(lp.coprime);
  // First offending pair in index order: gcd(27, 84) = 3.
  CHECK(lp.witness->first == ExactInt(27));
  CHECK(lp.witness->second == ExactInt(84));
  CHECK(lp.witness_index == std::pair<std::size_t, std::size_t>{0, 1});
  const auto tail = pairwise_coprime(v({84, 110, 133, 144}));
  CHECK(tail.witness->first == ExactInt(84));
  CHECK(tail.witness->second == ExactInt(110));
  const auto frye = pairwise_coprime(v({95800, 217519, 414560, 422481}));
  REQUIRE_FALSE(frye.coprime);
  CHECK(frye.witness->first == ExactInt(95800));
  CHECK(frye.witness->second == ExactInt(414560));
  CHECK_THROWS_AS(pairwise_coprime(v({3})), UsageError);
}

TEST_CASE("pow") {
  CHECK(pow(2, 10) == ExactInt(1024));
  CHECK(pow(144, 5) == ExactInt(61917364224LL));
  CHECK(pow(-3, 3) == ExactInt(-27));
  CHECK_THROWS_AS(pow(2, 0), UsageError);
  // Repeated multiplication oracle.
  ExactInt acc(1);
  for (int i = 0; i < 70; ++i) acc *= ExactInt(7);
  CHECK(pow(7, 70) == acc);
}

TEST_CASE("integer kth root") {
  auto r = integer_kth_root(3600, 2);
  CHECK(r.root == ExactInt(60));
  CHECK(r.exact);
  r = integer_kth_root(100, 3);
  CHECK(r.root == ExactInt(4));
  CHECK_FALSE(r.exact);
  const ExactInt deficit = pow(20615673, 4) - pow(2682440, 4) - pow(18796760, 4);
  r = integer_kth_root(deficit, 4);
  CHECK(r.root == ExactInt(15365639));
  CHECK(r.exact);
  for (long long n = 0; n <= 2000; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      const auto q = integer_kth_root(n, k);
      const ExactInt next = q.root + ExactInt(1);
      CHECK(pow(q.root.is_zero() ? ExactInt(0) : q.root, k) <= ExactInt(n));
      CHECK(pow(next, k) > ExactInt(n));
      CHECK(q.exact == (pow(q.root, k) == ExactInt(n)));
    }
  CHECK(exact_signed_root(-27, 3) == ExactInt(-3));
  CHECK_FALSE(exact_signed_root(-4, 2));
}

TEST_CASE("primality against trial division") {
  for (long long n = -5; n <= 20000; ++n) CHECK_MESSAGE(is_prime(n) == trial_prime(n), n);
  CHECK(is_prime(ExactInt::parse("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_prime(ExactInt::parse("3825123056546413051")));  // strong pseudoprime to bases 2..23
  CHECK(is_prime(ExactInt::parse("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  const auto f = factorize(95800);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{2, 3});
  CHECK(f.factors[1] == PrimePower{5, 2});
  CHECK(f.factors[2] == PrimePower{479, 1});
  CHECK(factorize(479).factors == std::vector<PrimePower>{{479, 1}});
  // Beyond trial division: product of two primes above 10^6.
  const ExactInt semi = ExactInt(1000003) * ExactInt(1000033);
  const auto s = factorize(semi);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0].prime == ExactInt(1000003));
  CHECK(s.product() == semi);
  const ExactInt big = pow(2, 61) - ExactInt(1);
  CHECK(factorize(big * ExactInt(1000003)).product() == big * ExactInt(1000003));
  CHECK_THROWS_AS(factorize(0), UsageError);
  for (long long n = 1; n <= 3000; ++n) {
    const auto fn = factorize(n);
    CHECK(fn.product() == ExactInt(n));
    for (std::size_t i = 0; i < fn.factors.size(); ++i) {
      CHECK(trial_prime(*fn.factors[i].prime.to_int64()));
      if (i) CHECK(fn.factors[i - 1].prime < fn.factors[i].prime);
    }
  }
}

TEST_CASE("factorization budget exhaustion is an error") {
  FactorizationBudget tiny{10, 1};
  const ExactInt semi = ExactInt(1000003) * ExactInt(1000033);
  CHECK_THROWS_AS(factorize(semi, tiny), FactorizationIncomplete);
}

TEST_CASE("divisors against naive enumeration") {
  for (long long n = 1; n <= 500; ++n) {
    std::vector<ExactInt> naive;
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) naive.emplace_back(d);
    CHECK(divisors(factorize(n)) == naive);
  }
}

TEST_CASE("mod4 class") {
  CHECK(mod4_class(5) == Mod4Class::PlusOne);
  CHECK(mod4_class(2) == Mod4Class::Two);
  CHECK(mod4_class(479) == Mod4Class::MinusOne);
  CHECK_THROWS_AS(mod4_class(9), UsageError);
}
