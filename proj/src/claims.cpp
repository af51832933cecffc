#include "fltlab/claims.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "fltlab/arith.hpp"
#include "fltlab/diophantine.hpp"
#include "fltlab/poly.hpp"
#include "fltlab/powersum.hpp"
#include "fltlab/report.hpp"

namespace fltlab {

namespace {

ParamSpec p_max(std::int64_t hi, std::string help = "inclusive bound on each enumerated variable") {
  return {"max", 1, hi, std::move(help)};
}
ParamSpec p_nmin(std::int64_t lo) { return {"n_min", lo, 30, "smallest exponent"}; }
ParamSpec p_nmax(std::int64_t lo) { return {"n_max", lo, 30, "largest exponent"}; }
ParamSpec p_h(std::int64_t lo) { return {"h", lo, 5, "terms on the left"}; }
ParamSpec p_l() { return {"l", 1, 5, "terms on the right"}; }
ParamSpec p_k() { return {"k", 1, 40, "power"}; }

std::vector<ClaimInfo> build_registry() {
  using C = ClaimId;
  std::vector<ClaimInfo> r;
  const std::vector<ParamSpec> t1_schema{{"a_max", 1, 100000, "largest a"},
                                         {"b_max", 1, 1000000, "largest |b|"},
                                         p_nmin(1),
                                         p_nmax(1)};
  r.push_back({C::T1_FORWARD,
               "A cubic x^3 + bx + a^n (a > 0, b != 0, gcd(a,b) = 1) that splits over Q yields pairwise coprime "
               "p, q, r with a = pqr and p^n + q^n = r^n.",
               "If Q is a splitting field for p(x), then there exist p, q, r in Z^+ such that a = pqr and (p, q, r) "
               "is a solution of the equation X^n+Y^n=Z^n where X, Y, Z are pairwise co-prime.",
               t1_schema,
               {{"a_max", 30}, {"b_max", 200}, {"n_min", 1}, {"n_max", 3}},
               {{"a_max", 60}, {"b_max", 1000}, {"n_min", 1}, {"n_max", 4}}});
  r.push_back({C::T1_CONVERSE,
               "Every primitive solution of X^n + Y^n = Z^n gives a split cubic x^3 + bx + a^n with a = pqr, b != 0, "
               "gcd(a,b) = 1.",
               "then there exists a polynomial p(x)=x^3+bx+a^n, where a = pqr, b != 0, gcd(a,b)=1 such that Q is its "
               "splitting field.",
               {p_nmin(1), p_nmax(1), p_max(100000)},
               {{"n_min", 1}, {"n_max", 3}, {"max", 100}},
               {{"n_min", 1}, {"n_max", 4}, {"max", 400}}});
  r.push_back({C::COR1_CUBIC,
               "For n >= 3 no admissible cubic x^3 + bx + a^n splits into three linear factors.",
               "is either irreducible or a product of two irreducible polynomials.",
               {t1_schema[0], t1_schema[1], p_nmin(3), p_nmax(3)},
               {{"a_max", 10}, {"b_max", 50}, {"n_min", 3}, {"n_max", 5}},
               {{"a_max", 30}, {"b_max", 200}, {"n_min", 3}, {"n_max", 5}}});
  r.push_back({C::EULER_EKL,
               "sum of h k-th powers = sum of l k-th powers has no positive solution when k > h + l.",
               "has no solution in positive integers when k>h+l",
               {p_h(1), p_l(), p_k(), p_max(100000)},
               {{"h", 2}, {"l", 1}, {"k", 4}, {"max", 60}},
               {{"h", 3}, {"l", 1}, {"k", 5}, {"max", 200}}});
  r.push_back({C::WEAK_CONJ,
               "As EULER_EKL, restricted to pairwise coprime terms.",
               "are co-prime in pairs, has no solution in positive integers when k>h+l",
               {p_h(1), p_l(), p_k(), p_max(100000)},
               {{"h", 2}, {"l", 2}, {"k", 5}, {"max", 40}},
               {{"h", 3}, {"l", 2}, {"k", 6}, {"max", 60}}});
  r.push_back({C::ALT_CONJ,
               "x_1^k + ... + x_h^k = y^k with pairwise coprime terms has no positive solution when k > h >= 2.",
               "where x_1, x_2,..., x_h, y are relatively prime in pairs, has no solution in positive integers when "
               "k > n >= 2",
               {p_h(2), p_k(), p_max(100000)},
               {{"h", 3}, {"k", 4}, {"max", 60}},
               {{"h", 4}, {"k", 5}, {"max", 150}}});
  r.push_back({C::THM2_EQUIV,
               "Every pairwise coprime balanced instance gives a split polynomial from which the instance is read "
               "back exactly.",
               "If the equation has a solution then we can construct a polynomial p(x) that the field Q is its "
               "splitting field.",
               {p_h(1), p_l(), p_k(), p_max(100000)},
               {{"h", 2}, {"l", 1}, {"k", 2}, {"max", 50}},
               {{"h", 2}, {"l", 1}, {"k", 2}, {"max", 300}}});
  r.push_back({C::LEM0_PARITY,
               "A solution of X^n + Y^n = X'^n - Y'^n, XY = X'Y', gcd(X,Y) = gcd(X',Y') = 1 has XY even.",
               "If the system is solvable, then XY = 0 mod 2.",
               {p_nmin(1), p_nmax(1), p_max(10000)},
               {{"n_min", 1}, {"n_max", 3}, {"max", 30}},
               {{"n_min", 1}, {"n_max", 4}, {"max", 60}}});
  r.push_back({C::LEM1_PAIR_SYSTEM,
               "X^n + Y^n = X'^n - Y'^n, XY = X'Y', gcd(X,Y) = gcd(X',Y') = 1 has no solution for n >= 2.",
               "where gcd(X, Y)=gcd(X', Y')=1 and XY != 0, has no solutions when n >= 2.",
               {p_nmin(2), p_nmax(2), p_max(10000)},
               {{"n_min", 2}, {"n_max", 3}, {"max", 30}},
               {{"n_min", 2}, {"n_max", 3}, {"max", 50}}});
  r.push_back({C::THM3_XYZU,
               "x^n + y^n + z^n = u^n with xy = zu, gcd(x,y) = gcd(z,u) = 1 has no positive solution for n >= 2.",
               "The equation x^n + y^n + z^n = u^n with xy = zu, where gcd(x, y)=gcd(z, u)=1 has no solution over "
               "Z^+ when n >= 2.",
               {p_nmin(2), p_nmax(2), p_max(5000)},
               {{"n_min", 2}, {"n_max", 3}, {"max", 30}},
               {{"n_min", 2}, {"n_max", 3}, {"max", 50}}});
  r.push_back({C::COR_QUADRATIC,
               "x^2 + (a^n + b^n)x - (ab)^n with gcd(a,b) = 1 is irreducible, except possibly for n = 1 with ab "
               "even.",
               "if ab = 1 mod 2 then the polynomials p(x) = x^2 + (a^n + b^n) x - c^n are irreducible over Q for "
               "n >= 1; If ab = 0 mod 2 then the polynomials p(x) = x^2 + (a^n + b^n) x - c^n are irreducible over "
               "Q for n >= 2.",
               {{"a_max", 2, 10000, "largest b (pairs a < b)"},
                {"n_max", 1, 30, "largest exponent"},
                {"include_excluded", 0, 1, "report the n = 1, ab even cases as counterexamples"}},
               {{"a_max", 20}, {"n_max", 6}, {"include_excluded", 1}},
               {{"a_max", 40}, {"n_max", 8}, {"include_excluded", 1}}});
  r.push_back({C::THM4_SYS3,
               "x1^3 + x2^3 + x3^3 + 3x4^n = 0, (x1 + x2 + x3)x4 = 0 with x1, x2, x3 nonzero and pairwise coprime "
               "has no integer solution for n > 2.",
               "where x_1, x_2, x_3 are co-prime, x_1x_2x_3 != 0, has no solutions in Z when n > 2.",
               {p_nmin(3), p_nmax(3), p_max(1000)},
               {{"n_min", 3}, {"n_max", 4}, {"max", 15}},
               {{"n_min", 3}, {"n_max", 4}, {"max", 30}}});
  r.push_back({C::FLT_PRODUCT_FORM,
               "x1 x2 (x1 + x2) = x3^n with gcd(x1,x2) = 1 has no positive solution for n > 2.",
               "the equation x_1x_2(x_1+ x_2) = x_3^n, where x_1, x_2 are relatively prime, has no solution over "
               "Z^+ when n > 2.",
               {p_nmin(3), p_nmax(3), p_max(100000)},
               {{"n_min", 3}, {"n_max", 3}, {"max", 100}},
               {{"n_min", 3}, {"n_max", 3}, {"max", 200}}});
  r.push_back({C::PRODUCT_QUARTIC,
               "x1 x2 (x1 + x2) = x3^4 with gcd(x1,x2) = 1 has no positive solution.",
               "The equations x_1x_2(x_1 + x_2) = x_3^4 and x_1x_2(x_1^2 + x_2^2) = x_3^2, where x_1, x_2 are "
               "co-prime, have no solutions over Z and Z[i].",
               {p_max(100000)},
               {{"max", 100}},
               {{"max", 200}}});
  r.push_back({C::PRODUCT_SQUARES_Z,
               "x1 x2 (x1^2 + x2^2) = x3^2 with gcd(x1,x2) = 1 has no solution with x1 x2 x3 != 0.",
               "x_1x_2(x_1^2 + x_2^2) = x_3^2, where x_1, x_2 are co-prime, have no solutions over Z",
               {p_max(100000)},
               {{"max", 150}},
               {{"max", 300}}});
  r.push_back({C::PRODUCT_SQUARES_ZI,
               "x1 x2 (x1^2 + x2^2) is never a nonzero square for Gaussian-coprime x1, x2.",
               "have no solutions over Z and Z[i].",
               {{"norm_max", 1, 10000, "largest norm of x1 and x2"}},
               {{"norm_max", 20}},
               {{"norm_max", 50}}});
  r.push_back({C::EULER_PRODUCT,
               "x1 x2 x3 (x1 + x2 + x3) = x4^n with x1, x2, x3, x1 + x2 + x3 pairwise coprime has no positive "
               "solution for n > 3.",
               "the equation x_1x_2x_3(x_1 + x_2 + x_3) = x_4^n, where x_1, x_2, x_3, x_1+ x_2 + x_3 are relatively "
               "prime in pairs, has no solution over Z^+ when n > 3.",
               {p_nmin(4), p_nmax(4), p_max(2000)},
               {{"n_min", 4}, {"n_max", 4}, {"max", 30}},
               {{"n_min", 4}, {"n_max", 4}, {"max", 60}}});
  r.push_back({C::EULER_1769,
               "x_1^k + ... + x_h^k = y^k has no positive solution when k > h >= 2 (no coprimality assumed).",
               "has no solution in positive integers when k > n >= 2",
               {p_h(2), p_k(), p_max(100000)},
               {{"h", 2}, {"k", 3}, {"max", 100}},
               {{"h", 4}, {"k", 5}, {"max", 120}}});
  r.push_back({C::CONCL_XYZU_PAIRWISE,
               "x^n + y^n + z^n = u^n with x, y, z, u pairwise coprime has no positive solution for n >= 3.",
               "where x,y,z,u are pairwise relatively prime, has no solution over Z^+ when n >= 3",
               {p_nmin(3), p_nmax(3), p_max(5000)},
               {{"n_min", 3}, {"n_max", 4}, {"max", 30}},
               {{"n_min", 3}, {"n_max", 5}, {"max", 80}}});
  return r;
}

bool has_param(const Params& p, const std::string& name) {
  for (const auto& kv : p)
    if (kv.first == name) return true;
  return false;
}

void validate_params(ClaimId id, const Params& p) {
  const ClaimInfo& info = claim_info(id);
  if (p.size() != info.schema.size()) throw UsageError("parameter list does not match the schema\n" + schema_help(id));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ParamSpec& s = info.schema[i];
    if (p[i].first != s.name) throw UsageError("parameter " + s.name + " missing\n" + schema_help(id));
    if (p[i].second < s.min || p[i].second > s.max) {
      throw UsageError("parameter " + s.name + "=" + std::to_string(p[i].second) + " outside [" +
                       std::to_string(s.min) + ", " + std::to_string(s.max) + "]\n" + schema_help(id));
    }
  }
  if (has_param(p, "n_min") && param(p, "n_min") > param(p, "n_max")) {
    throw UsageError("n_min must not exceed n_max\n" + schema_help(id));
  }
  if (has_param(p, "l")) {
    if (param(p, "h") < param(p, "l")) throw UsageError("h must be >= l\n" + schema_help(id));
    if (param(p, "h") + param(p, "l") > 6) throw UsageError("h + l must be <= 6\n" + schema_help(id));
  }
}

ClaimChunk from_search(SearchResult&& r) {
  ClaimChunk c;
  c.counterexamples = std::move(r.records);
  c.candidates = r.candidates;
  c.filtered = r.filtered;
  return c;
}

// Number of b in [1, bound] coprime to a, by inclusion-exclusion over the
// prime divisors of a.
std::uint64_t coprime_count(std::int64_t a, std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (a > 1) {
    for (const auto& pp : factorize(ExactInt(a)).factors) primes.push_back(*pp.prime.to_int64());
  }
  std::int64_t total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::int64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        ++bits;
      }
    }
    total += (bits % 2 == 0 ? 1 : -1) * (bound / d);
  }
  return static_cast<std::uint64_t>(total);
}

class FnRunner final : public ClaimRunner {
 public:
  using Fn = std::function<ClaimChunk(const OuterRange&)>;
  FnRunner(OuterRange outer, ExactInt expected, Fn fn, std::optional<std::string> inapplicable = std::nullopt)
      : outer_(outer), expected_(std::move(expected)), fn_(std::move(fn)), inapplicable_(std::move(inapplicable)) {}

  OuterRange outer() const override { return outer_; }
  ClaimChunk run(const OuterRange& range) const override { return fn_(range.intersect(outer_)); }
  ExactInt expected_candidates() const override { return expected_; }
  std::optional<std::string> inapplicable() const override { return inapplicable_; }

 private:
  OuterRange outer_;
  ExactInt expected_;
  Fn fn_;
  std::optional<std::string> inapplicable_;
};

std::unique_ptr<ClaimRunner> inapplicable_runner(std::string why) {
  return std::make_unique<FnRunner>(OuterRange{1, 0}, ExactInt(0), [](const OuterRange&) { return ClaimChunk{}; },
                                    std::move(why));
}

// Exponent loop over [n_min, n_max] around a single-exponent search.
std::unique_ptr<ClaimRunner> per_exponent(const Params& p, OuterRange outer, const ExactInt& space_per_n,
                                          std::function<SearchResult(unsigned, const OuterRange&)> search) {
  const auto n_min = static_cast<unsigned>(param(p, "n_min"));
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  return std::make_unique<FnRunner>(outer, space_per_n * ExactInt(n_max - n_min + 1),
                                    [=](const OuterRange& r) {
                                      ClaimChunk acc;
                                      for (unsigned n = n_min; n <= n_max; ++n) acc.merge(from_search(search(n, r)));
                                      return acc;
                                    });
}

std::unique_ptr<ClaimRunner> t1_forward(const Params& p) {
  const std::int64_t a_max = param(p, "a_max");
  const std::int64_t b_max = param(p, "b_max");
  const auto n_min = static_cast<unsigned>(param(p, "n_min"));
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  ExactInt expected(0);
  for (std::int64_t a = 1; a <= a_max; ++a) expected += ExactInt(2 * coprime_count(a, b_max));
  expected = expected * ExactInt(n_max - n_min + 1);
  return std::make_unique<FnRunner>(OuterRange{1, a_max}, expected, [=](const OuterRange& r) {
    ClaimChunk c;
    for (std::int64_t a = r.lo; a <= r.hi; ++a) {
      const ExactInt A(a);
      for (std::int64_t b = -b_max; b <= b_max; ++b) {
        if (b == 0 || std::gcd(a, b) != 1) continue;
        const ExactInt B(b);
        for (unsigned n = n_min; n <= n_max; ++n) {
          ++c.candidates;
          const MonicIntPoly poly = cubic_from_params(B, A, n);
          const SplitReport rep = analyze(poly);
          if (rep.split_type != SplitType::FullySplit) continue;
          ++c.extra["split_cubics"];
          const FermatExtraction ex = extract_fermat_witness(poly, n);
          if (ex.witness && ex.witness->p * ex.witness->q * ex.witness->r == A) {
            ++c.extra["witnesses"];
            if (!ex.distinct_roots) ++c.extra["repeated_root_witnesses"];
            continue;
          }
          const auto& rt = rep.integer_roots;
          c.counterexamples.push_back(make_record(
              Equation::CubicSplit,
              {{"a", A}, {"b", B}, {"n", ExactInt(n)}, {"r1", rt[0]}, {"r2", rt[1]}, {"r3", rt[2]}},
              {"gcd(a,b)=1", "no_witness:" + to_string(ex.failure)}));
        }
      }
    }
    return c;
  });
}

std::unique_ptr<ClaimRunner> t1_converse(const Params& p) {
  const std::int64_t max = param(p, "max");
  const auto n_min = static_cast<unsigned>(param(p, "n_min"));
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  return std::make_unique<FnRunner>(
      OuterRange{1, max}, fermat_space_size(max) * ExactInt(n_max - n_min + 1), [=](const OuterRange& r) {
        ClaimChunk c;
        for (unsigned n = n_min; n <= n_max; ++n) {
          SearchResult s = search_fermat_triples({ExactInt(max), n}, true, r);
          c.candidates += s.candidates;
          for (auto& rec : s.records) {
            ++c.extra["triples"];
            const FermatWitness w{rec.var("x"), rec.var("y"), rec.var("z"), n};
            const CubicConstruction cc = build_cubic(w);
            const bool split = analyze(cc.poly).split_type == SplitType::FullySplit;
            const FermatExtraction ex = extract_fermat_witness(cc.poly, n);
            const bool ok = split && cc.gcd_ab_is_one && !cc.b.is_zero() && cc.a == w.p * w.q * w.r &&
                            ex.witness && *ex.witness == w;
            if (ok) {
              ++c.extra["roundtrips"];
            } else {
              rec.constraint_profile.push_back("no_admissible_cubic");
              c.counterexamples.push_back(std::move(rec));
            }
          }
        }
        return c;
      });
}

std::unique_ptr<ClaimRunner> cor1_cubic(const Params& p) {
  const std::int64_t a_max = param(p, "a_max");
  const std::int64_t b_max = param(p, "b_max");
  const auto n_min = static_cast<unsigned>(param(p, "n_min"));
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  ExactInt expected(0);
  for (std::int64_t a = 1; a <= a_max; ++a) expected += ExactInt(2 * coprime_count(a, b_max));
  expected = expected * ExactInt(n_max - n_min + 1);
  return std::make_unique<FnRunner>(OuterRange{1, a_max}, expected, [=](const OuterRange& r) {
    ClaimChunk c;
    for (std::int64_t a = r.lo; a <= r.hi; ++a) {
      const ExactInt A(a);
      for (std::int64_t b = -b_max; b <= b_max; ++b) {
        if (b == 0 || std::gcd(a, b) != 1) continue;
        const ExactInt B(b);
        for (unsigned n = n_min; n <= n_max; ++n) {
          ++c.candidates;
          const CubicClass cls = classify_cubic(B, A, n);
          if (cls == CubicClass::Irreducible) {
            ++c.extra["irreducible"];
          } else if (cls == CubicClass::OneLinearTimesIrreducibleQuadratic) {
            ++c.extra["linear_times_quadratic"];
          } else {
            const auto rt = analyze(cubic_from_params(B, A, n)).integer_roots;
            c.counterexamples.push_back(make_record(
                Equation::CubicSplit,
                {{"a", A}, {"b", B}, {"n", ExactInt(n)}, {"r1", rt[0]}, {"r2", rt[1]}, {"r3", rt[2]}},
                {"gcd(a,b)=1"}));
          }
        }
      }
    }
    return c;
  });
}

// Shared body of the equal-sums claims. roundtrip enables the polynomial check.
std::unique_ptr<ClaimRunner> equal_sums_claim(EqualSumsQuery q, bool roundtrip) {
  auto search = std::make_shared<const EqualSumsSearch>(q);
  return std::make_unique<FnRunner>(equal_sums_outer_range(q), equal_sums_space_size(q),
                                    [search, roundtrip](const OuterRange& r) {
                                      EqualSumsResult res = search->run(r);
                                      const unsigned k = search->query().k;
                                      ClaimChunk c;
                                      c.candidates = res.search.candidates;
                                      c.filtered = res.search.filtered;
                                      c.extra["trivial_excluded"] += res.trivial_excluded;
                                      if (!roundtrip) {
                                        c.counterexamples = std::move(res.search.records);
                                        return c;
                                      }
                                      for (auto& rec : res.search.records) {
                                        std::vector<ExactInt> xs, ys;
                                        for (std::size_t i = 1; i < rec.vars.size(); ++i) {
                                          (rec.vars[i].first[0] == 'x' ? xs : ys).push_back(rec.vars[i].second);
                                        }
                                        const PowerSumInstance inst = PowerSumInstance::make(k, xs, ys);
                                        bool ok = false;
                                        try {
                                          const PowerSumPoly pp = build_poly_from_powersum(inst);
                                          const PowerSumExtraction ex = extract_powersum_identity(pp.poly, k);
                                          ok = pp.gcd_a1_a0_is_one && ex.instance && *ex.instance == inst;
                                        } catch (const UsageError&) {
                                          ok = false;
                                        }
                                        if (ok) {
                                          ++c.extra["roundtrips"];
                                        } else {
                                          rec.constraint_profile.push_back("roundtrip_failed");
                                          c.counterexamples.push_back(std::move(rec));
                                        }
                                      }
                                      return c;
                                    });
}

EqualSumsQuery query_from(const Params& p, unsigned l, CoprimeMode mode) {
  EqualSumsQuery q;
  q.h = static_cast<unsigned>(param(p, "h"));
  q.l = has_param(p, "l") ? static_cast<unsigned>(param(p, "l")) : l;
  q.k = static_cast<unsigned>(param(p, "k"));
  q.max = param(p, "max");
  q.mode = mode;
  return q;
}

std::unique_ptr<ClaimRunner> parity_claim(const Params& p) {
  const std::int64_t max = param(p, "max");
  const auto n_min = static_cast<unsigned>(param(p, "n_min"));
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  return std::make_unique<FnRunner>(
      OuterRange{1, max}, pair_system_space_size(max) * ExactInt(n_max - n_min + 1), [=](const OuterRange& r) {
        ClaimChunk c;
        for (unsigned n = n_min; n <= n_max; ++n) {
          SearchResult s = search_pair_system({ExactInt(max), n}, r);
          c.candidates += s.candidates;
          for (auto& rec : s.records) {
            ++c.extra["solutions"];
            const PairSystem sys{rec.var("X"), rec.var("Y"), rec.var("Xp"), rec.var("Yp")};
            const ParityReport rep = parity_report(sys, n);
            if (rep.xy_mod2.is_zero()) continue;
            rec.constraint_profile.push_back("XY_odd");
            c.counterexamples.push_back(std::move(rec));
          }
        }
        return c;
      });
}

std::unique_ptr<ClaimRunner> quadratic_claim(const Params& p) {
  const std::int64_t a_max = param(p, "a_max");
  const auto n_max = static_cast<unsigned>(param(p, "n_max"));
  const bool include_excluded = param(p, "include_excluded") != 0;
  return std::make_unique<FnRunner>(OuterRange{1, a_max}, quadratic_space_size(a_max, n_max),
                                    [=](const OuterRange& r) {
                                      SearchResult s = search_quadratic_irreducibility(a_max, n_max, r);
                                      ClaimChunk c;
                                      c.candidates = s.candidates;
                                      c.filtered = s.filtered;
                                      for (auto& rec : s.records) {
                                        ++c.extra["reducible"];
                                        const bool excluded = rec.var("n") == ExactInt(1) &&
                                                              (rec.var("a") * rec.var("b")).is_even();
                                        if (excluded) ++c.extra["excluded_n1_ab_even"];
                                        if (!excluded || include_excluded) c.counterexamples.push_back(std::move(rec));
                                      }
                                      return c;
                                    });
}

std::unique_ptr<ClaimRunner> build_runner(ClaimId id, const Params& p) {
  switch (id) {
    case ClaimId::T1_FORWARD:
      return t1_forward(p);
    case ClaimId::T1_CONVERSE:
      return t1_converse(p);
    case ClaimId::COR1_CUBIC:
      return cor1_cubic(p);
    case ClaimId::EULER_EKL:
    case ClaimId::WEAK_CONJ: {
      const EqualSumsQuery q =
          query_from(p, 1, id == ClaimId::WEAK_CONJ ? CoprimeMode::Pairwise : CoprimeMode::None);
      if (q.k <= q.h + q.l) return inapplicable_runner("hypothesis k > h + l not met");
      return equal_sums_claim(q, false);
    }
    case ClaimId::ALT_CONJ:
    case ClaimId::EULER_1769: {
      const EqualSumsQuery q =
          query_from(p, 1, id == ClaimId::ALT_CONJ ? CoprimeMode::Pairwise : CoprimeMode::None);
      if (q.k <= q.h) return inapplicable_runner("hypothesis k > h not met");
      return equal_sums_claim(q, false);
    }
    case ClaimId::THM2_EQUIV:
      return equal_sums_claim(query_from(p, 1, CoprimeMode::Pairwise), true);
    case ClaimId::LEM0_PARITY:
      return parity_claim(p);
    case ClaimId::LEM1_PAIR_SYSTEM: {
      const std::int64_t max = param(p, "max");
      return per_exponent(p, {1, max}, pair_system_space_size(max), [max](unsigned n, const OuterRange& r) {
        return search_pair_system({ExactInt(max), n}, r);
      });
    }
    case ClaimId::THM3_XYZU:
    case ClaimId::CONCL_XYZU_PAIRWISE: {
      const std::int64_t max = param(p, "max");
      const QuadMode mode = id == ClaimId::THM3_XYZU ? QuadMode::PairsXY_ZU : QuadMode::FullyPairwise;
      const bool xy = id == ClaimId::THM3_XYZU;
      return per_exponent(p, {1, max}, quadruple_space_size(max, mode, xy),
                          [=](unsigned n, const OuterRange& r) {
                            return search_quadruple({ExactInt(max), n}, mode, xy, r);
                          });
    }
    case ClaimId::COR_QUADRATIC:
      return quadratic_claim(p);
    case ClaimId::THM4_SYS3: {
      const std::int64_t max = param(p, "max");
      return per_exponent(p, sys3_outer_range(max), sys3_space_size(max), [max](unsigned n, const OuterRange& r) {
        return search_sys3({ExactInt(max), n}, r);
      });
    }
    case ClaimId::FLT_PRODUCT_FORM: {
      const std::int64_t max = param(p, "max");
      return per_exponent(p, {1, max}, product_form_space_size(max), [max](unsigned n, const OuterRange& r) {
        return search_product_form(n, max, CoprimeMode::Pairwise, r);
      });
    }
    case ClaimId::PRODUCT_QUARTIC: {
      const std::int64_t max = param(p, "max");
      return std::make_unique<FnRunner>(OuterRange{1, max}, product_form_space_size(max), [max](const OuterRange& r) {
        return from_search(search_product_form(4, max, CoprimeMode::Pairwise, r));
      });
    }
    case ClaimId::PRODUCT_SQUARES_Z:
    case ClaimId::PRODUCT_SQUARES_ZI: {
      const std::int64_t max = param(p, id == ClaimId::PRODUCT_SQUARES_Z ? "max" : "norm_max");
      const Ring ring = id == ClaimId::PRODUCT_SQUARES_Z ? Ring::Z : Ring::GaussianZ;
      return std::make_unique<FnRunner>(product_squares_outer_range(max, ring), product_squares_space_size(max, ring),
                                        [=](const OuterRange& r) {
                                          return from_search(search_product_squares(max, ring, r));
                                        });
    }
    case ClaimId::EULER_PRODUCT: {
      const std::int64_t max = param(p, "max");
      return per_exponent(p, {1, max}, euler_product_space_size(max), [max](unsigned n, const OuterRange& r) {
        return search_euler_product(n, max, r);
      });
    }
  }
  throw UsageError("unknown claim");
}

ClaimChunk run_parallel(const ClaimRunner& runner, const OuterRange& range, std::size_t jobs) {
  if (jobs <= 1) {
    ClaimChunk c = runner.run(range);
    c.finalize();
    return c;
  }
  const auto pieces = partition(range, jobs);
  std::vector<ClaimChunk> parts(pieces.size());
  std::vector<std::exception_ptr> errors(pieces.size());
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        parts[i] = runner.run(pieces[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  ClaimChunk acc;
  for (auto& p : parts) acc.merge(std::move(p));
  acc.finalize();
  return acc;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write checkpoint " + tmp);
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read checkpoint " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_string(ClaimId id) {
  static const char* names[] = {"T1_FORWARD",      "T1_CONVERSE",        "COR1_CUBIC",        "EULER_EKL",
                                "WEAK_CONJ",       "ALT_CONJ",           "THM2_EQUIV",        "LEM0_PARITY",
                                "LEM1_PAIR_SYSTEM", "THM3_XYZU",         "COR_QUADRATIC",     "THM4_SYS3",
                                "FLT_PRODUCT_FORM", "PRODUCT_QUARTIC",   "PRODUCT_SQUARES_Z", "PRODUCT_SQUARES_ZI",
                                "EULER_PRODUCT",   "EULER_1769",         "CONCL_XYZU_PAIRWISE"};
  return names[static_cast<int>(id)];
}

std::optional<ClaimId> parse_claim_id(const std::string& text) {
  for (const auto& c : list_claims())
    if (to_string(c.id) == text) return c.id;
  return std::nullopt;
}

std::string to_string(Profile p) { return p == Profile::Smoke ? "smoke" : "desk"; }

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::HoldsUpToBound:
      return "HoldsUpToBound";
    case ClaimStatus::CounterexampleFound:
      return "CounterexampleFound";
    case ClaimStatus::Inapplicable:
      return "Inapplicable";
    case ClaimStatus::Error:
      return "Error";
  }
  return "?";
}

std::int64_t param(const Params& p, const std::string& name) {
  for (const auto& [k, v] : p)
    if (k == name) return v;
  throw UsageError("missing parameter " + name);
}

const std::vector<ClaimInfo>& list_claims() {
  static const std::vector<ClaimInfo> registry = build_registry();
  return registry;
}

const ClaimInfo& claim_info(ClaimId id) { return list_claims().at(static_cast<std::size_t>(id)); }

std::string schema_help(ClaimId id) {
  const ClaimInfo& info = claim_info(id);
  std::string s = "parameters for " + to_string(id) + ":";
  for (std::size_t i = 0; i < info.schema.size(); ++i) {
    const auto& p = info.schema[i];
    s += "\n  " + p.name + " in [" + std::to_string(p.min) + ", " + std::to_string(p.max) + "], desk default " +
         std::to_string(info.desk[i].second) + ": " + p.help;
  }
  return s;
}

Params resolve_params(ClaimId id, const std::vector<std::pair<std::string, std::string>>& overrides, Profile base) {
  const ClaimInfo& info = claim_info(id);
  Params p = base == Profile::Smoke ? info.smoke : info.desk;
  for (const auto& [name, text] : overrides) {
    auto it = std::find_if(p.begin(), p.end(), [&](const auto& kv) { return kv.first == name; });
    if (it == p.end()) throw UsageError("unknown parameter '" + name + "'\n" + schema_help(id));
    std::int64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw UsageError("parameter " + name + " needs an integer, got '" + text + "'\n" + schema_help(id));
    }
    it->second = v;
  }
  validate_params(id, p);
  return p;
}

void ClaimChunk::merge(ClaimChunk&& other) {
  counterexamples.insert(counterexamples.end(), std::make_move_iterator(other.counterexamples.begin()),
                         std::make_move_iterator(other.counterexamples.end()));
  candidates += other.candidates;
  filtered += other.filtered;
  for (const auto& [k, v] : other.extra) extra[k] += v;
}

void ClaimChunk::finalize() {
  sort_records(counterexamples);
  counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end()), counterexamples.end());
}

std::unique_ptr<ClaimRunner> make_runner(ClaimId id, const Params& params) {
  validate_params(id, params);
  return build_runner(id, params);
}

std::string checkpoint_to_json(const CheckpointFile& cp) {
  Json j;
  j["format_version"] = cp.format_version;
  j["claim"] = to_string(cp.claim);
  j["params"] = params_to_json(cp.params);
  j["completed_prefix"] = std::to_string(cp.completed_prefix);
  Json sols = Json::array();
  for (const auto& r : cp.partial.counterexamples) sols.push_back(record_to_json(r));
  j["partial_solutions"] = std::move(sols);
  Json stats;
  stats["candidates"] = std::to_string(cp.partial.candidates);
  stats["filtered"] = std::to_string(cp.partial.filtered);
  Json extra = Json::object();
  for (const auto& [k, v] : cp.partial.extra) extra[k] = std::to_string(v);
  stats["extra"] = std::move(extra);
  j["partial_stats"] = std::move(stats);
  j["elapsed_seconds"] = cp.elapsed_seconds;
  return j.dump(2) + "\n";
}

CheckpointFile checkpoint_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    CheckpointFile cp;
    cp.format_version = j.at("format_version").get<int>();
    if (cp.format_version != CheckpointFile::kFormatVersion) {
      throw std::runtime_error("unsupported checkpoint format_version " + std::to_string(cp.format_version));
    }
    const auto id = parse_claim_id(j.at("claim").get<std::string>());
    if (!id) throw std::runtime_error("unknown claim in checkpoint");
    cp.claim = *id;
    for (const auto& [k, v] : j.at("params").items()) cp.params.emplace_back(k, std::stoll(v.get<std::string>()));
    cp.completed_prefix = std::stoll(j.at("completed_prefix").get<std::string>());
    for (const auto& r : j.at("partial_solutions")) cp.partial.counterexamples.push_back(record_from_json(r));
    const Json& st = j.at("partial_stats");
    cp.partial.candidates = std::stoull(st.at("candidates").get<std::string>());
    cp.partial.filtered = std::stoull(st.at("filtered").get<std::string>());
    for (const auto& [k, v] : st.at("extra").items()) cp.partial.extra[k] = std::stoull(v.get<std::string>());
    cp.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return cp;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed checkpoint: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::runtime_error(std::string("malformed checkpoint: ") + e.what());
  }
}

ClaimOutcome run_claim(ClaimId id, const Params& params, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  auto runner = make_runner(id, params);
  ClaimOutcome out;
  out.claim = id;
  out.params = params;
  if (auto why = runner->inapplicable()) {
    out.status = ClaimStatus::Inapplicable;
    out.reason = *why;
    out.stats.expected_candidates = ExactInt(0);
    return out;
  }

  const OuterRange outer = runner->outer();
  ClaimChunk acc;
  std::int64_t prefix = outer.lo;
  double prior = 0;
  if (opts.checkpoint_path && std::filesystem::exists(*opts.checkpoint_path)) {
    CheckpointFile cp = checkpoint_from_json(read_file(*opts.checkpoint_path));
    if (cp.claim != id || cp.params != params) {
      throw std::runtime_error("checkpoint " + *opts.checkpoint_path + " belongs to a different claim or parameters");
    }
    acc = std::move(cp.partial);
    prefix = std::max(cp.completed_prefix, outer.lo);
    prior = cp.elapsed_seconds;
  }
  auto elapsed = [&] {
    return prior + std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const auto pieces = partition(outer, std::max<std::size_t>(opts.chunks, 1));
  std::size_t ran = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const OuterRange range = pieces[i].intersect({prefix, outer.hi});
    if (range.empty()) continue;
    if ((opts.halt_after_chunks && ran >= *opts.halt_after_chunks) || (opts.stop && opts.stop->load())) {
      throw RunInterrupted("run stopped at " + to_string(id) + " outer value " + std::to_string(prefix));
    }
    acc.merge(run_parallel(*runner, range, opts.jobs));
    acc.finalize();
    prefix = range.hi + 1;
    ++ran;
    if (opts.checkpoint_path) {
      write_atomically(*opts.checkpoint_path, checkpoint_to_json({CheckpointFile::kFormatVersion, id, params, prefix,
                                                                  acc, elapsed()}));
    }
    if (opts.progress) {
      opts.progress(to_string(id) + ": outer " + std::to_string(range.hi) + " of " + std::to_string(outer.hi) +
                    ", " + std::to_string(acc.candidates) + " candidates");
    }
  }

  out.stats.candidates_tested = acc.candidates;
  out.stats.expected_candidates = runner->expected_candidates();
  out.stats.filtered_count = acc.filtered;
  out.stats.counterexamples = acc.counterexamples.size();
  out.stats.extra = acc.extra;
  out.stats.duration_seconds = elapsed();
  for (const auto& rec : acc.counterexamples) {
    if (auto err = verify_record(rec); !err.empty()) {
      throw std::logic_error("counterexample fails re-verification: " + err);
    }
  }
  out.counterexamples = std::move(acc.counterexamples);
  if (!out.counterexamples.empty()) out.counterexample = out.counterexamples.front();

  if (ExactInt(acc.candidates) != out.stats.expected_candidates) {
    out.status = ClaimStatus::Error;
    out.reason = "enumerated " + std::to_string(acc.candidates) + " candidates, closed form gives " +
                 out.stats.expected_candidates.to_string();
  } else if (out.counterexample) {
    out.status = ClaimStatus::CounterexampleFound;
  } else {
    out.status = ClaimStatus::HoldsUpToBound;
  }
  return out;
}

std::vector<ClaimOutcome> run_suite(Profile profile, const RunOptions& opts) {
  std::vector<ClaimOutcome> outs;
  for (const auto& info : list_claims()) {
    const Params& p = profile == Profile::Smoke ? info.smoke : info.desk;
    RunOptions o = opts;
    o.checkpoint_path.reset();
    o.halt_after_chunks.reset();
    try {
      outs.push_back(run_claim(info.id, p, o));
    } catch (const std::exception& e) {
      ClaimOutcome bad;
      bad.claim = info.id;
      bad.params = p;
      bad.status = ClaimStatus::Error;
      bad.reason = e.what();
      outs.push_back(std::move(bad));
    }
  }
  return outs;
}

}  // namespace fltlab
