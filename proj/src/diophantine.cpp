#include "fltlab/diophantine.hpp"

#include <algorithm>
#include <numeric>

namespace fltlab {

namespace {

ExactInt I(std::int64_t v) { return ExactInt(static_cast<long long>(v)); }

OuterRange clip(std::int64_t lo, std::int64_t hi, const std::optional<OuterRange>& outer) {
  OuterRange r{lo, hi};
  return outer ? r.intersect(*outer) : r;
}

std::vector<ExactInt> power_table(std::int64_t max, unsigned n) {
  std::vector<ExactInt> pw(static_cast<std::size_t>(max) + 1, ExactInt(0));
  for (std::int64_t v = 1; v <= max; ++v) pw[static_cast<std::size_t>(v)] = pow(I(v), n);
  return pw;
}

bool coprime(const ExactInt& a, const ExactInt& b) { return gcd(a, b) == ExactInt(1); }

}  // namespace

ExactInt fermat_space_size(std::int64_t max) { return I(max) * I(max + 1) / ExactInt(2); }

SearchResult search_fermat_triples(const SearchBounds& b, bool primitive_only, std::optional<OuterRange> outer) {
  const std::int64_t max = b.max();
  const unsigned n = b.exponent;
  if (n == 0) throw UsageError("exponent must be >= 1");
  const auto pw = power_table(max, n);
  const ExactInt zmax = pw[static_cast<std::size_t>(max)];
  SearchResult out;
  const OuterRange r = clip(1, max, outer);
  for (std::int64_t x = r.lo; x <= r.hi; ++x) {
    for (std::int64_t y = x; y <= max; ++y) {
      ++out.candidates;
      const ExactInt s = pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)];
      if (s > zmax) continue;
      const KthRoot z = integer_kth_root(s, n);
      if (!z.exact) continue;
      std::vector<std::string> profile;
      if (is_pairwise_coprime(std::vector{I(x), I(y), z.root})) {
        profile.push_back("pairwise_coprime");
      } else if (primitive_only) {
        ++out.filtered;
        continue;
      }
      out.records.push_back(make_record(Equation::Fermat, {{"n", ExactInt(n)}, {"x", I(x)}, {"y", I(y)}, {"z", z.root}},
                                        std::move(profile)));
    }
  }
  out.finalize();
  return out;
}

ExactInt pair_system_space_size(std::int64_t max) { return fermat_space_size(max); }

void validate(const PairSystem& s) {
  for (const auto* v : {&s.X, &s.Y, &s.Xp, &s.Yp}) {
    if (v->sign() <= 0) throw UsageError("pair system values must be positive");
  }
  if (!coprime(s.X, s.Y)) throw UsageError("pair system needs gcd(X, Y) = 1");
  if (!coprime(s.Xp, s.Yp)) throw UsageError("pair system needs gcd(X', Y') = 1");
  if (s.X * s.Y != s.Xp * s.Yp) throw UsageError("pair system needs XY = X'Y'");
}

SearchResult search_pair_system(const SearchBounds& b, std::optional<OuterRange> outer) {
  const std::int64_t max = b.max();
  const unsigned n = b.exponent;
  if (n == 0) throw UsageError("exponent must be >= 1");
  const auto pw = power_table(max, n);
  SearchResult out;
  const OuterRange r = clip(1, max, outer);
  for (std::int64_t x = r.lo; x <= r.hi; ++x) {
    const Factorization fx = factorize(I(x));
    for (std::int64_t y = x; y <= max; ++y) {
      ++out.candidates;
      if (std::gcd(x, y) != 1) continue;
      const Factorization fy = factorize(I(y));
      // Coprime splittings of XY are unions of its prime-power blocks.
      std::vector<std::int64_t> blocks;
      for (const auto* f : {&fx, &fy}) {
        for (const auto& pp : f->factors) blocks.push_back(*pow(pp.prime, pp.exponent).to_int64());
      }
      const std::int64_t product = x * y;
      const ExactInt lhs = pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)];
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
        std::int64_t xp = 1;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          if (mask >> i & 1) xp *= blocks[i];
        const std::int64_t yp = product / xp;
        if (xp > max || yp > max) continue;
        if (pw[static_cast<std::size_t>(xp)] - pw[static_cast<std::size_t>(yp)] != lhs) continue;
        out.records.push_back(make_record(Equation::PairSystem,
                                          {{"n", ExactInt(n)}, {"X", I(x)}, {"Y", I(y)}, {"Xp", I(xp)}, {"Yp", I(yp)}},
                                          {"gcd(X,Y)=1", "gcd(Xp,Yp)=1"}));
      }
    }
  }
  out.finalize();
  return out;
}

ParityReport parity_report(const PairSystem& s, unsigned n) {
  validate(s);
  if (n == 0) throw UsageError("exponent must be >= 1");
  ParityReport rep;
  rep.xy_mod2 = ExactInt(static_cast<long long>((s.X * s.Y).mod_u64(2)));
  rep.lhs = pow(s.X, n) + pow(s.Y, n);
  rep.rhs = pow(s.Xp, n) - pow(s.Yp, n);
  rep.lhs_mod4 = static_cast<unsigned>(rep.lhs.mod_u64(4));
  rep.rhs_mod4 = static_cast<unsigned>(rep.rhs.mod_u64(4));
  rep.obstructed = rep.lhs_mod4 != rep.rhs_mod4;
  const ExactInt* vars[] = {&s.X, &s.Y, &s.Xp, &s.Yp};
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& pp : factorize(*vars[i]).factors) {
      switch (mod4_class(pp.prime)) {
        case Mod4Class::Two:
          rep.counts[i].two += pp.exponent;
          break;
        case Mod4Class::PlusOne:
          rep.counts[i].plus_one += pp.exponent;
          break;
        case Mod4Class::MinusOne:
          rep.counts[i].minus_one += pp.exponent;
          break;
      }
    }
  }
  return rep;
}

std::string to_string(QuadMode m) { return m == QuadMode::FullyPairwise ? "fully_pairwise" : "pairs_xy_zu"; }

ExactInt quadruple_space_size(std::int64_t max, QuadMode mode, bool require_xy_eq_zu) {
  if (mode == QuadMode::FullyPairwise && !require_xy_eq_zu) return binomial(I(max + 2), 3);
  return I(max) * fermat_space_size(max);
}

SearchResult search_quadruple(const SearchBounds& b, QuadMode mode, bool require_xy_eq_zu,
                              std::optional<OuterRange> outer) {
  const std::int64_t max = b.max();
  const unsigned n = b.exponent;
  if (n == 0) throw UsageError("exponent must be >= 1");
  const auto pw = power_table(max, n);
  const ExactInt umax = pw[static_cast<std::size_t>(max)];
  const bool symmetric = mode == QuadMode::FullyPairwise && !require_xy_eq_zu;
  SearchResult out;
  const OuterRange r = clip(1, max, outer);
  for (std::int64_t x = r.lo; x <= r.hi; ++x) {
    for (std::int64_t y = x; y <= max; ++y) {
      const std::int64_t zlo = symmetric ? y : 1;
      for (std::int64_t z = zlo; z <= max; ++z) {
        ++out.candidates;
        ExactInt u;
        if (require_xy_eq_zu) {
          if ((x * y) % z != 0) continue;
          const std::int64_t uu = x * y / z;
          if (uu > max) continue;
          u = I(uu);
          if (pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)] + pw[static_cast<std::size_t>(z)] !=
              pw[static_cast<std::size_t>(uu)])
            continue;
        } else {
          const ExactInt s =
              pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)] + pw[static_cast<std::size_t>(z)];
          if (s > umax) continue;
          const KthRoot root = integer_kth_root(s, n);
          if (!root.exact) continue;
          u = root.root;
        }
        std::vector<std::string> profile;
        if (require_xy_eq_zu) profile.push_back("xy=zu");
        bool ok;
        if (mode == QuadMode::PairsXY_ZU) {
          ok = coprime(I(x), I(y)) && coprime(I(z), u);
          profile.insert(profile.end(), {"gcd(x,y)=1", "gcd(z,u)=1"});
        } else {
          ok = is_pairwise_coprime(std::vector{I(x), I(y), I(z), u});
          profile.push_back("pairwise_coprime");
        }
        if (!ok) {
          ++out.filtered;
          continue;
        }
        out.records.push_back(make_record(Equation::Quadruple,
                                          {{"n", ExactInt(n)}, {"x", I(x)}, {"y", I(y)}, {"z", I(z)}, {"u", u}},
                                          std::move(profile)));
      }
    }
  }
  out.finalize();
  return out;
}

OuterRange sys3_outer_range(std::int64_t max) { return {-max, max}; }

ExactInt sys3_space_size(std::int64_t max) { return binomial(I(2 * max + 2), 3); }

SearchResult search_sys3(const SearchBounds& b, std::optional<OuterRange> outer) {
  const std::int64_t max = b.max();
  const unsigned n = b.exponent;
  if (n == 0) throw UsageError("exponent must be >= 1");
  // Nonzero values in ascending order; x1 <= x2 <= x3 are drawn as a multiset.
  std::vector<std::int64_t> vals;
  for (std::int64_t v = -max; v <= max; ++v)
    if (v != 0) vals.push_back(v);
  SearchResult out;
  const OuterRange r = clip(-max, max, outer);
  const ExactInt three(3);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < r.lo || vals[i] > r.hi) continue;
    for (std::size_t j = i; j < vals.size(); ++j) {
      for (std::size_t k = j; k < vals.size(); ++k) {
        ++out.candidates;
        const ExactInt x1 = I(vals[i]), x2 = I(vals[j]), x3 = I(vals[k]);
        const ExactInt cubes = pow(x1, 3) + pow(x2, 3) + pow(x3, 3);
        std::vector<ExactInt> x4s;
        if (!(x1 + x2 + x3).is_zero()) {
          // Second equation forces x4 = 0.
          if (cubes.is_zero()) x4s.push_back(ExactInt(0));
        } else {
          // Here cubes = 3 x1 x2 x3, so x4^n = x1 x2 (x1 + x2) = -x1 x2 x3.
          if (!divides(three, cubes)) continue;
          const ExactInt target = -(cubes / three);
          if (auto root = exact_signed_root(target, n)) {
            x4s.push_back(*root);
            if (n % 2 == 0 && !root->is_zero()) x4s.push_back(-*root);
          }
        }
        for (const auto& x4 : x4s) {
          if (abs(x4) > I(max)) continue;
          if (!is_pairwise_coprime(std::vector{x1, x2, x3})) {
            ++out.filtered;
            continue;
          }
          out.records.push_back(make_record(Equation::Sys3,
                                            {{"n", ExactInt(n)}, {"x1", x1}, {"x2", x2}, {"x3", x3}, {"x4", x4}},
                                            {"pairwise_coprime"}));
        }
      }
    }
  }
  out.finalize();
  return out;
}

ExactInt product_form_space_size(std::int64_t max) { return binomial(I(max), 2); }

SearchResult search_product_form(unsigned n, std::int64_t max, CoprimeMode mode, std::optional<OuterRange> outer) {
  if (n == 0) throw UsageError("exponent must be >= 1");
  SearchBounds{I(max), n}.max();
  SearchResult out;
  const OuterRange r = clip(1, max, outer);
  for (std::int64_t a = r.lo; a <= r.hi; ++a) {
    for (std::int64_t b = a + 1; b <= max; ++b) {
      ++out.candidates;
      const ExactInt p = I(a) * I(b) * I(a + b);
      const KthRoot root = integer_kth_root(p, n);
      if (!root.exact) continue;
      std::vector<std::string> profile;
      if (std::gcd(a, b) == 1) {
        profile.push_back("gcd(x1,x2)=1");
      } else if (mode == CoprimeMode::Pairwise) {
        ++out.filtered;
        continue;
      }
      out.records.push_back(make_record(Equation::ProductForm,
                                        {{"n", ExactInt(n)}, {"x1", I(a)}, {"x2", I(b)}, {"x3", root.root}},
                                        std::move(profile)));
    }
  }
  out.finalize();
  return out;
}

std::string to_string(Ring r) { return r == Ring::GaussianZ ? "gaussian" : "z"; }

std::vector<GaussianInt> gaussian_ball(std::int64_t max) {
  std::vector<GaussianInt> pts;
  for (std::int64_t a = -max; a <= max; ++a) {
    if (a * a > max) continue;
    for (std::int64_t b = -max; b <= max; ++b) {
      const std::int64_t nrm = a * a + b * b;
      if (nrm == 0 || nrm > max) continue;
      pts.push_back({I(a), I(b)});
    }
  }
  return pts;  // generated in (re, im) order
}

std::pair<GaussianInt, GaussianInt> canonical_gaussian_pair(const GaussianInt& x1, const GaussianInt& x2) {
  const GaussianInt units[] = {{ExactInt(1), ExactInt(0)},
                               {ExactInt(0), ExactInt(1)},
                               {ExactInt(-1), ExactInt(0)},
                               {ExactInt(0), ExactInt(-1)}};
  auto key_less = [](const std::pair<GaussianInt, GaussianInt>& a, const std::pair<GaussianInt, GaussianInt>& b) {
    if (a.first != b.first) return a.first < b.first;
    return b.second != a.second && a.second < b.second;
  };
  std::optional<std::pair<GaussianInt, GaussianInt>> best;
  for (const auto& u : units) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        const GaussianInt a = u * x1 * GaussianInt{ExactInt(s1)};
        const GaussianInt b = u * x2 * GaussianInt{ExactInt(s2)};
        for (const auto& cand : {std::pair{a, b}, std::pair{b, a}}) {
          if (!best || key_less(cand, *best)) best = cand;
        }
      }
    }
  }
  return *best;
}

OuterRange product_squares_outer_range(std::int64_t max, Ring ring) {
  if (ring == Ring::Z) return {1, max};
  return {0, static_cast<std::int64_t>(gaussian_ball(max).size()) - 1};
}

ExactInt product_squares_space_size(std::int64_t max, Ring ring) {
  if (ring == Ring::Z) return binomial(I(max), 2);
  // Lattice points with 0 < a^2 + b^2 <= max, counted column by column.
  ExactInt g(0);
  for (std::int64_t a = 0; a * a <= max; ++a) {
    const ExactInt col = ExactInt(2) * integer_kth_root(I(max - a * a), 2).root + ExactInt(1);
    g += a == 0 ? col : ExactInt(2) * col;
  }
  g -= ExactInt(1);
  return g * g;
}

SearchResult search_product_squares(std::int64_t max, Ring ring, std::optional<OuterRange> outer) {
  SearchBounds{I(max), 2}.max();
  SearchResult out;
  if (ring == Ring::Z) {
    const OuterRange r = clip(1, max, outer);
    for (std::int64_t a = r.lo; a <= r.hi; ++a) {
      for (std::int64_t b = a + 1; b <= max; ++b) {
        ++out.candidates;
        const ExactInt p = I(a) * I(b) * (I(a) * I(a) + I(b) * I(b));
        const KthRoot root = integer_kth_root(p, 2);
        if (!root.exact) continue;
        if (std::gcd(a, b) != 1) {
          ++out.filtered;
          continue;
        }
        out.records.push_back(make_record(Equation::ProductSquaresZ, {{"x1", I(a)}, {"x2", I(b)}, {"x3", root.root}},
                                          {"gcd(x1,x2)=1"}));
      }
    }
    out.finalize();
    return out;
  }

  const auto ball = gaussian_ball(max);
  const OuterRange r = clip(0, static_cast<std::int64_t>(ball.size()) - 1, outer);
  for (std::int64_t i = r.lo; i <= r.hi; ++i) {
    const GaussianInt& x1 = ball[static_cast<std::size_t>(i)];
    for (const GaussianInt& x2 : ball) {
      ++out.candidates;
      if (canonical_gaussian_pair(x1, x2) != std::pair{x1, x2}) continue;
      const GaussianInt p = x1 * x2 * (x1 * x1 + x2 * x2);
      if (p.is_zero()) continue;
      // norm(w^2) = norm(w)^2, a cheap necessary condition.
      if (!integer_kth_root(p.norm(), 2).exact) continue;
      const auto root = gaussian_sqrt(p);
      if (!root) continue;
      if (!gaussian_gcd(x1, x2).is_unit()) {
        ++out.filtered;
        continue;
      }
      out.records.push_back(make_record(Equation::ProductSquaresZi,
                                        {{"x1_re", x1.re},
                                         {"x1_im", x1.im},
                                         {"x2_re", x2.re},
                                         {"x2_im", x2.im},
                                         {"x3_re", root->re},
                                         {"x3_im", root->im}},
                                        {"gaussian_coprime"}));
    }
  }
  out.finalize();
  return out;
}

ExactInt euler_product_space_size(std::int64_t max) { return binomial(I(max), 3); }

SearchResult search_euler_product(unsigned n, std::int64_t max, std::optional<OuterRange> outer) {
  if (n == 0) throw UsageError("exponent must be >= 1");
  SearchBounds{I(max), n}.max();
  SearchResult out;
  const OuterRange r = clip(1, max, outer);
  for (std::int64_t a = r.lo; a <= r.hi; ++a) {
    for (std::int64_t b = a + 1; b <= max; ++b) {
      for (std::int64_t c = b + 1; c <= max; ++c) {
        ++out.candidates;
        const std::int64_t s = a + b + c;
        const ExactInt p = I(a) * I(b) * I(c) * I(s);
        const KthRoot root = integer_kth_root(p, n);
        if (!root.exact) continue;
        if (!is_pairwise_coprime(std::vector{I(a), I(b), I(c), I(s)})) {
          ++out.filtered;
          continue;
        }
        out.records.push_back(make_record(Equation::EulerProduct,
                                          {{"n", ExactInt(n)}, {"x1", I(a)}, {"x2", I(b)}, {"x3", I(c)}, {"x4", root.root}},
                                          {"pairwise_coprime"}));
      }
    }
  }
  out.finalize();
  return out;
}

ExactInt quadratic_space_size(std::int64_t a_max, unsigned n_max) { return binomial(I(a_max), 2) * ExactInt(n_max); }

SearchResult search_quadratic_irreducibility(std::int64_t a_max, unsigned n_max, std::optional<OuterRange> outer) {
  if (n_max == 0) throw UsageError("n_max must be >= 1");
  SearchBounds{I(a_max), 1}.max();
  SearchResult out;
  const OuterRange r = clip(1, a_max, outer);
  for (std::int64_t a = r.lo; a <= r.hi; ++a) {
    for (std::int64_t b = a + 1; b <= a_max; ++b) {
      const bool admissible = std::gcd(a, b) == 1;
      for (unsigned n = 1; n <= n_max; ++n) {
        ++out.candidates;
        if (!admissible) continue;
        const ExactInt lin = pow(I(a), n) + pow(I(b), n);
        const ExactInt cst = pow(I(a * b), n);
        const ExactInt disc = lin * lin + ExactInt(4) * cst;
        const KthRoot s = integer_kth_root(disc, 2);
        if (!s.exact) continue;
        // lin and s have the same parity since disc = lin^2 (mod 4).
        const ExactInt r1 = (-lin - s.root) / ExactInt(2);
        const ExactInt r2 = (-lin + s.root) / ExactInt(2);
        out.records.push_back(make_record(
            Equation::Quadratic, {{"a", I(a)}, {"b", I(b)}, {"n", ExactInt(n)}, {"r1", r1}, {"r2", r2}},
            {"gcd(a,b)=1", (a * b) % 2 == 0 ? "ab_even" : "ab_odd"}));
      }
    }
  }
  out.finalize();
  return out;
}

}  // namespace fltlab
