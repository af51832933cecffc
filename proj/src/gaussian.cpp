#include "fltlab/gaussian.hpp"

#include <algorithm>

namespace fltlab {

namespace {

// floor(a / b) for b > 0.
ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q = a / b;
  if ((a % b).sign() < 0) q -= ExactInt(1);
  return q;
}

// Nearest integer to a / b for b > 0, halves rounded down.
ExactInt round_div(const ExactInt& a, const ExactInt& b) { return floor_div(a * ExactInt(2) + b, b * ExactInt(2)); }

GaussianInt times_i(const GaussianInt& z) { return {-z.im, z.re}; }

// Some t with t^2 = -1 (mod p), p prime and p = 1 (mod 4).
ExactInt sqrt_minus_one(const ExactInt& p) {
  const mpz_class mp = p.to_mpz();
  const mpz_class e = (mp - 1) / 4;
  const mpz_class target = mp - 1;
  for (unsigned long c = 2;; ++c) {
    mpz_class t;
    const mpz_class base = c;
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mp.get_mpz_t());
    mpz_class sq;
    mpz_powm_ui(sq.get_mpz_t(), t.get_mpz_t(), 2, mp.get_mpz_t());
    if (sq == target) return ExactInt(t);
  }
}

}  // namespace

bool GaussianInt::is_unit() const { return norm() == ExactInt(1); }

std::string GaussianInt::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag;
  const ExactInt mag = abs(im);
  imag = mag == ExactInt(1) ? "i" : mag.to_string() + "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

bool operator<(const GaussianInt& a, const GaussianInt& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) throw UsageError("Gaussian division by zero");
  const ExactInt n = b.norm();
  const GaussianInt num = a * b.conj();
  GaussianInt q{round_div(num.re, n), round_div(num.im, n)};
  return {q, a - q * b};
}

std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) throw UsageError("Gaussian division by zero");
  const ExactInt n = b.norm();
  const GaussianInt num = a * b.conj();
  if (!divides(n, num.re) || !divides(n, num.im)) return std::nullopt;
  return GaussianInt{num.re / n, num.im / n};
}

bool gaussian_divides(const GaussianInt& d, const GaussianInt& z) {
  if (d.is_zero()) return z.is_zero();
  return exact_div(z, d).has_value();
}

GaussianInt canonical_associate(const GaussianInt& z) {
  if (z.is_zero()) return z;
  GaussianInt w = z;
  for (int k = 0; k < 4; ++k) {
    if (w.re.sign() > 0 && w.im.sign() >= 0) return w;
    w = times_i(w);
  }
  return w;  // unreachable for nonzero z
}

GaussianInt gaussian_gcd(const GaussianInt& z, const GaussianInt& w) {
  if (z.is_zero() && w.is_zero()) throw UsageError("gaussian_gcd(0, 0) is undefined");
  GaussianInt a = z;
  GaussianInt b = w;
  while (!b.is_zero()) {
    GaussianInt r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a);
}

GaussianInt GaussianFactorization::product() const {
  GaussianInt r = unit;
  for (const auto& f : factors) {
    for (unsigned e = 0; e < f.exponent; ++e) r = r * f.prime;
  }
  return r;
}

GaussianFactorization gaussian_factorize(const GaussianInt& z, const FactorizationBudget& budget) {
  if (z.is_zero()) throw UsageError("cannot factor Gaussian zero");
  GaussianFactorization out;
  GaussianInt rest = z;
  const Factorization nf = factorize(z.norm(), budget);

  auto peel = [&rest](const GaussianInt& pi) {
    unsigned e = 0;
    while (auto q = exact_div(rest, pi)) {
      rest = *q;
      ++e;
    }
    return e;
  };

  for (const auto& pp : nf.factors) {
    const Mod4Class cls = mod4_class(pp.prime);
    if (cls == Mod4Class::Two) {
      const GaussianInt pi{ExactInt(1), ExactInt(1)};
      out.factors.push_back({pi, peel(pi)});
    } else if (cls == Mod4Class::MinusOne) {
      // Inert prime: the norm exponent is twice the Gaussian exponent.
      const GaussianInt pi{pp.prime, ExactInt(0)};
      out.factors.push_back({pi, peel(pi)});
    } else {
      const ExactInt t = sqrt_minus_one(pp.prime);
      const GaussianInt pi = gaussian_gcd(GaussianInt{pp.prime}, GaussianInt{t, ExactInt(1)});
      const GaussianInt pi_bar = canonical_associate(pi.conj());
      const unsigned e1 = peel(pi);
      const unsigned e2 = peel(pi_bar);
      if (e1 > 0) out.factors.push_back({pi, e1});
      if (e2 > 0) out.factors.push_back({pi_bar, e2});
    }
  }
  if (!rest.is_unit()) throw std::logic_error("Gaussian factorization left a non-unit cofactor " + rest.to_string());
  out.unit = rest;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const GaussianPrimePower& a, const GaussianPrimePower& b) { return a.prime < b.prime; });
  return out;
}

bool is_gaussian_square(const GaussianInt& z, const FactorizationBudget& budget) {
  if (z.is_zero()) return true;
  const GaussianFactorization f = gaussian_factorize(z, budget);
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2 != 0) return false;
  }
  return f.unit.im.is_zero();  // 1 = 1^2, -1 = i^2
}

std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& z, const FactorizationBudget& budget) {
  if (z.is_zero()) return z;
  const GaussianFactorization f = gaussian_factorize(z, budget);
  if (!f.unit.im.is_zero()) return std::nullopt;
  GaussianInt w = f.unit.re.sign() > 0 ? GaussianInt{ExactInt(1)} : GaussianInt{ExactInt(0), ExactInt(1)};
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2 != 0) return std::nullopt;
    for (unsigned e = 0; e < pp.exponent / 2; ++e) w = w * pp.prime;
  }
  if (w.re.sign() < 0 || (w.re.is_zero() && w.im.sign() < 0)) w = -w;
  return w;
}

}  // namespace fltlab
