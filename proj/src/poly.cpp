#include "fltlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fltlab {

MonicIntPoly::MonicIntPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw UsageError("polynomial degree must be >= 1");
  if (coeffs_.front() != ExactInt(1)) {
    throw UsageError("polynomial is not monic: leading coefficient " + coeffs_.front().to_string());
  }
}

MonicIntPoly MonicIntPoly::from_roots(const std::vector<ExactInt>& roots) {
  if (roots.empty()) throw UsageError("from_roots needs at least one root");
  std::vector<ExactInt> c{ExactInt(1)};
  for (const auto& r : roots) {
    std::vector<ExactInt> next(c.size() + 1, ExactInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  return MonicIntPoly(std::move(c));
}

ExactInt MonicIntPoly::evaluate(const ExactInt& x) const {
  ExactInt acc(0);
  for (const auto& c : coeffs_) acc = acc * x + c;
  return acc;
}

std::string MonicIntPoly::to_string() const {
  std::ostringstream os;
  const std::size_t deg = degree();
  bool first = true;
  for (std::size_t i = 0; i <= deg; ++i) {
    const ExactInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    const std::size_t power = deg - i;
    const bool neg = c.sign() < 0;
    const ExactInt mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (power == 0) {
      os << mag;
      continue;
    }
    if (mag != ExactInt(1)) os << mag << '*';
    os << 'x';
    if (power > 1) os << '^' << power;
  }
  return os.str();
}

MonicIntPoly multiply(const MonicIntPoly& a, const MonicIntPoly& b) {
  std::vector<ExactInt> c(a.coeffs().size() + b.coeffs().size() - 1, ExactInt(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return MonicIntPoly(std::move(c));
}

LinearDivision divide_linear(const std::vector<ExactInt>& coeffs, const ExactInt& r) {
  LinearDivision out;
  ExactInt acc(0);
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    acc = acc * r + coeffs[i];
    out.quotient.push_back(acc);
  }
  out.remainder = acc * r + coeffs.back();
  return out;
}

namespace {

constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kFilterPrime);
}

struct Deflation {
  std::vector<ExactInt> roots;
  std::vector<ExactInt> residual;  // monic, {1} when fully split
};

// Every integer root of a monic polynomial divides the (nonzero) constant
// term. Candidates are screened modulo a 61-bit prime and then confirmed by
// exact synthetic division.
Deflation deflate_integer_roots(std::vector<ExactInt> c, const FactorizationBudget& budget) {
  Deflation out;
  while (c.size() > 1 && c.back().is_zero()) {
    out.roots.push_back(ExactInt(0));
    c.pop_back();
  }
  if (c.size() > 1) {
    const auto divs = divisors(factorize(abs(c.back()), budget));
    std::vector<std::uint64_t> cmod;
    ExactInt cauchy;
    auto refresh = [&] {
      cmod.clear();
      ExactInt m(0);
      for (const auto& v : c) {
        cmod.push_back(v.mod_u64(kFilterPrime));
        if (abs(v) > m) m = abs(v);
      }
      cauchy = m + ExactInt(1);
    };
    refresh();
    for (const auto& d : divs) {
      if (c.size() == 1) break;
      if (d > cauchy) break;
      for (const ExactInt& cand : {d, -d}) {
        while (c.size() > 1) {
          const std::uint64_t xm = cand.mod_u64(kFilterPrime);
          std::uint64_t acc = 0;
          for (std::uint64_t cm : cmod) acc = (mulmod(acc, xm) + cm) % kFilterPrime;
          if (acc != 0) break;
          auto div = divide_linear(c, cand);
          if (!div.remainder.is_zero()) break;
          out.roots.push_back(cand);
          c = std::move(div.quotient);
          refresh();
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = std::move(c);
  return out;
}

}  // namespace

std::vector<ExactInt> integer_roots(const MonicIntPoly& poly, const FactorizationBudget& budget) {
  return deflate_integer_roots(poly.coeffs(), budget).roots;
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::FullySplit:
      return "FullySplit";
    case SplitType::PartialSplit:
      return "PartialSplit";
    case SplitType::NoLinearFactor:
      return "NoLinearFactor";
  }
  return "?";
}

SplitReport analyze(const MonicIntPoly& poly, const FactorizationBudget& budget) {
  Deflation d = deflate_integer_roots(poly.coeffs(), budget);
  SplitReport rep;
  rep.integer_roots = std::move(d.roots);
  if (d.residual.size() > 1) rep.residual_factor = MonicIntPoly(std::move(d.residual));
  if (rep.integer_roots.size() == poly.degree()) {
    rep.split_type = SplitType::FullySplit;
  } else if (rep.integer_roots.empty()) {
    rep.split_type = SplitType::NoLinearFactor;
  } else {
    rep.split_type = SplitType::PartialSplit;
  }
  // Reconstruction check.
  std::optional<MonicIntPoly> rebuilt;
  if (!rep.integer_roots.empty()) rebuilt = MonicIntPoly::from_roots(rep.integer_roots);
  if (rep.residual_factor) rebuilt = rebuilt ? multiply(*rebuilt, *rep.residual_factor) : *rep.residual_factor;
  if (!rebuilt || *rebuilt != poly) throw std::logic_error("split report does not reconstruct " + poly.to_string());
  return rep;
}

std::string to_string(CubicClass c) {
  switch (c) {
    case CubicClass::Irreducible:
      return "Irreducible";
    case CubicClass::OneLinearTimesIrreducibleQuadratic:
      return "OneLinearTimesIrreducibleQuadratic";
    case CubicClass::ThreeLinear:
      return "ThreeLinear";
  }
  return "?";
}

MonicIntPoly cubic_from_params(const ExactInt& b, const ExactInt& a, unsigned n) {
  return MonicIntPoly({ExactInt(1), ExactInt(0), b, pow(a, n)});
}

CubicClass classify_cubic(const ExactInt& b, const ExactInt& a, unsigned n) {
  if (n == 0) throw UsageError("classify_cubic: n must be >= 1");
  if (a.sign() <= 0) throw UsageError("classify_cubic: a must be > 0");
  if (b.is_zero()) throw UsageError("classify_cubic: b must be nonzero");
  if (gcd(a, b) != ExactInt(1)) throw UsageError("classify_cubic: gcd(a, b) must be 1");
  const SplitReport rep = analyze(cubic_from_params(b, a, n));
  // A monic cubic without an integer root has no rational root, hence is
  // irreducible; with one root the residual quadratic has none either.
  switch (rep.integer_roots.size()) {
    case 0:
      return CubicClass::Irreducible;
    case 3:
      return CubicClass::ThreeLinear;
    default:
      return CubicClass::OneLinearTimesIrreducibleQuadratic;
  }
}

void validate_witness(const FermatWitness& w) {
  if (w.n == 0) throw UsageError("witness exponent must be >= 1");
  if (w.p.sign() <= 0 || w.q.sign() <= 0 || w.r.sign() <= 0) throw UsageError("witness terms must be positive");
  if (pow(w.p, w.n) + pow(w.q, w.n) != pow(w.r, w.n)) throw UsageError("witness does not satisfy p^n + q^n = r^n");
  if (!is_pairwise_coprime(std::vector{w.p, w.q, w.r})) throw UsageError("witness terms are not pairwise coprime");
}

CubicConstruction build_cubic(const FermatWitness& w) {
  validate_witness(w);
  const ExactInt alpha = pow(w.p, w.n);
  const ExactInt beta = pow(w.q, w.n);
  const ExactInt gamma = pow(w.r, w.n);
  MonicIntPoly poly = MonicIntPoly::from_roots({alpha, beta, -gamma});
  const ExactInt a = w.p * w.q * w.r;
  const ExactInt b = poly.coeff(1);
  return {poly, a, b, gcd(a, b) == ExactInt(1), w.p != w.q};
}

std::string to_string(ExtractFailure f) {
  switch (f) {
    case ExtractFailure::None:
      return "none";
    case ExtractFailure::NotSplit:
      return "not-split";
    case ExtractFailure::NonDistinctRoots:
      return "non-distinct-roots";
    case ExtractFailure::NotPairwiseCoprime:
      return "roots-not-pairwise-coprime";
    case ExtractFailure::NotPerfectPower:
      return "root-not-perfect-power";
    case ExtractFailure::SignPattern:
      return "unexpected-root-signs";
  }
  return "?";
}

namespace {

// Repeated roots survive pairwise coprimality only as the value 1.
bool has_repeat_above_one(const std::vector<ExactInt>& sorted_roots) {
  for (std::size_t i = 1; i < sorted_roots.size(); ++i) {
    if (sorted_roots[i] == sorted_roots[i - 1] && abs(sorted_roots[i]) != ExactInt(1)) return true;
  }
  return false;
}

bool has_repeat(const std::vector<ExactInt>& sorted_roots) {
  return std::adjacent_find(sorted_roots.begin(), sorted_roots.end()) != sorted_roots.end();
}

}  // namespace

FermatExtraction extract_fermat_witness(const MonicIntPoly& poly, unsigned n) {
  if (n == 0) throw UsageError("extract_fermat_witness: n must be >= 1");
  if (poly.degree() != 3) throw UsageError("extract_fermat_witness: polynomial must be cubic");
  if (!poly.coeff(2).is_zero()) throw UsageError("extract_fermat_witness: x^2 coefficient must be 0");
  const ExactInt& b = poly.coeff(1);
  if (b.is_zero()) throw UsageError("extract_fermat_witness: b must be nonzero");
  if (poly.constant().sign() <= 0) throw UsageError("extract_fermat_witness: constant term must be a^n with a > 0");
  const KthRoot a = integer_kth_root(poly.constant(), n);
  if (!a.exact) throw UsageError("extract_fermat_witness: constant term is not a perfect n-th power");
  if (gcd(a.root, b) != ExactInt(1)) throw UsageError("extract_fermat_witness: gcd(a, b) must be 1");

  FermatExtraction out;
  const SplitReport rep = analyze(poly);
  if (rep.split_type != SplitType::FullySplit) {
    out.failure = ExtractFailure::NotSplit;
    return out;
  }
  const auto& roots = rep.integer_roots;  // ascending
  out.distinct_roots = !has_repeat(roots);
  if (!(roots[0].sign() < 0 && roots[1].sign() > 0)) {
    out.failure = ExtractFailure::SignPattern;
    return out;
  }
  if (has_repeat_above_one(roots)) {
    out.failure = ExtractFailure::NonDistinctRoots;
    return out;
  }
  const ExactInt gamma = -roots[0];
  const ExactInt& alpha = roots[1];
  const ExactInt& beta = roots[2];
  if (!is_pairwise_coprime(std::vector{alpha, beta, gamma})) {
    out.failure = ExtractFailure::NotPairwiseCoprime;
    return out;
  }
  const KthRoot p = integer_kth_root(alpha, n);
  const KthRoot q = integer_kth_root(beta, n);
  const KthRoot r = integer_kth_root(gamma, n);
  if (!p.exact || !q.exact || !r.exact) {
    out.failure = ExtractFailure::NotPerfectPower;
    return out;
  }
  if (p.root * q.root * r.root != a.root) throw std::logic_error("extracted witness does not satisfy a = pqr");
  out.witness = FermatWitness{p.root, q.root, r.root, n};
  return out;
}

PowerSumExtraction extract_powersum_identity(const MonicIntPoly& poly, unsigned k) {
  if (k == 0) throw UsageError("extract_powersum_identity: k must be >= 1");
  const std::size_t deg = poly.degree();
  if (deg < 2) throw UsageError("extract_powersum_identity: degree must be >= 2");
  if (!poly.coeff(deg - 1).is_zero()) throw UsageError("extract_powersum_identity: x^(n-1) coefficient must be 0");
  const ExactInt& a1 = poly.coeff(1);
  const ExactInt& a0 = poly.constant();
  if (a1.is_zero() || a0.is_zero()) throw UsageError("extract_powersum_identity: a1 * a0 must be nonzero");
  if (gcd(a1, a0) != ExactInt(1)) throw UsageError("extract_powersum_identity: gcd(a1, a0) must be 1");
  if (!integer_kth_root(abs(a0), k).exact) throw UsageError("extract_powersum_identity: |a0| is not a perfect k-th power");

  PowerSumExtraction out;
  const SplitReport rep = analyze(poly);
  if (rep.split_type != SplitType::FullySplit) {
    out.failure = ExtractFailure::NotSplit;
    return out;
  }
  const auto& roots = rep.integer_roots;
  out.distinct_roots = !has_repeat(roots);
  if (has_repeat_above_one(roots)) {
    out.failure = ExtractFailure::NonDistinctRoots;
    return out;
  }
  std::vector<ExactInt> mags;
  for (const auto& r : roots) mags.push_back(abs(r));
  if (!is_pairwise_coprime(mags)) {
    out.failure = ExtractFailure::NotPairwiseCoprime;
    return out;
  }
  std::vector<ExactInt> lhs, rhs;
  for (const auto& r : roots) {
    const KthRoot t = integer_kth_root(abs(r), k);
    if (!t.exact) {
      out.failure = ExtractFailure::NotPerfectPower;
      return out;
    }
    (r.sign() > 0 ? lhs : rhs).push_back(t.root);
  }
  if (lhs.empty() || rhs.empty()) {
    out.failure = ExtractFailure::SignPattern;
    return out;
  }
  out.instance = PowerSumInstance::make(k, std::move(lhs), std::move(rhs));
  return out;
}

PowerSumPoly build_poly_from_powersum(const PowerSumInstance& inst) {
  if (!verify_identity(inst).balanced) throw UsageError("build_poly_from_powersum: instance is not balanced");
  std::vector<ExactInt> roots;
  for (const auto& x : inst.lhs) roots.push_back(pow(x, inst.k));
  for (const auto& y : inst.rhs) roots.push_back(-pow(y, inst.k));
  MonicIntPoly poly = MonicIntPoly::from_roots(roots);
  const bool g = gcd(poly.coeff(1), poly.constant()) == ExactInt(1);
  return {poly, pairwise_coprime(inst.terms()), g};
}

}  // namespace fltlab
