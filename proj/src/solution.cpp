#include "fltlab/solution.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "fltlab/arith.hpp"
#include "fltlab/gaussian.hpp"

namespace fltlab {

std::string to_string(Equation e) {
  switch (e) {
    case Equation::Fermat:
      return "fermat";
    case Equation::PairSystem:
      return "pair_system";
    case Equation::Quadruple:
      return "quadruple";
    case Equation::Sys3:
      return "sys3";
    case Equation::ProductForm:
      return "product_form";
    case Equation::ProductSquaresZ:
      return "product_squares_z";
    case Equation::ProductSquaresZi:
      return "product_squares_zi";
    case Equation::EulerProduct:
      return "euler_product";
    case Equation::Quadratic:
      return "quadratic";
    case Equation::EqualSums:
      return "equal_sums";
    case Equation::CubicSplit:
      return "cubic_split";
  }
  return "?";
}

const ExactInt& SolutionRecord::var(const std::string& name) const {
  for (const auto& [k, v] : vars) {
    if (k == name) return v;
  }
  throw UsageError("record has no variable '" + name + "'");
}

namespace {

unsigned exponent_of(const ExactInt& v) {
  auto e = v.to_int64();
  if (!e || *e < 1 || *e > std::numeric_limits<int>::max()) throw UsageError("bad exponent " + v.to_string());
  return static_cast<unsigned>(*e);
}

bool has(const std::vector<std::string>& profile, const std::string& name) {
  return std::find(profile.begin(), profile.end(), name) != profile.end();
}

bool coprime(const ExactInt& a, const ExactInt& b) { return gcd(a, b) == ExactInt(1); }

std::string check_vars(const SolutionRecord& r, std::initializer_list<const char*> names) {
  if (r.vars.size() != names.size()) return "wrong variable count for " + to_string(r.equation);
  std::size_t i = 0;
  for (const char* n : names) {
    if (r.vars[i++].first != n) return "unexpected variable layout for " + to_string(r.equation);
  }
  return {};
}

std::string verify_impl(const SolutionRecord& r) {
  const auto& p = r.constraint_profile;
  auto v = [&r](const char* name) -> const ExactInt& { return r.var(name); };
  switch (r.equation) {
    case Equation::Fermat: {
      if (auto e = check_vars(r, {"n", "x", "y", "z"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      if (pow(v("x"), n) + pow(v("y"), n) != pow(v("z"), n)) return "x^n + y^n != z^n";
      if (has(p, "pairwise_coprime") && !is_pairwise_coprime(std::vector{v("x"), v("y"), v("z")}))
        return "not pairwise coprime";
      return {};
    }
    case Equation::PairSystem: {
      if (auto e = check_vars(r, {"n", "X", "Y", "Xp", "Yp"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      if (pow(v("X"), n) + pow(v("Y"), n) != pow(v("Xp"), n) - pow(v("Yp"), n)) return "X^n + Y^n != Xp^n - Yp^n";
      if (v("X") * v("Y") != v("Xp") * v("Yp")) return "XY != XpYp";
      if (has(p, "gcd(X,Y)=1") && !coprime(v("X"), v("Y"))) return "gcd(X,Y) != 1";
      if (has(p, "gcd(Xp,Yp)=1") && !coprime(v("Xp"), v("Yp"))) return "gcd(Xp,Yp) != 1";
      return {};
    }
    case Equation::Quadruple: {
      if (auto e = check_vars(r, {"n", "x", "y", "z", "u"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      if (pow(v("x"), n) + pow(v("y"), n) + pow(v("z"), n) != pow(v("u"), n)) return "x^n + y^n + z^n != u^n";
      if (has(p, "xy=zu") && v("x") * v("y") != v("z") * v("u")) return "xy != zu";
      if (has(p, "gcd(x,y)=1") && !coprime(v("x"), v("y"))) return "gcd(x,y) != 1";
      if (has(p, "gcd(z,u)=1") && !coprime(v("z"), v("u"))) return "gcd(z,u) != 1";
      if (has(p, "pairwise_coprime") && !is_pairwise_coprime(std::vector{v("x"), v("y"), v("z"), v("u")}))
        return "not pairwise coprime";
      return {};
    }
    case Equation::Sys3: {
      if (auto e = check_vars(r, {"n", "x1", "x2", "x3", "x4"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      const ExactInt s = pow(v("x1"), 3) + pow(v("x2"), 3) + pow(v("x3"), 3) + ExactInt(3) * pow(v("x4"), n);
      if (!s.is_zero()) return "x1^3 + x2^3 + x3^3 + 3 x4^n != 0";
      if (!((v("x1") + v("x2") + v("x3")) * v("x4")).is_zero()) return "(x1 + x2 + x3) x4 != 0";
      if ((v("x1") * v("x2") * v("x3")).is_zero()) return "x1 x2 x3 == 0";
      if (has(p, "pairwise_coprime") && !is_pairwise_coprime(std::vector{v("x1"), v("x2"), v("x3")}))
        return "x1, x2, x3 not pairwise coprime";
      return {};
    }
    case Equation::ProductForm: {
      if (auto e = check_vars(r, {"n", "x1", "x2", "x3"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      if (v("x1") * v("x2") * (v("x1") + v("x2")) != pow(v("x3"), n)) return "x1 x2 (x1 + x2) != x3^n";
      if (has(p, "gcd(x1,x2)=1") && !coprime(v("x1"), v("x2"))) return "gcd(x1,x2) != 1";
      return {};
    }
    case Equation::ProductSquaresZ: {
      if (auto e = check_vars(r, {"x1", "x2", "x3"}); !e.empty()) return e;
      const ExactInt lhs = v("x1") * v("x2") * (pow(v("x1"), 2) + pow(v("x2"), 2));
      if (lhs != pow(v("x3"), 2)) return "x1 x2 (x1^2 + x2^2) != x3^2";
      if (has(p, "gcd(x1,x2)=1") && !coprime(v("x1"), v("x2"))) return "gcd(x1,x2) != 1";
      return {};
    }
    case Equation::ProductSquaresZi: {
      if (auto e = check_vars(r, {"x1_re", "x1_im", "x2_re", "x2_im", "x3_re", "x3_im"}); !e.empty()) return e;
      const GaussianInt x1{v("x1_re"), v("x1_im")};
      const GaussianInt x2{v("x2_re"), v("x2_im")};
      const GaussianInt x3{v("x3_re"), v("x3_im")};
      if (x1 * x2 * (x1 * x1 + x2 * x2) != x3 * x3) return "x1 x2 (x1^2 + x2^2) != x3^2 in Z[i]";
      if (has(p, "gaussian_coprime") && !gaussian_gcd(x1, x2).is_unit()) return "x1, x2 share a Gaussian prime";
      return {};
    }
    case Equation::EulerProduct: {
      if (auto e = check_vars(r, {"n", "x1", "x2", "x3", "x4"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      const ExactInt s = v("x1") + v("x2") + v("x3");
      if (v("x1") * v("x2") * v("x3") * s != pow(v("x4"), n)) return "x1 x2 x3 (x1 + x2 + x3) != x4^n";
      if (has(p, "pairwise_coprime") && !is_pairwise_coprime(std::vector{v("x1"), v("x2"), v("x3"), s}))
        return "x1, x2, x3, x1+x2+x3 not pairwise coprime";
      return {};
    }
    case Equation::Quadratic: {
      if (auto e = check_vars(r, {"a", "b", "n", "r1", "r2"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      const ExactInt lin = pow(v("a"), n) + pow(v("b"), n);
      const ExactInt cst = -pow(v("a") * v("b"), n);
      // (x - r1)(x - r2) = x^2 - (r1 + r2) x + r1 r2
      if (-(v("r1") + v("r2")) != lin || v("r1") * v("r2") != cst) return "roots do not match x^2 + (a^n+b^n)x - (ab)^n";
      if (has(p, "gcd(a,b)=1") && !coprime(v("a"), v("b"))) return "gcd(a,b) != 1";
      return {};
    }
    case Equation::EqualSums: {
      if (r.vars.empty() || r.vars[0].first != "k") return "equal_sums record must start with k";
      const unsigned k = exponent_of(r.vars[0].second);
      ExactInt lhs(0), rhs(0);
      std::vector<ExactInt> xs, ys;
      for (std::size_t i = 1; i < r.vars.size(); ++i) {
        const auto& [name, val] = r.vars[i];
        if (val.sign() <= 0) return "nonpositive term " + name;
        if (name[0] == 'x') {
          lhs += pow(val, k);
          xs.push_back(val);
        } else if (name[0] == 'y') {
          rhs += pow(val, k);
          ys.push_back(val);
        } else {
          return "unexpected variable " + name;
        }
      }
      if (xs.empty() || ys.empty()) return "empty side";
      if (lhs != rhs) return "sum x^k != sum y^k";
      if (has(p, "no_trivial_cancellation")) {
        for (const auto& x : xs)
          if (std::find(ys.begin(), ys.end(), x) != ys.end()) return "term on both sides";
      }
      if (has(p, "pairwise_coprime")) {
        std::vector<ExactInt> all = xs;
        all.insert(all.end(), ys.begin(), ys.end());
        if (all.size() >= 2 && !is_pairwise_coprime(all)) return "terms not pairwise coprime";
      }
      return {};
    }
    case Equation::CubicSplit: {
      if (auto e = check_vars(r, {"a", "b", "n", "r1", "r2", "r3"}); !e.empty()) return e;
      const unsigned n = exponent_of(v("n"));
      const ExactInt &r1 = v("r1"), &r2 = v("r2"), &r3 = v("r3");
      // (x - r1)(x - r2)(x - r3) = x^3 - e1 x^2 + e2 x - e3
      if (!(r1 + r2 + r3).is_zero()) return "x^2 coefficient nonzero";
      if (r1 * r2 + r1 * r3 + r2 * r3 != v("b")) return "x coefficient != b";
      if (-(r1 * r2 * r3) != pow(v("a"), n)) return "constant != a^n";
      if (has(p, "gcd(a,b)=1") && !coprime(v("a"), v("b"))) return "gcd(a,b) != 1";
      return {};
    }
  }
  return "unknown equation";
}

}  // namespace

std::string verify_record(const SolutionRecord& rec) {
  try {
    return verify_impl(rec);
  } catch (const std::exception& e) {
    return e.what();
  }
}

SolutionRecord make_record(Equation eq, std::vector<std::pair<std::string, ExactInt>> vars,
                           std::vector<std::string> profile) {
  SolutionRecord r{eq, std::move(vars), std::move(profile)};
  if (auto err = verify_record(r); !err.empty()) {
    throw std::logic_error("emitted record fails verification (" + to_string(eq) + "): " + err);
  }
  return r;
}

bool record_less(const SolutionRecord& a, const SolutionRecord& b) {
  const std::size_t n = std::min(a.vars.size(), b.vars.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.vars[i].second != b.vars[i].second) return a.vars[i].second < b.vars[i].second;
  }
  if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
  return static_cast<int>(a.equation) < static_cast<int>(b.equation);
}

void sort_records(std::vector<SolutionRecord>& records) { std::sort(records.begin(), records.end(), record_less); }

std::int64_t SearchBounds::max() const {
  if (per_var_max.sign() <= 0) throw UsageError("bound must be >= 1");
  auto v = per_var_max.to_int64();
  if (!v || *v > (std::int64_t{1} << 40)) throw UsageError("bound " + per_var_max.to_string() + " is too large to enumerate");
  return *v;
}

OuterRange OuterRange::intersect(const OuterRange& o) const {
  return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

std::vector<OuterRange> partition(const OuterRange& r, std::size_t parts) {
  std::vector<OuterRange> out;
  if (r.empty()) return out;
  if (parts == 0) parts = 1;
  const auto total = static_cast<std::uint64_t>(r.size());
  const std::uint64_t p = std::min<std::uint64_t>(parts, total);
  std::int64_t start = r.lo;
  for (std::uint64_t i = 0; i < p; ++i) {
    const std::uint64_t len = total / p + (i < total % p ? 1 : 0);
    out.push_back({start, start + static_cast<std::int64_t>(len) - 1});
    start += static_cast<std::int64_t>(len);
  }
  return out;
}

void SearchResult::merge(SearchResult&& other) {
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
  candidates += other.candidates;
  filtered += other.filtered;
}

void SearchResult::finalize() {
  sort_records(records);
  records.erase(std::unique(records.begin(), records.end()), records.end());
}

SearchResult run_partitioned(const OuterRange& range, std::size_t parts, std::size_t jobs,
                             const std::function<SearchResult(const OuterRange&)>& fn) {
  const auto pieces = partition(range, parts);
  std::vector<SearchResult> results(pieces.size());
  std::vector<std::exception_ptr> errors(pieces.size());
  if (jobs <= 1 || pieces.size() <= 1) {
    for (std::size_t i = 0; i < pieces.size(); ++i) results[i] = fn(pieces[i]);
  } else {
    std::size_t next = 0;
    std::mutex m;
    auto worker = [&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard lock(m);
          if (next >= pieces.size()) return;
          i = next++;
        }
        try {
          results[i] = fn(pieces[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < std::min(jobs, pieces.size()); ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  SearchResult out;
  for (auto& r : results) out.merge(std::move(r));
  out.finalize();
  return out;
}

}  // namespace fltlab
