#pragma once

// Brute-force reference implementations. Plain nested loops over every
// variable, 128-bit arithmetic, no pruning and no library search code.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "fltlab/solution.hpp"

namespace oracle {

using Tuple = std::vector<long long>;
using i128 = __int128;

inline i128 ipow(i128 b, unsigned e) {
  i128 r = 1;
  while (e--) r *= b;
  return r;
}

inline long long g(long long a, long long b) { return std::gcd(a, b); }

inline bool pairwise(const Tuple& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (g(v[i], v[j]) != 1) return false;
  return true;
}

// Bisection on r^n over [0, p]; p >= 0.
inline bool naive_root(i128 p, unsigned n, long long& r) {
  if (p < 0) return false;
  unsigned bits = 0;
  for (i128 t = p; t > 0; t >>= 1) ++bits;
  i128 lo = 0, hi = std::min<i128>(p, i128(1) << (bits / n + 1));
  while (lo < hi) {
    const i128 mid = (lo + hi) / 2;
    if (ipow(mid, n) < p) lo = mid + 1;
    else hi = mid;
  }
  if (ipow(lo, n) != p) return false;
  r = static_cast<long long>(lo);
  return true;
}

inline Tuple values(const fltlab::SolutionRecord& rec) {
  Tuple t;
  for (const auto& kv : rec.vars) t.push_back(*kv.second.to_int64());
  return t;
}

inline std::vector<Tuple> values(const std::vector<fltlab::SolutionRecord>& recs) {
  std::vector<Tuple> out;
  for (const auto& r : recs) out.push_back(values(r));
  return out;
}

inline std::vector<Tuple> sorted(std::vector<Tuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Tuple> fermat(unsigned n, long long max, bool primitive) {
  std::vector<Tuple> out;
  for (long long x = 1; x <= max; ++x)
    for (long long y = x; y <= max; ++y)
      for (long long z = 1; z <= max; ++z)
        if (ipow(x, n) + ipow(y, n) == ipow(z, n) && (!primitive || pairwise({x, y, z})))
          out.push_back({n, x, y, z});
  return sorted(out);
}

inline std::vector<Tuple> pair_system(unsigned n, long long max) {
  std::vector<Tuple> out;
  for (long long X = 1; X <= max; ++X)
    for (long long Y = X; Y <= max; ++Y)
      for (long long Xp = 1; Xp <= max; ++Xp)
        for (long long Yp = 1; Yp <= max; ++Yp)
          if (g(X, Y) == 1 && g(Xp, Yp) == 1 && X * Y == Xp * Yp &&
              ipow(X, n) + ipow(Y, n) == ipow(Xp, n) - ipow(Yp, n))
            out.push_back({n, X, Y, Xp, Yp});
  return sorted(out);
}

// fully_pairwise: all four pairwise coprime (and y <= z unless xy = zu is
// required); otherwise gcd(x,y) = gcd(z,u) = 1.
inline std::vector<Tuple> quadruple(unsigned n, long long max, bool fully_pairwise, bool xy_eq_zu) {
  std::vector<Tuple> out;
  const bool symmetric = fully_pairwise && !xy_eq_zu;
  for (long long x = 1; x <= max; ++x)
    for (long long y = x; y <= max; ++y)
      for (long long z = symmetric ? y : 1; z <= max; ++z)
        for (long long u = 1; u <= max; ++u) {
          if (ipow(x, n) + ipow(y, n) + ipow(z, n) != ipow(u, n)) continue;
          if (xy_eq_zu && x * y != z * u) continue;
          const bool ok = fully_pairwise ? pairwise({x, y, z, u}) : (g(x, y) == 1 && g(z, u) == 1);
          if (ok) out.push_back({n, x, y, z, u});
        }
  return sorted(out);
}

inline std::vector<Tuple> sys3(unsigned n, long long max) {
  std::vector<Tuple> out;
  for (long long a = -max; a <= max; ++a)
    for (long long b = a; b <= max; ++b)
      for (long long c = b; c <= max; ++c) {
        if (a == 0 || b == 0 || c == 0) continue;
        for (long long d = -max; d <= max; ++d) {
          if (i128(a) * a * a + i128(b) * b * b + i128(c) * c * c + 3 * ipow(d, n) != 0) continue;
          if ((a + b + c) * d != 0) continue;
          if (g(a, b) == 1 && g(a, c) == 1 && g(b, c) == 1) out.push_back({n, a, b, c, d});
        }
      }
  return sorted(out);
}

inline std::vector<Tuple> product_form(unsigned n, long long max, bool coprime) {
  std::vector<Tuple> out;
  long long r = 0;
  for (long long a = 1; a <= max; ++a)
    for (long long b = a + 1; b <= max; ++b)
      if ((!coprime || g(a, b) == 1) && naive_root(i128(a) * b * (a + b), n, r)) out.push_back({n, a, b, r});
  return sorted(out);
}

inline std::vector<Tuple> product_squares_z(long long max) {
  std::vector<Tuple> out;
  long long r = 0;
  for (long long a = 1; a <= max; ++a)
    for (long long b = a + 1; b <= max; ++b)
      if (g(a, b) == 1 && naive_root(i128(a) * b * (a * a + b * b), 2, r)) out.push_back({a, b, r});
  return sorted(out);
}

inline std::vector<Tuple> euler_product(unsigned n, long long max) {
  std::vector<Tuple> out;
  long long r = 0;
  for (long long a = 1; a <= max; ++a)
    for (long long b = a + 1; b <= max; ++b)
      for (long long c = b + 1; c <= max; ++c)
        if (pairwise({a, b, c, a + b + c}) && naive_root(i128(a) * b * c * (a + b + c), n, r))
          out.push_back({n, a, b, c, r});
  return sorted(out);
}

// Reducible x^2 + (a^n + b^n) x - (ab)^n: roots -big < 0 < small with
// big * small = (ab)^n and big - small = a^n + b^n.
inline std::vector<Tuple> quadratic(long long a_max, unsigned n_max) {
  std::vector<Tuple> out;
  for (long long a = 1; a <= a_max; ++a)
    for (long long b = a + 1; b <= a_max; ++b) {
      if (g(a, b) != 1) continue;
      for (unsigned n = 1; n <= n_max; ++n) {
        const i128 c = ipow(a * b, n);
        const i128 lin = ipow(a, n) + ipow(b, n);
        for (i128 d = 1; d * d <= c; ++d) {
          if (c % d != 0) continue;
          if (c / d - d == lin) out.push_back({a, b, n, static_cast<long long>(-(c / d)), static_cast<long long>(d)});
        }
      }
    }
  return sorted(out);
}

namespace detail {
template <class Fn>
void multisets(std::vector<long long>& buf, std::size_t pos, long long lo, long long max, Fn&& fn) {
  if (pos == buf.size()) return fn();
  for (long long v = lo; v <= max; ++v) {
    buf[pos] = v;
    multisets(buf, pos + 1, v, max, fn);
  }
}
}  // namespace detail

// Row: k, x1..xh, y1..yl. Nested loops over both sides.
inline std::vector<Tuple> equal_sums(unsigned h, unsigned l, unsigned k, long long max, bool coprime) {
  std::vector<Tuple> out;
  std::vector<long long> xs(h), ys(l);
  detail::multisets(xs, 0, 1, max, [&] {
    i128 lhs = 0;
    for (auto x : xs) lhs += ipow(x, k);
    detail::multisets(ys, 0, 1, max, [&] {
      i128 rhs = 0;
      for (auto y : ys) rhs += ipow(y, k);
      if (lhs != rhs) return;
      for (auto x : xs)
        if (std::find(ys.begin(), ys.end(), x) != ys.end()) return;
      Tuple all = xs;
      all.insert(all.end(), ys.begin(), ys.end());
      if (coprime && !pairwise(all)) return;
      Tuple row{static_cast<long long>(k)};
      row.insert(row.end(), all.begin(), all.end());
      out.push_back(row);
    });
  });
  return sorted(out);
}

// z = a + bi is a square in Z[i] iff N = |z| is an integer and c^2 = (N + a)/2,
// d^2 = (N - a)/2 are squares with 2cd = b for some sign choice.
inline bool gaussian_square(long long a, long long b) {
  if (a == 0 && b == 0) return true;
  long long n = 0;
  if (!naive_root(i128(a) * a + i128(b) * b, 2, n)) return false;
  if ((n + a) % 2 != 0) return false;
  long long c = 0, d = 0;
  if (!naive_root((n + a) / 2, 2, c) || !naive_root((n - a) / 2, 2, d)) return false;
  return 2 * c * d == b || -2 * c * d == b;
}

}  // namespace oracle
