#include "fltlab/powersum.hpp"

#include <algorithm>
#include <unordered_map>

namespace fltlab {

PowerSumInstance PowerSumInstance::make(unsigned k, std::vector<ExactInt> lhs, std::vector<ExactInt> rhs) {
  if (k == 0) throw UsageError("power-sum exponent must be >= 1");
  if (lhs.empty() || rhs.empty()) throw UsageError("power-sum instance needs terms on both sides");
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& t : *side) {
      if (t.sign() <= 0) throw UsageError("power-sum terms must be positive, got " + t.to_string());
    }
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return {k, std::move(lhs), std::move(rhs)};
}

std::vector<ExactInt> PowerSumInstance::terms() const {
  std::vector<ExactInt> all = lhs;
  all.insert(all.end(), rhs.begin(), rhs.end());
  return all;
}

IdentityVerdict verify_identity(unsigned k, const std::vector<ExactInt>& lhs, const std::vector<ExactInt>& rhs) {
  IdentityVerdict v;
  v.lhs_sum = ExactInt(0);
  v.rhs_sum = ExactInt(0);
  for (const auto& x : lhs) v.lhs_sum += pow(x, k);
  for (const auto& y : rhs) v.rhs_sum += pow(y, k);
  v.deficit = v.rhs_sum - v.lhs_sum;
  v.balanced = v.deficit.is_zero();
  return v;
}

IdentityVerdict verify_identity(const PowerSumInstance& inst) { return verify_identity(inst.k, inst.lhs, inst.rhs); }

std::string to_string(RecoveryStatus s) {
  switch (s) {
    case RecoveryStatus::Recovered:
      return "recovered";
    case RecoveryStatus::NonPositiveDeficit:
      return "non-positive-deficit";
    case RecoveryStatus::NotPerfectPower:
      return "not-perfect-power";
  }
  return "?";
}

Recovery recover_missing_term(const PartialInstance& partial) {
  if (partial.k == 0) throw UsageError("power-sum exponent must be >= 1");
  int unknown_side = -1;
  std::size_t unknowns = 0;
  ExactInt lhs(0), rhs(0);
  for (int side = 0; side < 2; ++side) {
    const auto& terms = side == 0 ? partial.lhs : partial.rhs;
    for (const auto& t : terms) {
      if (!t) {
        ++unknowns;
        unknown_side = side;
        continue;
      }
      if (t->sign() <= 0) throw UsageError("known terms must be positive");
      (side == 0 ? lhs : rhs) += pow(*t, partial.k);
    }
  }
  if (unknowns != 1) throw UsageError("exactly one slot must be unknown");
  Recovery out;
  out.deficit = unknown_side == 0 ? rhs - lhs : lhs - rhs;
  if (out.deficit.sign() <= 0) {
    out.status = RecoveryStatus::NonPositiveDeficit;
    return out;
  }
  const KthRoot r = integer_kth_root(out.deficit, partial.k);
  if (!r.exact) {
    out.status = RecoveryStatus::NotPerfectPower;
    return out;
  }
  out.status = RecoveryStatus::Recovered;
  out.term = r.root;
  return out;
}

std::string to_string(CoprimeMode m) { return m == CoprimeMode::Pairwise ? "pairwise" : "none"; }

ExactInt binomial(const ExactInt& n, unsigned k) {
  if (n.sign() < 0 || ExactInt(k) > n) return ExactInt(0);
  ExactInt r(1);
  for (unsigned i = 0; i < k; ++i) r = r * (n - ExactInt(i)) / ExactInt(i + 1);
  return r;
}

OuterRange equal_sums_outer_range(const EqualSumsQuery& q) { return {1, q.max}; }

ExactInt equal_sums_space_size(const EqualSumsQuery& q) {
  return binomial(ExactInt(q.max + q.h - 1), q.h) * binomial(ExactInt(q.max + q.l - 1), q.l);
}

namespace {

struct I128Hash {
  std::size_t operator()(__int128 v) const noexcept {
    const auto lo = static_cast<std::uint64_t>(v);
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

template <class Sum>
struct SumTraits;

template <>
struct SumTraits<__int128> {
  using Hash = I128Hash;
  static __int128 power(std::int64_t v, unsigned k) { return *checked_pow(v, k); }
};

template <>
struct SumTraits<ExactInt> {
  using Hash = std::hash<ExactInt>;
  static ExactInt power(std::int64_t v, unsigned k) { return pow(ExactInt(static_cast<long long>(v)), k); }
};

// Calls fn for every nondecreasing tuple of length len over [lo, hi], with
// the first element restricted to [first_lo, first_hi].
template <class Fn>
void for_each_multiset(std::vector<std::uint32_t>& buf, std::size_t pos, std::size_t len, std::int64_t lo,
                       std::int64_t hi, Fn&& fn) {
  if (pos == len) {
    fn();
    return;
  }
  for (std::int64_t v = lo; v <= hi; ++v) {
    buf[pos] = static_cast<std::uint32_t>(v);
    for_each_multiset(buf, pos + 1, len, v, hi, fn);
  }
}

template <class Sum>
class MitmTable final : public EqualSumsSearch::Impl {
 public:
  MitmTable(const EqualSumsQuery& q, std::size_t table_cap) : q_(q) {
    using Traits = SumTraits<Sum>;
    const std::int64_t max = q.max;
    pw_.resize(static_cast<std::size_t>(max) + 1);
    for (std::int64_t v = 1; v <= max; ++v) pw_[static_cast<std::size_t>(v)] = Traits::power(v, q.k);
    left_len_ = (q.h + 1) / 2;
    rest_len_ = q.h - left_len_;

    // Left half: nondecreasing left_len-tuples, flattened.
    last_le_.assign(static_cast<std::size_t>(max) + 1, 0);
    std::vector<std::uint32_t> buf(left_len_);
    for_each_multiset(buf, 0, left_len_, 1, max, [&] {
      Sum s{};
      for (auto v : buf) s += pw_[v];
      left_terms_.insert(left_terms_.end(), buf.begin(), buf.end());
      left_sums_.push_back(s);
      ++last_le_[buf.back()];
    });
    for (std::size_t v = 1; v < last_le_.size(); ++v) last_le_[v] += last_le_[v - 1];

    const std::size_t left_count = left_sums_.size();
    if (left_count <= table_cap) {
      table_.reserve(left_count);
      for (std::uint32_t i = 0; i < left_count; ++i) table_[left_sums_[i]].push_back(i);
    } else {
      ordered_ = true;
      order_.resize(left_count);
      for (std::uint32_t i = 0; i < left_count; ++i) order_[i] = i;
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return left_sums_[a] < left_sums_[b]; });
    }
  }

  bool ordered_join() const override { return ordered_; }

  EqualSumsResult run(std::optional<OuterRange> restrict) const override {
    const EqualSumsQuery& q = q_;
    const std::int64_t max = q.max;
    const std::size_t left_len = left_len_;
    const std::size_t rest_len = rest_len_;
    EqualSumsResult out;
    out.used_ordered_join = ordered_;

    auto for_each_match = [&](const Sum& key, auto&& fn) {
      if (!ordered_) {
        auto it = table_.find(key);
        if (it == table_.end()) return;
        for (auto id : it->second) fn(id);
      } else {
        auto lo = std::lower_bound(order_.begin(), order_.end(), key,
                                   [&](std::uint32_t id, const Sum& k) { return left_sums_[id] < k; });
        for (; lo != order_.end() && left_sums_[*lo] == key; ++lo) fn(*lo);
      }
    };

    OuterRange outer{1, max};
    if (restrict) outer = outer.intersect(*restrict);

    std::vector<std::uint32_t> zs(rest_len);
    std::vector<std::uint32_t> ys(q.l);
    std::vector<ExactInt> lhs_vals(q.h);
    std::vector<ExactInt> rhs_vals(q.l);

    auto probe = [&] {
      const std::uint32_t bound = rest_len > 0 ? zs[0] : static_cast<std::uint32_t>(max);
      out.search.candidates += last_le_[bound];
      Sum key{};
      for (auto y : ys) key += pw_[y];
      for (auto z : zs) key -= pw_[z];
      if (!(key > Sum{})) return;
      for_each_match(key, [&](std::uint32_t id) {
        const std::uint32_t* lt = &left_terms_[static_cast<std::size_t>(id) * left_len];
        if (lt[left_len - 1] > bound) return;
        for (auto y : ys) {
          for (std::size_t i = 0; i < left_len; ++i)
            if (lt[i] == y) return void(++out.trivial_excluded);
          for (auto z : zs)
            if (z == y) return void(++out.trivial_excluded);
        }
        for (std::size_t i = 0; i < left_len; ++i) lhs_vals[i] = ExactInt(lt[i]);
        for (std::size_t i = 0; i < rest_len; ++i) lhs_vals[left_len + i] = ExactInt(zs[i]);
        for (std::size_t i = 0; i < q.l; ++i) rhs_vals[i] = ExactInt(ys[i]);
        std::vector<std::string> profile{"no_trivial_cancellation"};
        if (q.mode == CoprimeMode::Pairwise) {
          std::vector<ExactInt> all = lhs_vals;
          all.insert(all.end(), rhs_vals.begin(), rhs_vals.end());
          if (!is_pairwise_coprime(all)) {
            ++out.search.filtered;
            return;
          }
          profile.push_back("pairwise_coprime");
        }
        std::vector<std::pair<std::string, ExactInt>> vars{{"k", ExactInt(q.k)}};
        for (std::size_t i = 0; i < q.h; ++i) vars.emplace_back("x" + std::to_string(i + 1), lhs_vals[i]);
        for (std::size_t i = 0; i < q.l; ++i) vars.emplace_back("y" + std::to_string(i + 1), rhs_vals[i]);
        out.search.records.push_back(make_record(Equation::EqualSums, std::move(vars), std::move(profile)));
      });
    };

    if (rest_len > 0) {
      for (std::int64_t first = outer.lo; first <= outer.hi; ++first) {
        zs[0] = static_cast<std::uint32_t>(first);
        for_each_multiset(zs, 1, rest_len, first, max, [&] {
          for_each_multiset(ys, 0, q.l, 1, max, probe);
        });
      }
    } else {
      for (std::int64_t first = outer.lo; first <= outer.hi; ++first) {
        ys[0] = static_cast<std::uint32_t>(first);
        for_each_multiset(ys, 1, q.l, first, max, probe);
      }
    }
    out.search.finalize();
    return out;
  }

 private:
  EqualSumsQuery q_;
  std::vector<Sum> pw_;
  std::size_t left_len_ = 1;
  std::size_t rest_len_ = 0;
  std::vector<std::uint32_t> left_terms_;
  std::vector<Sum> left_sums_;
  std::vector<std::uint64_t> last_le_;
  std::unordered_map<Sum, std::vector<std::uint32_t>, typename SumTraits<Sum>::Hash> table_;
  std::vector<std::uint32_t> order_;
  bool ordered_ = false;
};

}  // namespace

EqualSumsSearch::EqualSumsSearch(const EqualSumsQuery& q, std::size_t table_cap) : query_(q) {
  if (q.l < 1 || q.h < q.l) throw UsageError("equal-sums search needs h >= l >= 1");
  if (q.h + q.l > 6) throw UsageError("equal-sums search supports h + l <= 6");
  if (q.k < 1) throw UsageError("equal-sums exponent must be >= 1");
  if (q.max < 1 || q.max > 100'000) throw UsageError("equal-sums bound must be in [1, 100000]");
  const ExactInt worst = ExactInt(static_cast<long long>(q.h + q.l)) * pow(ExactInt(q.max), q.k);
  if (worst.bit_length() < 126) {
    impl_ = std::make_shared<MitmTable<__int128>>(q, table_cap);
  } else {
    impl_ = std::make_shared<MitmTable<ExactInt>>(q, table_cap);
  }
}

EqualSumsResult EqualSumsSearch::run(std::optional<OuterRange> outer) const { return impl_->run(outer); }

bool EqualSumsSearch::ordered_join() const { return impl_->ordered_join(); }

EqualSumsResult search_equal_sums(const EqualSumsQuery& q, const EqualSumsOptions& opts) {
  return EqualSumsSearch(q, opts.table_cap).run(opts.outer);
}

}  // namespace fltlab
