#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "fltlab/diophantine.hpp"
#include "oracles.hpp"

using namespace fltlab;
using oracle::Tuple;
using oracle::values;

namespace {

SearchBounds B(std::int64_t max, unsigned n) { return {ExactInt(max), n}; }

std::vector<Tuple> golden(const std::string& name) {
  std::ifstream in(std::string(FLT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<Tuple> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Tuple t;
    long long v;
    while (ss >> v) t.push_back(v);
    rows.push_back(t);
  }
  return rows;
}

using Search = std::function<SearchResult(std::optional<OuterRange>)>;

// Runs the search on P contiguous pieces, merges, and compares with the single run.
void check_partitions(const std::string& label, const OuterRange& range, const Search& fn) {
  const SearchResult whole = fn(std::nullopt);
  for (std::size_t parts : {1, 2, 7}) {
    SearchResult merged;
    for (const auto& piece : partition(range, parts)) merged.merge(fn(piece));
    merged.finalize();
    CHECK_MESSAGE(merged.records == whole.records, label << " P=" << parts);
    CHECK_MESSAGE(merged.candidates == whole.candidates, label << " P=" << parts);
    CHECK_MESSAGE(merged.filtered == whole.filtered, label << " P=" << parts);
  }
  const SearchResult threaded = run_partitioned(range, 7, 3, [&](const OuterRange& r) { return fn(r); });
  CHECK_MESSAGE(threaded.records == whole.records, label << " threaded");
}

bool sorted_unique(const std::vector<SolutionRecord>& recs) {
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (!record_less(recs[i - 1], recs[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("partition") {
  const auto p = partition({1, 10}, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0].lo == 1);
  CHECK(p.back().hi == 10);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i].lo == p[i - 1].hi + 1);
  CHECK(partition({1, 2}, 7).size() == 2);
  CHECK(partition({1, 0}, 3).empty());
}

TEST_CASE("fermat triples") {
  auto r = search_fermat_triples(B(30, 2), true);
  CHECK(values(r.records) == std::vector<Tuple>{{2, 3, 4, 5}, {2, 5, 12, 13}, {2, 7, 24, 25}, {2, 8, 15, 17}, {2, 20, 21, 29}});
  CHECK(search_fermat_triples(B(100, 3), false).records.empty());
  CHECK(values(search_fermat_triples(B(10, 2), false).records) == std::vector<Tuple>{{2, 3, 4, 5}, {2, 6, 8, 10}});
  for (unsigned n = 1; n <= 3; ++n)
    for (bool prim : {false, true}) {
      r = search_fermat_triples(B(30, n), prim);
      CHECK(values(r.records) == oracle::fermat(n, 30, prim));
      CHECK(ExactInt(r.candidates) == fermat_space_size(30));
      CHECK(sorted_unique(r.records));
      for (const auto& rec : r.records) CHECK(verify_record(rec).empty());
      check_partitions("fermat", {1, 30}, [&](auto o) { return search_fermat_triples(B(30, n), prim, o); });
    }
}

TEST_CASE("pair system") {
  CHECK(search_pair_system(B(50, 2)).records.empty());
  CHECK(search_pair_system(B(30, 3)).records.empty());
  const auto one = values(search_pair_system(B(10, 1)).records);
  CHECK(std::find(one.begin(), one.end(), Tuple{1, 2, 3, 6, 1}) != one.end());
  for (unsigned n = 1; n <= 3; ++n) {
    const auto r = search_pair_system(B(30, n));
    CHECK(values(r.records) == oracle::pair_system(n, 30));
    CHECK(ExactInt(r.candidates) == pair_system_space_size(30));
    check_partitions("pair", {1, 30}, [&](auto o) { return search_pair_system(B(30, n), o); });
  }
  CHECK_THROWS_AS(validate(PairSystem{2, 4, 8, 1}), UsageError);
  CHECK_THROWS_AS(validate(PairSystem{2, 3, 5, 1}), UsageError);
}

TEST_CASE("parity report") {
  auto p = parity_report({3, 5, 15, 1}, 2);
  CHECK(p.lhs == ExactInt(34));
  CHECK(p.rhs == ExactInt(224));
  CHECK(p.lhs_mod4 == 2);
  CHECK(p.rhs_mod4 == 0);
  CHECK(p.obstructed);
  CHECK(p.xy_mod2 == ExactInt(1));
  CHECK(p.counts[2].plus_one == 1);   // 15 = 3 * 5
  CHECK(p.counts[2].minus_one == 1);
  p = parity_report({2, 3, 6, 1}, 2);
  CHECK(p.xy_mod2 == ExactInt(0));
  CHECK(p.lhs_mod4 == 1);
  CHECK(p.rhs_mod4 == 3);
  CHECK(p.obstructed);
  CHECK(p.counts[0].two == 1);
  p = parity_report({2, 3, 6, 1}, 1);
  CHECK(p.lhs == p.rhs);
  CHECK_FALSE(p.obstructed);
}

TEST_CASE("quadruple") {
  CHECK(search_quadruple(B(50, 2), QuadMode::PairsXY_ZU, true).records.empty());
  const auto sq = values(search_quadruple(B(10, 2), QuadMode::PairsXY_ZU, false).records);
  CHECK(std::find(sq.begin(), sq.end(), Tuple{2, 1, 2, 2, 3}) != sq.end());
  // gcd(6, 8) = 2, so 1 + 216 + 512 = 729 only passes the weaker mode.
  const auto cube = values(search_quadruple(B(60, 3), QuadMode::PairsXY_ZU, false).records);
  CHECK(std::find(cube.begin(), cube.end(), Tuple{3, 1, 6, 8, 9}) != cube.end());
  const auto cube_pw = values(search_quadruple(B(60, 3), QuadMode::FullyPairwise, false).records);
  CHECK(std::find(cube_pw.begin(), cube_pw.end(), Tuple{3, 1, 6, 8, 9}) == cube_pw.end());
  for (unsigned n = 1; n <= 3; ++n)
    for (auto mode : {QuadMode::PairsXY_ZU, QuadMode::FullyPairwise})
      for (bool xyzu : {false, true}) {
        const auto r = search_quadruple(B(30, n), mode, xyzu);
        CHECK_MESSAGE(values(r.records) == oracle::quadruple(n, 30, mode == QuadMode::FullyPairwise, xyzu),
                      "n=" << n << " mode=" << to_string(mode) << " xyzu=" << xyzu);
        CHECK(ExactInt(r.candidates) == quadruple_space_size(30, mode, xyzu));
        check_partitions("quadruple", {1, 30}, [&](auto o) { return search_quadruple(B(30, n), mode, xyzu, o); });
      }
}

TEST_CASE("system with cubes") {
  CHECK(search_sys3(B(30, 4)).records.empty());
  CHECK(search_sys3(B(20, 3)).records.empty());
  // x1 + x2 + x3 = 0 branch: x4^n = x1 x2 (x1 + x2) = -x1 x2 x3.
  const auto one = values(search_sys3(B(10, 1)).records);
  CHECK(std::find(one.begin(), one.end(), Tuple{1, -3, 1, 2, 6}) != one.end());
  for (unsigned n = 1; n <= 4; ++n) {
    const auto r = search_sys3(B(30, n));
    CHECK_MESSAGE(values(r.records) == oracle::sys3(n, 30), "n=" << n);
    CHECK(ExactInt(r.candidates) == sys3_space_size(30));
    check_partitions("sys3", sys3_outer_range(30), [&](auto o) { return search_sys3(B(30, n), o); });
  }
}

TEST_CASE("product form") {
  CHECK(search_product_form(3, 200).records.empty());
  CHECK(search_product_form(4, 200).records.empty());
  CHECK(values(search_product_form(2, 20).records) == std::vector<Tuple>{{2, 9, 16, 60}});
  for (unsigned n = 1; n <= 4; ++n)
    for (auto mode : {CoprimeMode::None, CoprimeMode::Pairwise}) {
      const auto r = search_product_form(n, 30, mode);
      CHECK(values(r.records) == oracle::product_form(n, 30, mode == CoprimeMode::Pairwise));
      CHECK(ExactInt(r.candidates) == product_form_space_size(30));
      check_partitions("product_form", {1, 30}, [&](auto o) { return search_product_form(n, 30, mode, o); });
    }
}

TEST_CASE("product of squares over Z") {
  CHECK(search_product_squares(300, Ring::Z).records.empty());
  CHECK(search_product_squares(5, Ring::Z).records.empty());
  const auto r = search_product_squares(30, Ring::Z);
  CHECK(values(r.records) == oracle::product_squares_z(30));
  CHECK(ExactInt(r.candidates) == product_squares_space_size(30, Ring::Z));
  check_partitions("squares_z", product_squares_outer_range(30, Ring::Z),
                   [&](auto o) { return search_product_squares(30, Ring::Z, o); });
}

TEST_CASE("product of squares over Z[i]") {
  CHECK(search_product_squares(50, Ring::GaussianZ).records.empty());
  const auto ball = gaussian_ball(30);
  // Brute force over every pair in the ball with the half-norm square test.
  std::size_t square_pairs = 0, coprime_square_pairs = 0;
  for (const auto& x1 : ball)
    for (const auto& x2 : ball) {
      const GaussianInt p = x1 * x2 * (x1 * x1 + x2 * x2);
      if (p.is_zero()) continue;
      if (!oracle::gaussian_square(*p.re.to_int64(), *p.im.to_int64())) continue;
      ++square_pairs;
      if (gaussian_gcd(x1, x2).is_unit()) ++coprime_square_pairs;
    }
  CHECK(coprime_square_pairs == 0);
  const auto r = search_product_squares(30, Ring::GaussianZ);
  CHECK(r.records.empty());
  CHECK((r.filtered == 0) == (square_pairs == 0));
  CHECK(ExactInt(r.candidates) == product_squares_space_size(30, Ring::GaussianZ));
  check_partitions("squares_zi", product_squares_outer_range(30, Ring::GaussianZ),
                   [&](auto o) { return search_product_squares(30, Ring::GaussianZ, o); });
}

TEST_CASE("gaussian orbit canonicalization") {
  const auto ball = gaussian_ball(10);
  for (const auto& x1 : ball)
    for (const auto& x2 : ball) {
      const auto c = canonical_gaussian_pair(x1, x2);
      CHECK(canonical_gaussian_pair(c.first, c.second) == c);
      // Invariant under the joint unit i, a sign change and the swap.
      const GaussianInt i{0, 1};
      CHECK(canonical_gaussian_pair(x1 * i, x2 * i) == c);
      CHECK(canonical_gaussian_pair(-x1, x2) == c);
      CHECK(canonical_gaussian_pair(x2, x1) == c);
    }
}

TEST_CASE("euler product") {
  CHECK(search_euler_product(4, 60).records.empty());
  const auto one = values(search_euler_product(1, 10).records);
  CHECK(std::find(one.begin(), one.end(), Tuple{1, 1, 5, 7, 455}) != one.end());
  std::vector<Tuple> want;
  for (auto row : golden("euler_product_n1_max12.txt")) {
    row.insert(row.begin(), 1);
    want.push_back(row);
  }
  CHECK(values(search_euler_product(1, 12).records) == want);
  CHECK(golden("euler_product_n2_max30.txt").empty());
  CHECK(search_euler_product(2, 30).records.empty());
  for (unsigned n = 1; n <= 4; ++n) {
    const auto r = search_euler_product(n, 30);
    CHECK(values(r.records) == oracle::euler_product(n, 30));
    CHECK(ExactInt(r.candidates) == euler_product_space_size(30));
    check_partitions("euler_product", {1, 30}, [&](auto o) { return search_euler_product(n, 30, o); });
  }
}

TEST_CASE("quadratic irreducibility") {
  const auto r = search_quadratic_irreducibility(20, 6);
  const auto got = values(r.records);
  CHECK(got == oracle::quadratic(20, 6));
  CHECK(std::find(got.begin(), got.end(), Tuple{2, 3, 1, -6, 1}) != got.end());
  for (const auto& t : got) {
    CHECK(t[2] == 1);
    CHECK((t[0] * t[1]) % 2 == 0);
  }
  CHECK(std::none_of(got.begin(), got.end(), [](const Tuple& t) { return t[0] == 1 && t[1] == 2; }));
  CHECK(ExactInt(r.candidates) == quadratic_space_size(20, 6));
  CHECK(values(search_quadratic_irreducibility(30, 4).records) == oracle::quadratic(30, 4));
  check_partitions("quadratic", {1, 30}, [&](auto o) { return search_quadratic_irreducibility(30, 4, o); });
}

TEST_CASE("records re-verify and reject tampering") {
  auto rec = search_product_form(2, 20).records.at(0);
  CHECK(verify_record(rec).empty());
  rec.vars.back().second = ExactInt(61);
  CHECK_FALSE(verify_record(rec).empty());
  CHECK_THROWS(make_record(Equation::Fermat, {{"n", 2}, {"x", 3}, {"y", 4}, {"z", 6}}));
}

TEST_CASE("bounds validation") {
  CHECK_THROWS_AS(search_fermat_triples(B(0, 2), false), UsageError);
  CHECK_THROWS_AS(B(0, 1).max(), UsageError);
}
