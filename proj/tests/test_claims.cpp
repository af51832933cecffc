#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fltlab/claims.hpp"
#include "fltlab/report.hpp"
#include "oracles.hpp"

using namespace fltlab;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fltlab_test_" + name)).string();
}

Params with(ClaimId id, std::vector<std::pair<std::string, std::string>> o, Profile p = Profile::Smoke) {
  return resolve_params(id, o, p);
}

std::string dump(const ClaimOutcome& o) {
  std::string s = outcome_line(o).dump();
  for (const auto& r : o.counterexamples) s += "\n" + record_to_json(r).dump();
  return s;
}

}  // namespace

TEST_CASE("registry") {
  const auto& all = list_claims();
  REQUIRE(all.size() == 19);
  CHECK(all.front().id == ClaimId::T1_FORWARD);
  CHECK(all.back().id == ClaimId::CONCL_XYZU_PAIRWISE);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(static_cast<std::size_t>(all[i].id) == i);
    CHECK(parse_claim_id(to_string(all[i].id)) == all[i].id);
    CHECK_FALSE(all[i].quote.empty());
    CHECK_FALSE(all[i].schema.empty());
    CHECK(all[i].smoke.size() == all[i].schema.size());
    CHECK(all[i].desk.size() == all[i].schema.size());
  }
  CHECK(claim_info(ClaimId::EULER_EKL).quote.find("has no solution in positive integers when k>h+l") !=
        std::string::npos);
  CHECK(claim_info(ClaimId::THM3_XYZU).quote.find("with xy = zu") != std::string::npos);
  CHECK_FALSE(parse_claim_id("NOPE"));
}

TEST_CASE("param validation") {
  CHECK_THROWS_AS(resolve_params(ClaimId::THM3_XYZU, {{"bogus", "1"}}), UsageError);
  CHECK_THROWS_AS(resolve_params(ClaimId::THM3_XYZU, {{"max", "abc"}}), UsageError);
  CHECK_THROWS_AS(resolve_params(ClaimId::THM3_XYZU, {{"max", "0"}}), UsageError);
  CHECK_THROWS_AS(resolve_params(ClaimId::THM3_XYZU, {{"n_min", "3"}, {"n_max", "2"}}), UsageError);
  CHECK_THROWS_AS(resolve_params(ClaimId::EULER_EKL, {{"h", "1"}, {"l", "2"}}), UsageError);
  const Params p = resolve_params(ClaimId::THM3_XYZU, {{"max", "12"}});
  CHECK(param(p, "max") == 12);
  CHECK(param(p, "n_min") == param(claim_info(ClaimId::THM3_XYZU).desk, "n_min"));
  CHECK_FALSE(schema_help(ClaimId::THM3_XYZU).empty());
}

TEST_CASE("cubic sweep holds and counts every admissible triple") {
  const Params p = resolve_params(ClaimId::COR1_CUBIC, {{"a_max", "30"}, {"b_max", "200"}, {"n_min", "3"}, {"n_max", "5"}});
  const auto o = run_claim(ClaimId::COR1_CUBIC, p);
  CHECK(o.status == ClaimStatus::HoldsUpToBound);
  std::uint64_t expected = 0;
  for (long long a = 1; a <= 30; ++a)
    for (long long b = -200; b <= 200; ++b)
      if (b != 0 && std::gcd(a, b) == 1) expected += 3;
  CHECK(o.stats.candidates_tested == expected);
  CHECK(o.stats.expected_candidates == ExactInt(expected));
}

TEST_CASE("alternative conjecture filters the Lander-Parkin solution") {
  const auto o = run_claim(ClaimId::ALT_CONJ, with(ClaimId::ALT_CONJ, {{"h", "4"}, {"k", "5"}, {"max", "150"}}));
  CHECK(o.status == ClaimStatus::HoldsUpToBound);
  CHECK(o.stats.filtered_count == 1);
  const auto e = run_claim(ClaimId::EULER_1769, with(ClaimId::EULER_1769, {{"h", "4"}, {"k", "5"}, {"max", "150"}}));
  CHECK(e.status == ClaimStatus::CounterexampleFound);
  REQUIRE(e.counterexample);
  CHECK(oracle::values(*e.counterexample) == oracle::Tuple{5, 27, 84, 110, 133, 144});
}

TEST_CASE("inapplicable parameters") {
  const auto o = run_claim(ClaimId::EULER_EKL, with(ClaimId::EULER_EKL, {{"h", "2"}, {"l", "1"}, {"k", "3"}}));
  CHECK(o.status == ClaimStatus::Inapplicable);
  CHECK_FALSE(o.reason.empty());
}

TEST_CASE("reducible quadratics") {
  const auto o = run_claim(ClaimId::COR_QUADRATIC,
                           with(ClaimId::COR_QUADRATIC, {{"a_max", "20"}, {"n_max", "6"}, {"include_excluded", "1"}}));
  CHECK(o.status == ClaimStatus::CounterexampleFound);
  REQUIRE(o.counterexample);
  CHECK(oracle::values(*o.counterexample) == oracle::Tuple{2, 3, 1, -6, 1});
  for (const auto& r : o.counterexamples) CHECK(r.var("n") == ExactInt(1));
  const auto strict = run_claim(ClaimId::COR_QUADRATIC,
                                with(ClaimId::COR_QUADRATIC, {{"a_max", "20"}, {"n_max", "6"}, {"include_excluded", "0"}}));
  CHECK(strict.status == ClaimStatus::HoldsUpToBound);
  CHECK(strict.stats.extra.at("excluded_n1_ab_even") == o.counterexamples.size());
}

TEST_CASE("polynomial bridge claims") {
  for (auto id : {ClaimId::T1_FORWARD, ClaimId::T1_CONVERSE, ClaimId::THM2_EQUIV, ClaimId::LEM0_PARITY}) {
    const auto o = run_claim(id, claim_info(id).smoke);
    CHECK_MESSAGE(o.status == ClaimStatus::HoldsUpToBound, to_string(id));
    CHECK(o.stats.expected_candidates == ExactInt(o.stats.candidates_tested));
  }
  const auto conv = run_claim(ClaimId::T1_CONVERSE, with(ClaimId::T1_CONVERSE, {{"n_min", "2"}, {"n_max", "2"}, {"max", "30"}}));
  CHECK(conv.stats.candidates_tested == 465);  // pairs x <= y <= 30
  CHECK(conv.stats.extra.at("triples") == 5);
  CHECK(conv.stats.extra.at("roundtrips") == 5);
}

TEST_CASE("outcomes do not depend on worker count") {
  for (auto id : {ClaimId::THM3_XYZU, ClaimId::EULER_EKL, ClaimId::COR_QUADRATIC, ClaimId::PRODUCT_SQUARES_ZI}) {
    const Params p = claim_info(id).smoke;
    const auto a = run_claim(id, p, {.jobs = 1});
    const auto b = run_claim(id, p, {.jobs = 3});
    const auto c = run_claim(id, p, {.jobs = 2, .chunks = 5});
    CHECK(dump(a) == dump(b));
    CHECK(dump(a) == dump(c));
  }
}

TEST_CASE("kill and resume reproduces the uninterrupted run") {
  for (auto id : {ClaimId::THM4_SYS3, ClaimId::COR_QUADRATIC, ClaimId::EULER_1769}) {
    const Params p = claim_info(id).smoke;
    const auto full = run_claim(id, p);
    for (std::size_t halt : {0u, 1u, 7u, 15u}) {
      const std::string path = temp_path(to_string(id) + "_" + std::to_string(halt));
      std::filesystem::remove(path);
      RunOptions first{.checkpoint_path = path, .halt_after_chunks = halt};
      CHECK_THROWS_AS(run_claim(id, p, first), RunInterrupted);
      CHECK(std::filesystem::exists(path) == (halt > 0));
      // A second interruption on the resumed run, then completion.
      RunOptions second{.checkpoint_path = path, .halt_after_chunks = 1};
      try {
        run_claim(id, p, second);
      } catch (const RunInterrupted&) {
      }
      const auto resumed = run_claim(id, p, {.jobs = 2, .checkpoint_path = path});
      CHECK_MESSAGE(dump(resumed) == dump(full), to_string(id) << " halt=" << halt);
      std::filesystem::remove(path);
    }
  }
}

TEST_CASE("stop flag interrupts between chunks") {
  std::atomic<bool> stop{true};
  const std::string path = temp_path("stop");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(run_claim(ClaimId::THM3_XYZU, claim_info(ClaimId::THM3_XYZU).smoke,
                            {.checkpoint_path = path, .stop = &stop}),
                  RunInterrupted);
  std::filesystem::remove(path);
}

TEST_CASE("checkpoint mismatch and roundtrip") {
  const std::string path = temp_path("mismatch");
  std::filesystem::remove(path);
  const Params p = claim_info(ClaimId::THM4_SYS3).smoke;
  CHECK_THROWS_AS(run_claim(ClaimId::THM4_SYS3, p, {.checkpoint_path = path, .halt_after_chunks = 3}), RunInterrupted);
  CHECK_THROWS_AS(run_claim(ClaimId::THM3_XYZU, claim_info(ClaimId::THM3_XYZU).smoke, {.checkpoint_path = path}),
                  std::runtime_error);
  CHECK_THROWS_AS(run_claim(ClaimId::THM4_SYS3, with(ClaimId::THM4_SYS3, {{"max", "14"}}), {.checkpoint_path = path}),
                  std::runtime_error);

  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const CheckpointFile cp = checkpoint_from_json(text);
  CHECK(cp.format_version == 1);
  CHECK(cp.claim == ClaimId::THM4_SYS3);
  CHECK(cp.params == p);
  CHECK(checkpoint_to_json(cp) == text);
  CHECK_THROWS(checkpoint_from_json("{}"));
  CHECK_THROWS(checkpoint_from_json("not json"));
  std::filesystem::remove(path);
}

TEST_CASE("smoke suite") {
  const auto outcomes = run_suite(Profile::Smoke);
  REQUIRE(outcomes.size() == 19);
  for (const auto& o : outcomes) {
    if (o.claim == ClaimId::COR_QUADRATIC) {
      CHECK(o.status == ClaimStatus::CounterexampleFound);
    } else {
      CHECK_MESSAGE(o.status == ClaimStatus::HoldsUpToBound, to_string(o.claim));
    }
    CHECK_MESSAGE(o.stats.expected_candidates == ExactInt(o.stats.candidates_tested), to_string(o.claim));
    for (const auto& r : o.counterexamples) CHECK(verify_record(r).empty());
  }
}
