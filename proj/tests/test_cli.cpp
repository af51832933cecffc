#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "fltlab/cli.hpp"

using namespace fltlab;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flt-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<nlohmann::ordered_json> lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::ordered_json::parse(line));
  return out;
}

std::vector<ExactInt> V(std::initializer_list<long long> xs) {
  std::vector<ExactInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::size_t error_position(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const PolyParseError& e) {
    return e.position();
  }
  FAIL("no error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_poly") {
  CHECK(parse_poly("x^3 - 481*x + 3600").poly.coeffs() == V({1, 0, -481, 3600}));
  CHECK(parse_poly("x").poly.coeffs() == V({1, 0}));
  CHECK(parse_poly("  3600 + x^3-481x ").poly.coeffs() == V({1, 0, -481, 3600}));
  CHECK(parse_poly("x^3 − 7*x + 6").poly.coeffs() == V({1, 0, -7, 6}));
  CHECK(parse_poly("x^2 - 1").source == "x^2 - 1");
  CHECK(parse_poly("x^2 + 123456789012345678901234567890").poly.constant().to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_poly("2*x^3 + 1"), PolyParseError);
  CHECK_THROWS_AS(parse_poly(""), PolyParseError);
  CHECK_THROWS_AS(parse_poly("   "), PolyParseError);
  CHECK_THROWS_AS(parse_poly("5"), PolyParseError);
  CHECK_THROWS_AS(parse_poly("x^2 + x^2"), PolyParseError);
  CHECK_THROWS_AS(parse_poly("x^2 + "), PolyParseError);
  CHECK_THROWS_AS(parse_poly("x^^2"), PolyParseError);
  CHECK(error_position("x^2 + x^2") == 6);
  CHECK(error_position("x^2 + y") == 6);
  try {
    parse_poly("x^2 + y");
  } catch (const PolyParseError& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("parse_poly inverts rendering") {
  for (long long a = -5; a <= 5; ++a)
    for (long long b = -5; b <= 5; ++b)
      for (long long c = -5; c <= 5; ++c) {
        const MonicIntPoly p(V({1, a, b, c}));
        CHECK(parse_poly(p.to_string()).poly == p);
      }
  const MonicIntPoly big(V({1, 0, 0, 0, 0, -1}));
  CHECK(parse_poly(big.to_string()).poly == big);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"claim", "run", "NOPE"}).code == 1);
  CHECK(run({"claim", "run", "THM3_XYZU", "--param", "max=0"}).code == 1);
  CHECK(run({"claim", "run", "THM3_XYZU", "--param", "n=2", "--param", "max=50"}).code == 0);
  CHECK(run({"search", "product_form", "--exponent", "2", "--bound", "20", "--coprime", "pairwise"}).code == 3);
  CHECK(run({"search", "fermat", "--exponent", "3", "--bound", "30"}).code == 0);
  CHECK(run({"search", "fermat", "--exponent", "3"}).code == 1);
  CHECK(run({"poly", "analyze", "2*x + 1"}).code == 1);
  CHECK(run({"verify-appendix"}).code == 0);
  CHECK(run({"claim", "list"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("usage errors print the schema") {
  const Run r = run({"claim", "run", "THM3_XYZU", "--param", "bogus=1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("max") != std::string::npos);
}

TEST_CASE("verify-appendix json") {
  const Run r = run({"verify-appendix", "--json"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  for (const auto& j : ls) {
    CHECK(j["schema"] == 1);
    CHECK(j["type"] == "appendix_line");
    CHECK(j.begin().key() == "schema");
  }
  CHECK(ls[1]["verdict"] == "Balanced");
  CHECK(ls[1]["coprime_witness"] == nlohmann::ordered_json::array({"95800", "414560"}));
  CHECK(ls[4]["verdict"] == "Unbalanced");
  bool found = false;
  for (const auto& rec : ls[4]["recoveries"])
    if (rec["slot"] == 3) {
      CHECK(rec["term"] == "110");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("claim run json") {
  const Run r = run({"claim", "run", "THM3_XYZU", "--param", "n=2", "--param", "max=50", "--json"});
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  const auto& o = ls[0];
  CHECK(o["type"] == "outcome");
  CHECK(o["status"] == "HoldsUpToBound");
  CHECK(o["params"]["n_min"] == "2");
  CHECK(o["params"]["n_max"] == "2");
  CHECK(o["stats"]["candidates_tested"] == o["stats"]["expected_candidates"]);
  CHECK(o["counterexample"].is_null());
  CHECK(o["stats"].find("duration_seconds") == o["stats"].end());
}

TEST_CASE("search json") {
  const Run r = run({"search", "product_form", "--exponent", "2", "--bound", "20", "--coprime", "pairwise", "--json"});
  const auto ls = lines(r.out);
  REQUIRE(ls.size() >= 1);
  const auto& s = ls[0];
  CHECK(s["type"] == "solution");
  CHECK(s["family"] == "product_form");
  CHECK(s["claim"].is_null());
  CHECK(s["vars"]["x1"] == "9");
  CHECK(s["vars"]["x2"] == "16");
  CHECK(s["vars"]["x3"] == "60");
  const Run pair = run({"search", "pair_system", "--exponent", "1", "--bound", "10", "--json"});
  CHECK(pair.code == 3);
  CHECK(pair.out.find(R"("vars":{"n":"1","X":"2","Y":"3","Xp":"6","Yp":"1"})") != std::string::npos);
  const Run es = run({"search", "equal_sums", "--h", "4", "--l", "1", "--exponent", "5", "--bound", "150", "--json"});
  CHECK(es.code == 3);
  CHECK(es.out.find(R"("x3":"110")") != std::string::npos);
}

TEST_CASE("poly analyze") {
  const Run r = run({"poly", "analyze", "x^3 - 481*x + 3600", "--fermat-n", "2", "--json"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0]["type"] == "poly_analysis");
  const std::string text = ls[0].dump();
  CHECK(text.find("\"-25\"") != std::string::npos);
  const Run human = run({"poly", "analyze", "x^3 - 2*x + 1"});
  CHECK(human.out.find("x^2 + x - 1") != std::string::npos);
}

TEST_CASE("suite output is byte identical across runs and worker counts") {
  const Run a = run({"claim", "suite", "--profile", "smoke", "--json"});
  const Run b = run({"claim", "suite", "--profile", "smoke", "--json", "--jobs", "3"});
  ::setenv("FLT_LAB_JOBS", "2", 1);
  const Run c = run({"claim", "suite", "--profile", "smoke", "--json"});
  ::setenv("FLT_LAB_JOBS", "zero", 1);
  const Run bad = run({"claim", "list"});
  ::unsetenv("FLT_LAB_JOBS");
  CHECK(a.code == 3);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(lines(a.out).size() >= 19);
  CHECK(bad.code == 0);  // list takes no jobs
  ::setenv("FLT_LAB_JOBS", "zero", 1);
  CHECK(run({"claim", "run", "THM3_XYZU"}).code == 1);
  ::unsetenv("FLT_LAB_JOBS");
}

TEST_CASE("checkpointed cli run resumes to identical output") {
  const std::string path = (std::filesystem::temp_directory_path() / "fltlab_cli_ckpt.json").string();
  std::filesystem::remove(path);
  const Run full = run({"claim", "run", "THM4_SYS3", "--profile", "smoke", "--json"});
  const Run halted = run({"claim", "run", "THM4_SYS3", "--profile", "smoke", "--json", "--checkpoint", path,
                          "--halt-after-chunks", "4"});
  CHECK(halted.code == 2);
  CHECK(std::filesystem::exists(path));
  const Run resumed = run({"claim", "run", "THM4_SYS3", "--profile", "smoke", "--json", "--checkpoint", path});
  CHECK(resumed.code == full.code);
  CHECK(resumed.out == full.out);
  std::filesystem::remove(path);
}
