#include "doctest.h"

#include "carterlink/cli.hpp"

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace carterlink;

static int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}) == 2);
  CHECK(run({"bogus"}) == 2);
  CHECK(run({"matrix"}) == 2);        // missing id
  CHECK(run({"matrix", "B4"}) == 2);  // bad id
  CHECK(run({"enumerate", "E6a1", "--format"}) == 2);
  CHECK(run({"verify"}) == 2);        // missing --table
  CHECK(run({"verify", "--table", "nonsense"}) == 2);
}

TEST_CASE("matrix command prints the prefactored inverse") {
  std::string text;
  CHECK(run({"matrix", "E6a1", "--inverse"}, &text) == 0);
  CHECK(text.find("1/3 *") != std::string::npos);
  std::string det;
  CHECK(run({"matrix", "A7", "--det"}, &det) == 0);
  CHECK(det.find("det = 8") != std::string::npos);
}

TEST_CASE("catalog json lists diagrams") {
  std::string text;
  CHECK(run({"catalog", "--max-rank", "4"}, &text) == 0);
  auto j = nlohmann::json::parse(text);
  CHECK(j.size() == 6); // A1, A2, A3, A4, D4, D4(a_1)
}

TEST_CASE("enumerate json round-trips byte-identically") {
  std::string first, second;
  CHECK(run({"enumerate", "D5a1", "--format", "json"}, &first) == 0);
  auto parsed = nlohmann::json::parse(first);
  std::string re = parsed.dump(1) + "\n";
  CHECK(run({"enumerate", "D5a1", "--format", "json"}, &second) == 0);
  CHECK(first == second);
  CHECK(re == first);
  CHECK(parsed.at("vertices").size() == 42);
  // rationals carry positive denominators in lowest terms
  for (const auto& part : parsed.at("components")) {
    CHECK(part.at("p").contains("num"));
    CHECK(part.at("p").at("den").get<std::string>()[0] != '-');
  }
}

TEST_CASE("dot output marks dotted edges dashed") {
  std::string text;
  CHECK(run({"catalog", "--max-rank", "4", "--format", "dot"}, &text) == 0);
  CHECK(text.find("style=dashed") != std::string::npos);
  std::string sys;
  CHECK(run({"enumerate", "D4", "--format", "dot"}, &sys) == 0);
  CHECK(sys.find("cluster_0") != std::string::npos); // loctet clusters
}

TEST_CASE("--out writes the payload to a file") {
  std::string path = "/tmp/carterlink_out_test.json";
  std::remove(path.c_str());
  CHECK(run({"enumerate", "A3", "--format", "json", "--out", path}) == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j.at("vertices").size() == 14);
  std::remove(path.c_str());
}

TEST_CASE("verify exits 0 on a passing table") {
  std::ostringstream out, err;
  CHECK(run_cli({"verify", "--table", "matrices"}, out, err) == 0);
  CHECK(out.str().find("PASS") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("weights and strata commands") {
  std::string text;
  CHECK(run({"weights", "E6", "b2"}, &text) == 0);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("size").get<int>() == 27);
  CHECK(run({"strata", "A3"}, &text) == 0);
  auto s = nlohmann::json::parse(text);
  CHECK(s.at("total_labels").get<int>() == 14);
}
