#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = sgc::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sgc_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

}  // namespace

TEST_CASE("spectrum document for the worked example") {
  const std::string c3 = write_temp("c3.sg", "3\n0 1 +\n1 2 +\n0 2 +\n");
  const std::string p2 = write_temp("p2.sg", "2\n0 1 +\n");
  const Run r = run({"spectrum", "--matrix", "a", "--method", "proposition", c3, p2});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["matrix"] == "A");
  CHECK(doc["method"] == "proposition");
  const std::vector<std::pair<double, int>> want{
      {-std::sqrt(3.0), 2}, {-1.3723, 1}, {-1.0, 3}, {std::sqrt(3.0), 2}, {4.3723, 1}};
  REQUIRE(doc["spectrum"].size() == want.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(std::abs(doc["spectrum"][i]["value"].get<double>() - want[i].first) < 5e-4);
    CHECK(doc["spectrum"][i]["multiplicity"] == want[i].second);
    total += doc["spectrum"][i]["multiplicity"].get<std::size_t>();
  }
  CHECK(total == 9);
  CHECK(doc["inputs"][0]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

  // Values survive a serialisation round trip exactly.
  const json again = json::parse(json(doc).dump());
  CHECK(again["spectrum"][1]["value"].get<double>() == doc["spectrum"][1]["value"].get<double>());
}

TEST_CASE("balance reports an unbalanced corona of balanced inputs") {
  const std::string c3 = write_temp("c3b.sg", "3\n0 1 +\n1 2 +\n0 2 +\n");
  const std::string neg = write_temp("p2neg.sg", "2\n0 1 -\n");
  const Run r = run({"balance", c3, neg});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["g1"] == "balanced");
  CHECK(doc["g2"] == "balanced");
  CHECK(doc["corona"] == "unbalanced");
  CHECK(doc["agree"] == true);
}

TEST_CASE("other subcommands") {
  const std::string c3 = write_temp("c3c.sg", "3\n0 1 +\n1 2 +\n0 2 +\n");
  const std::string p2 = write_temp("p2c.sg", "2\n0 1 +\n");
  const std::string out_path = write_temp("out.sg", "");

  Run r = run({"corona", c3, p2, "-o", out_path});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["nodes"] == 9);
  std::ifstream in(out_path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "9");

  r = run({"stats", "--triads", c3, p2});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["triads"]["T0"] == 13);
  CHECK(json::parse(r.out)["edges"]["total"] == 18);

  r = run({"coronal", "--matrix", "q", c3});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["numerator"] == json::array({3}));
  CHECK(json::parse(r.out)["denominator"] == json::array({-4, 1}));

  r = run({"cospectral", "--matrix", "a", c3, c3});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["cospectral"] == true);

  r = run({"--unsigned", "stats", write_temp("u.sg", "2\n0 1\n"), write_temp("u1.sg", "1\n")});
  CHECK(r.status == 0);
}

TEST_CASE("usage and parse errors exit with status 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"spectrum", "--matrix", "z", "a", "b"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  const std::string bad = write_temp("bad.sg", "2\n0 2 +\n");
  const Run r = run({"coronal", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("index out of range, line 2") != std::string::npos);
  CHECK(run({"coronal", "/nonexistent/graph.sg"}).status == 2);
}

TEST_CASE("verify is reproducible and clean") {
  const Run a = run({"verify", "--trials", "40", "--seed", "7", "--max-n", "4"});
  const Run b = run({"verify", "--trials", "40", "--seed", "7", "--max-n", "4"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const json doc = json::parse(a.out);
  CHECK(doc["discrepancies"].empty());
  CHECK(doc["ok"] == true);
}

TEST_CASE("fnv digest") {
  CHECK(sgc::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(sgc::fnv1a64_hex("a") == "af63dc4c8601ec8c");
}
