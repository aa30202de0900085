#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "germcat/error.hpp"
#include "germcat/io/request.hpp"

using namespace germcat;
using io::Json;

namespace {

namespace fs = std::filesystem;

std::vector<fs::path> files_in(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Json read(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

std::string pointer_of(const Json& j) {
  try {
    (void)io::parse_request(j);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "(parsed)";
}

}  // namespace

TEST_CASE("every fixture is already in canonical form") {
  const auto files = files_in(GERMCAT_FIXTURE_DIR);
  REQUIRE(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const auto j = read(f);
    const auto r = io::parse_request(j);
    CHECK(io::to_json(r) == j);
    CHECK(io::to_json(io::parse_request(io::to_json(r))) == io::to_json(r));
  }
}

TEST_CASE("invalid fixtures are schema errors") {
  const auto files = files_in(fs::path(GERMCAT_FIXTURE_DIR) / "invalid");
  REQUIRE(!files.empty());
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    CHECK_THROWS_AS((void)io::parse_request(read(f)), SchemaError);
  }
}

TEST_CASE("canonicalization sorts subsets and drops defaults") {
  const auto r = io::parse_request(Json::parse(R"({"command": "check-filter", "poset": {"powerset": ["a", "b"]},
                                                   "subset": ["{a,b}", "{a}", "{a,b}"]})"));
  CHECK(io::to_json(r)["subset"] == Json::parse(R"(["{a}", "{a,b}"])"));

  const auto q = io::parse_request(Json::parse(R"({"command": "quotient", "filter": "minimal",
      "base": {"enriched": {"index": [1], "dim_bound": 1, "components": [{"category": {"cyclic": 2}, "group_order": 1}]}}})"));
  CHECK(io::to_json(q)["base"]["enriched"]["index"] == Json::parse(R"(["1"])"));
  CHECK(!io::to_json(q)["base"]["enriched"]["components"][0].contains("group_order"));

  const auto p = io::parse_request(Json::parse(R"({"command": "check-filter", "subset": ["x"],
      "poset": {"elements": ["x", "y"], "leq": [["x", "x"], ["x", "y"]]}})"));
  CHECK(io::to_json(p)["poset"] == Json::parse(R"({"elements": ["x", "y"], "leq": [["x", "y"]]})"));
}

TEST_CASE("schema errors point at the offending field") {
  CHECK(pointer_of(Json::parse(R"({"command": 3})")) == "/command");
  CHECK(pointer_of(Json::parse(R"({"command": "nno-witness"})")) == "/M");
  CHECK(pointer_of(Json::parse(R"({"command": "nno-witness", "M": -1})")) == "/M");
  CHECK(pointer_of(Json::parse(R"({"command": "nno-witness", "M": 3, "extra": 1})")) == "/extra");
  CHECK(pointer_of(Json::parse(R"({"command": "check-filter", "poset": {"powerset": ["a"]}, "subset": ["{}", "{b}"]})")) ==
        "/subset/1");
  CHECK(pointer_of(Json::parse(R"({"command": "los-check", "index": ["1", "2"], "filter": "minimal",
      "f": [{"source": 1, "target": 1, "map": [0]}, {"source": 2, "target": 1, "map": [0, 1]}]})")) == "/f/1/map/1");
  CHECK(pointer_of(Json::parse(R"({"command": "quotient", "base": {"power": ["a", "b"]},
      "filter": {"members": ["{a}"]}, "objects": [[1, 1]]})")) == "/filter");
  CHECK(pointer_of(Json::parse(R"({"command": "rlp-check", "generators": {"cartesian": 2},
      "target": {"simplex": 1, "dim_bound": 2}})")) == "/generators/cartesian");
  CHECK(pointer_of(Json::parse(R"({"command": "rlp-check", "generators": {"horn": 3},
      "target": {"simplex": 1, "dim_bound": 2}})")) == "/target/dim_bound");
  CHECK(pointer_of(Json::parse(R"({"command": "los-check", "index": "N", "filter": {"principal": "{}"},
      "f": {"source": {"tail": 1}, "target": {"tail": 1}, "tail": "zero"}})")) == "/filter");
}

TEST_CASE("a command given twice must agree") {
  CHECK_THROWS_AS((void)io::parse_request("nno-witness", Json::parse(R"({"command": "report-all"})")), SchemaError);
  CHECK(io::parse_request("nno-witness", Json::parse(R"({"M": 2})")).command() == "nno-witness");
}
