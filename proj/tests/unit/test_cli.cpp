#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "germcat/cli/execute.hpp"

using namespace germcat;
using cli::Json;

namespace {

cli::Report run(const char* text, cli::Options o = {}) { return cli::execute(Json::parse(text), o); }

}  // namespace

TEST_CASE("worked examples") {
  const auto filter = run(R"({"command": "check-filter", "poset": {"powerset": ["a", "b"]}, "subset": ["{a}", "{a,b}"]})");
  CHECK(filter.verdict == "pass");
  CHECK(filter.witnesses["minimum"] == "{a}");
  CHECK(filter.witnesses["ultrafilter"] == true);

  const auto nno = run(R"({"command": "nno-witness", "M": 3})");
  CHECK(nno.verdict == "pass");
  CHECK(nno.witnesses["separations"].size() == 4);

  const auto collapse = run(R"({"command": "los-check", "index": [1, 2], "filter": "improper",
      "f": [{"source": 2, "target": 2, "map": [0, 1]}, {"source": 1, "target": 3, "map": [2]}],
      "g": [{"source": 2, "target": 2, "map": [1, 0]}, {"source": 1, "target": 3, "map": [0]}]})");
  CHECK(collapse.verdict == "pass");
  CHECK(collapse.witnesses["locus"] == Json::array());
}

TEST_CASE("verdicts map to exit codes") {
  const auto bad = run(R"({"command": "check-filter", "poset": {"chain": 3}, "subset": ["0"]})");
  CHECK(bad.verdict == "fail");
  CHECK(bad.exit_code() == 1);
  CHECK(bad.witnesses["violation"]["condition"] == "upward-closed");

  const auto undirected =
      run(R"({"command": "check-filter", "poset": {"powerset": ["a", "b"]}, "subset": ["{a}", "{b}", "{a,b}"]})");
  CHECK(undirected.witnesses["violation"]["condition"] == "downward-directed");

  const auto empty = run(R"({"command": "check-filter", "poset": {"chain": 2}, "subset": []})");
  CHECK(empty.witnesses["violation"]["condition"] == "nonempty");

  const auto ok = run(R"({"command": "nno-witness", "M": 0})");
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("schema errors carry a pointer and exit 2") {
  const auto r = run(R"({"command": "los-check", "index": ["1"], "filter": "minimal",
      "f": [{"source": 2, "target": 2, "map": [0, 2]}]})");
  CHECK(r.verdict == "error");
  CHECK(r.exit_code() == 2);
  CHECK(r.reason == std::optional<std::string>("SchemaError"));
  CHECK(r.pointer == std::optional<std::string>("/f/0/map/1"));
  CHECK(cli::to_json(r)["pointer"] == "/f/0/map/1");

  const auto wrong = cli::execute("quotient", Json::parse(R"({"command": "nno-witness", "M": 1})"), {});
  CHECK(wrong.pointer == std::optional<std::string>("/command"));
}

TEST_CASE("a size cap turns large searches into budget errors") {
  cli::Options o;
  o.max_size = 4;
  const auto r = run(R"({"command": "quotient", "base": "finset", "filter": "minimal", "objects": [3, 4]})", o);
  CHECK(r.verdict == "error");
  CHECK(r.reason == std::optional<std::string>("max-size"));
}

TEST_CASE("los-check over N reports the agreement set") {
  const auto r = run(R"({"command": "los-check", "index": "N", "filter": "frechet",
      "f": {"source": {"tail": ["*"]}, "target": {"tail": "N"}, "tail": {"numeral": 3}},
      "g": {"source": {"tail": ["*"]}, "target": {"tail": "N"}, "tail": {"numeral": 3},
            "patches": {"0": {"to_nat": {"source": ["*"], "values": [5]}}}}})");
  CHECK(r.verdict == "pass");
  CHECK(r.witnesses["locus"] == Json::parse(R"({"cofinite": [0]})"));
}

TEST_CASE("quotient reports are the same on every run") {
  const char* q = R"({"command": "quotient", "base": {"power": ["a", "b"]}, "filter": {"principal": "{a}"},
                      "objects": [[1, 2], [1, 0], [2, 1]]})";
  const auto a = cli::to_json(run(q)).dump();
  CHECK(a == cli::to_json(run(q)).dump());
  const auto r = run(q);
  CHECK(r.verdict == "pass");
  // Over the stage {a} only the first factor matters, so [1,2] and [1,0] merge.
  CHECK(r.witnesses["skeleton"]["class_of"] == Json::parse("[0, 0, 1]"));
}

TEST_CASE("timing is only reported on request") {
  cli::Options o;
  CHECK(!cli::to_json(run(R"({"command": "nno-witness", "M": 1})", o)).contains("timing_ms"));
  o.timing = true;
  CHECK(cli::to_json(run(R"({"command": "nno-witness", "M": 1})", o)).contains("timing_ms"));
}

TEST_CASE("text rendering leads with command and verdict") {
  const auto text = cli::render_text(run(R"({"command": "nno-witness", "M": 2})"));
  CHECK(text.rfind("nno-witness: pass\n", 0) == 0);
}
