// germcat: run one request file and print a report.
//
//   germcat check-filter --input req.json
//   germcat report-all --seed 42 --format text

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "germcat/cli/execute.hpp"

using germcat::cli::Json;

namespace {

int finish(const germcat::cli::Report& report, const std::string& format, const std::string& output) {
  const std::string text =
      format == "text" ? germcat::cli::render_text(report) : germcat::cli::to_json(report).dump(2) + "\n";
  if (output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "germcat: cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  return report.exit_code();
}

germcat::cli::Report usage_error(const std::string& command, const std::string& what) {
  germcat::cli::Report r;
  r.command = command;
  r.reason = "usage";
  r.summary = what;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filter quotients of finite categories: checks and certificates"};
  std::string command, input, output = "-", format = "json";
  std::uint64_t seed = 42;
  std::size_t max_size = 0;
  bool timing = false;
  app.add_option("command", command, "check-filter | quotient | los-check | nno-witness | rlp-check | report-all")
      ->required()
      ->check(CLI::IsMember(germcat::io::command_names()));
  app.add_option("--input", input, "request file (JSON); not needed for report-all");
  app.add_option("--output", output, "report destination, - for stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--max-size", max_size, "cap on exhaustive-search sizes, 0 for none");
  app.add_flag("--timing", timing, "add timing_ms to the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  germcat::cli::Options options;
  options.seed = seed;
  options.max_size = max_size;
  options.timing = timing;
  if (const char* ms = std::getenv("GERMCAT_MAX_MILLIS")) {
    char* end = nullptr;
    options.max_millis = std::strtoull(ms, &end, 10);
    if (end == ms || *end != '\0')
      return finish(usage_error(command, "GERMCAT_MAX_MILLIS must be a natural number"), format, output);
  }

  Json payload = Json::object();
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) return finish(usage_error(command, "cannot read " + input), format, output);
    try {
      payload = Json::parse(in);
    } catch (const Json::parse_error& e) {
      auto r = usage_error(command, std::string("not valid JSON: ") + e.what());
      r.reason = "SchemaError";
      r.pointer = "/";
      return finish(r, format, output);
    }
  } else if (command != "report-all") {
    return finish(usage_error(command, command + " needs --input"), format, output);
  }
  // An explicit --seed wins over one stored in the file.
  if (*seed_opt && payload.is_object()) payload["seed"] = seed;

  return finish(germcat::cli::execute(command, payload, options), format, output);
}
