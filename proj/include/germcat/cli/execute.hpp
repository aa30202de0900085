#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "germcat/io/request.hpp"

namespace germcat::cli {

using Json = nlohmann::json;

struct Options {
  std::uint64_t seed = 42;         // used when the request names none
  std::size_t max_size = 0;        // 0: no cap on enumeration sizes
  std::uint64_t max_millis = 0;    // 0: no deadline
  bool timing = false;             // adds "timing_ms"; off keeps reports byte-stable
};

struct Report {
  std::string command;
  std::string verdict = "error";  // pass | fail | error
  Json witnesses = Json::object();
  std::string summary;
  std::optional<std::string> reason;   // error kind, for verdict error
  std::optional<std::string> pointer;  // offending field, for schema errors
  std::optional<double> timing_ms;

  /// 0 for pass, 1 for fail, 2 for error.
  int exit_code() const;
};

/// Runs a parsed request. Library errors become verdict "error" with the
/// error kind as reason; nothing escapes except std::bad_alloc.
Report execute(const io::Request& r, const Options& o);

/// Parses and runs. Schema errors become an error report with a pointer.
Report execute(const Json& request, const Options& o);
Report execute(const std::string& command, const Json& payload, const Options& o);

/// Keys sorted, so equal reports serialize to equal bytes.
Json to_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace germcat::cli
