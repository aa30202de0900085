#pragma once

// The acceptance suite. Each check runs the library against an independent
// brute-force computation and returns a pass/fail outcome with the counts it
// looked at. Used by the acceptance binary and by `germcat report-all`.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "germcat/io/request.hpp"

namespace germcat::acceptance {

struct Config {
  std::uint64_t seed = 42;
  std::string fixture_dir;
};

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
};

/// The fixtures directory of the source tree, as configured at build time.
std::string default_fixture_dir();

/// Every *.json request directly inside `dir`, sorted by file name. Throws
/// std::runtime_error when a file cannot be read or parsed.
std::vector<std::pair<std::string, io::Request>> load_fixtures(const std::string& dir);

Outcome filter_enumeration(const Config& c);
Outcome trivial_quotients(const Config& c);
Outcome los_suite(const Config& c);
Outcome topos_transport(const Config& c);
Outcome truncation_comparison(const Config& c);
Outcome nno_counterexample(const Config& c);
Outcome nno_preservation(const Config& c);
Outcome simplicial_layer(const Config& c);

/// Checks 1 to 8 in order. A check that throws is reported as failed.
std::vector<Outcome> library_checks(const Config& c);

/// Stable key for an outcome, e.g. "3-los-equivalence".
std::string key(const Outcome& o);

}  // namespace germcat::acceptance
