#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "germcat/io/literals.hpp"

// The request schema of the germcat command line tool. A request is one JSON
// object with a "command" field and command-specific fields next to it.
namespace germcat::io {

/// {"poset": poset, "subset": [labels]}
struct CheckFilterRequest {
  Poset poset = Poset::chain(1);
  std::vector<std::string> subset;
};

/// {"base": "finset" | {"power": [index]} | {"enriched": {...}}, "filter": filter,
///  "objects": [...]}. Objects are sets for "finset", lists of sets (one per
/// index) for powers, and absent for enriched bases, whose objects are all
/// tuples of component objects.
struct QuotientRequest {
  enum class Base { FinSet, Power, Enriched };
  Base base = Base::FinSet;
  std::vector<std::string> index;               // Power, Enriched
  std::vector<EnrichedLit> components;          // Enriched
  std::size_t dim_bound = 0;                    // Enriched
  FilterLit filter;
  std::vector<std::vector<FinObj>> objects;     // one part for FinSet
};

/// {"index": [labels] | "N", "filter": filter, "f": maps, "g"?: maps}. With "g"
/// the check is agreement of f and g, without it invertibility of f. Over a
/// finite index the maps are lists of finite maps, one per index; over N
/// they are sequence maps.
struct LosRequest {
  std::optional<std::vector<std::string>> index;  // nullopt means N
  FilterLit filter;
  std::vector<FinMap> f, g;                        // finite index
  std::optional<SeqMap> seq_f, seq_g;              // N
  bool has_g = false;
};

/// {"M": bound}
struct NnoRequest {
  std::uint64_t bound = 0;
};

/// {"generators": {"horn": n}, "target": simpset} or the same with
/// "diagram": diagram instead of "target".
struct RlpRequest {
  std::string family = "horn";
  std::size_t max_n = 1;
  std::optional<SimpSetLit> target;
  std::optional<DiagramLit> diagram;
};

/// {"fixtures"?: directory}
struct ReportAllRequest {
  std::optional<std::string> fixtures;
};

using Payload = std::variant<CheckFilterRequest, QuotientRequest, LosRequest, NnoRequest, RlpRequest, ReportAllRequest>;

struct Request {
  Payload payload;
  std::optional<std::uint64_t> seed;
  /// The verdict a fixture expects; informational, execute() ignores it.
  std::optional<std::string> expect;

  std::string command() const;
};

const std::vector<std::string>& command_names();

/// Validates the whole request. Throws SchemaError.
Request parse_request(const Json& j);
/// Writes a parsed request back; parse_request(to_json(r)) == r and
/// to_json(parse_request(x)) is the canonical form of x.
Json to_json(const Request& r);

/// Request without its "command" field, for when the command comes from
/// elsewhere (the command line).
Request parse_request(const std::string& command, const Json& j);

}  // namespace germcat::io
