#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "germcat/simplicial/simpset.hpp"

namespace germcat {

struct GeneratingMono {
  std::string name;
  std::size_t dimension = 0;  // of the codomain; must not exceed the target's dim_bound
  SimpSet domain;
  SimpSet codomain;
  SimpMap inclusion;
};

/// Throws InvalidArgument unless the inclusion is a level-wise injective
/// simplicial map.
void validate(const GeneratingMono& g);

/// Lambda^n_k -> Delta^n for 1 <= n <= max_n and 0 <= k <= n. Generators with
/// n > dim_bound are truncated at n instead and will be rejected by has_rlp.
std::vector<GeneratingMono> horn_generators(std::size_t max_n, std::size_t dim_bound);

using PartialMap = std::vector<std::vector<std::optional<std::size_t>>>;

/// Visits every simplicial map source -> target agreeing with `fixed` (when
/// given) until `visit` returns false. Returns true when stopped early.
/// Backtracks over nondegenerate simplices; degenerate ones are forced.
bool for_each_map(const SimpSet& source, const SimpSet& target, const PartialMap* fixed,
                  const std::function<bool(const SimpMap&)>& visit);

/// An extension of h: domain -> x along the generator's inclusion.
std::optional<SimpMap> find_extension(const GeneratingMono& gen, const SimpSet& x, const SimpMap& h);

struct RlpVerdict {
  bool holds = true;
  std::optional<std::size_t> failing_generator;
  std::optional<SimpMap> unfillable;  // a map from that generator's domain with no extension
};

/// Every map from a generator domain into x extends along the inclusion.
/// Throws DimensionOverflow when a generator exceeds x's dim_bound.
RlpVerdict has_rlp(const SimpSet& x, const std::vector<GeneratingMono>& gens);

struct RlpPreservation {
  std::vector<bool> stages;  // has_rlp per object of the diagram
  bool stages_ok = false;
  bool colimit_ok = false;
  bool shape_filtered = false;  // the index shape has a terminal object
  /// The colimit keeps the lifting property of its stages.
  bool holds = false;
};

RlpPreservation rlp_preserved_check(const SimpDiagram& d, const std::vector<GeneratingMono>& gens);

/// Generator families for lifting-property classes. Only the horn family is
/// instantiated over simplicial sets; the others index bisimplicial data and
/// are listed for configuration only.
struct GeneratorFamily {
  std::string name;
  std::string description;
  bool instantiated = false;
};

const std::vector<GeneratorFamily>& generator_families();

}  // namespace germcat
