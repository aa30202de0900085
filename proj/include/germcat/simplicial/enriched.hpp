#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germcat/filters.hpp"
#include "germcat/simplicial/nerve.hpp"
#include "germcat/simplicial/simpset.hpp"

namespace germcat {

/// A category enriched in D-truncated simplicial sets with finite homs.
struct EnrichedCat {
  std::size_t dim_bound = 0;
  std::vector<std::string> objects;
  std::vector<SimpSet> homs;  // homs[a * N + b] = hom(a, b)
  /// composition[(a * N + b) * N + c][n][g * |hom(a,b)_n| + f] = g o f, for
  /// f in hom(a,b)_n and g in hom(b,c)_n.
  std::vector<std::vector<std::vector<std::size_t>>> composition;
  std::vector<std::size_t> identities;  // a vertex of hom(a, a)

  std::size_t size() const { return objects.size(); }
  const SimpSet& hom(std::size_t a, std::size_t b) const { return homs.at(a * size() + b); }
  std::size_t compose(std::size_t a, std::size_t b, std::size_t c, std::size_t n, std::size_t g, std::size_t f) const;
  /// The identity of a, degenerated up to level n.
  std::size_t identity_at(std::size_t a, std::size_t n) const;
};

struct EnrichmentCheck {
  bool ok = true;
  std::string first_failure;
};

/// Shape, associativity, unit laws, and compatibility of composition with
/// every face and degeneracy, at every level.
EnrichmentCheck check_enrichment(const EnrichedCat& k);

/// A copy of k with one composition entry overwritten.
EnrichedCat with_entry(EnrichedCat k, std::size_t triple, std::size_t level, std::size_t entry, std::size_t value);

/// hom(x, y) = C(x, y) (discrete) x N(Z/n), composing by (g o f, a + b). Every
/// hom is the nerve of a groupoid; group_order 1 gives the discrete
/// enrichment of C.
EnrichedCat enriched_from_category(const SmallCategory& c, std::size_t group_order, std::size_t dim_bound);

/// A family of enriched categories indexed by a finite set, and its filter
/// quotient: objects are tuples of component objects; the hom at a stage V
/// (a subset of the index, as a bitmask) is the product of the component homs
/// over V.
class EnrichedQuotient {
 public:
  using Object = std::vector<std::size_t>;

  /// The filter must be explicit over Poset::powerset(index).
  EnrichedQuotient(std::vector<std::string> index, std::vector<EnrichedCat> components, Filter filter);

  std::size_t dim_bound() const noexcept { return dim_bound_; }
  const std::vector<EnrichedCat>& components() const noexcept { return components_; }
  const Filter& filter() const noexcept { return filter_; }
  std::vector<Object> objects() const;

  SimpSet stage_hom(const Object& x, const Object& y, std::size_t stage) const;
  /// Restriction of stage homs from a stage to a smaller one.
  SimpMap restriction(const Object& x, const Object& y, std::size_t from, std::size_t to) const;
  /// Stage homs over every filter element with all restrictions between them.
  SimpDiagram stage_diagram(const Object& x, const Object& y) const;
  std::size_t compose_at(std::size_t stage, const Object& x, const Object& y, const Object& z, std::size_t n,
                         std::size_t g, std::size_t f) const;

  /// The hom at the least stage, which is the colimit of stage_diagram.
  SimpSet germ_mapping_complex(const Object& x, const Object& y) const;
  std::size_t compose(const Object& x, const Object& y, const Object& z, std::size_t n, std::size_t g,
                      std::size_t f) const;

  /// Some stage makes every hom(t, x) 0-truncated; for homs that are groupoid
  /// nerves this means (d_1, d_0) is injective on 1-simplices.
  bool is_zero_truncated(const Object& x) const;

 private:
  std::vector<SimpSet> factors(const Object& x, const Object& y, std::size_t stage) const;

  std::vector<std::string> index_;
  std::vector<EnrichedCat> components_;
  Filter filter_;
  std::size_t dim_bound_ = 0;
};

}  // namespace germcat
