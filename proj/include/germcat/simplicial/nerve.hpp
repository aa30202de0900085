#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germcat/simplicial/simpset.hpp"

namespace germcat {

/// A finite category given by its full composition table.
struct SmallCategory {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::string label;
  };

  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> identities;  // per object
  std::vector<std::size_t> table;       // table[g * |arrows| + f] = g o f, or `none`

  std::size_t compose(std::size_t g, std::size_t f) const;
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const;
  bool is_groupoid() const;
};

/// Throws InvalidArgument unless identities, composite endpoints, unit laws
/// and associativity all check out.
void validate(const SmallCategory& c);

/// Z/n with one object; arrow k is the residue k.
SmallCategory cyclic_group(std::size_t n);
/// The poset 0 < 1 < ... < n-1.
SmallCategory chain(std::size_t n);
/// k objects with exactly one arrow between any two; codiscrete(2) is the free
/// isomorphism.
SmallCategory codiscrete(std::size_t k);
/// One object, arrows {1, e} with e o e = e.
SmallCategory idempotent_monoid();

/// Composable strings of n arrows, f_1 first, in lexicographic order of arrow
/// indices; level 0 lists the objects as one-element strings.
std::vector<std::vector<std::vector<std::size_t>>> nerve_strings(const SmallCategory& c, std::size_t dim_bound);

/// The nerve truncated at dim_bound. d_0 drops the first arrow, d_n the last,
/// inner faces compose neighbours; s_i inserts an identity at vertex i.
SimpSet nerve(const SmallCategory& c, std::size_t dim_bound);

/// The nerve of a functor given on arrows (objects follow from identities).
/// Throws InvalidArgument unless it preserves endpoints, identities and
/// composition.
SimpMap nerve_map(const SmallCategory& from, const SmallCategory& to, const std::vector<std::size_t>& on_arrows,
                  std::size_t dim_bound);

}  // namespace germcat
