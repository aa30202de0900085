#pragma once

// Generic brute-force checks over any FiniteCategory with finite limits.

#include <cstddef>
#include <utility>

#include "germcat/fincat/category.hpp"

namespace germcat::oracle {

/// For f : X -> Y, p : Z -> X (an object of C/X) and g : W -> Y (an object of
/// C/Y), returns (|Hom_{/X}(f^*g, p)|, |Hom_{/Y}(g, f_* p)|). The two agree
/// exactly when f_* is right adjoint to pullback at this pair.
template <class C>
std::pair<std::size_t, std::size_t> adjunction_counts(const C& c, const typename C::Morphism& f,
                                                      const typename C::Morphism& p,
                                                      const typename C::Morphism& g) {
  const auto pulled = c.limit(cospan_diagram(c, g, f));  // legs: to W, to X, to Y
  std::size_t left = 0;
  for (const auto& h : c.hom(pulled.apex, c.source(p)))
    if (c.equal(c.compose(p, h), pulled.legs[1])) ++left;
  const auto pushed = c.dependent_product(f, p);
  std::size_t right = 0;
  for (const auto& k : c.hom(c.source(g), c.source(pushed)))
    if (c.equal(c.compose(pushed, k), g)) ++right;
  return {left, right};
}

}  // namespace germcat::oracle
