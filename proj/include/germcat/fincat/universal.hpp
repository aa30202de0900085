#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "germcat/budget.hpp"
#include "germcat/fincat/category.hpp"

namespace germcat {

namespace detail {

// Backtracking over leg choices; an arrow is checked as soon as both of its
// endpoints have a leg.
template <FiniteCategory C, class Check>
void enumerate_legs(const C& c, const Diagram<C>& d,
                    const std::function<std::vector<typename C::Morphism>(std::size_t)>& candidates,
                    Check&& arrow_ok, const std::function<void(const std::vector<typename C::Morphism>&)>& emit) {
  const std::size_t n = d.objects.size();
  std::vector<std::vector<typename C::Morphism>> choices(n);
  for (std::size_t j = 0; j < n; ++j) choices[j] = candidates(j);
  std::vector<typename C::Morphism> legs;
  legs.reserve(n);
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == n) {
      emit(legs);
      return;
    }
    for (const auto& m : choices[j]) {
      budget::tick();
      legs.push_back(m);
      bool ok = true;
      for (const auto& arr : d.arrows) {
        if (std::max(arr.from, arr.to) != j) continue;
        if (!arrow_ok(arr, legs)) {
          ok = false;
          break;
        }
      }
      if (ok) go(j + 1);
      legs.pop_back();
    }
  };
  go(0);
  (void)c;
}

}  // namespace detail

/// Every cone over `d` with the given apex.
template <FiniteCategory C>
std::vector<std::vector<typename C::Morphism>> all_cones(const C& c, const Diagram<C>& d,
                                                          const typename C::Object& apex) {
  std::vector<std::vector<typename C::Morphism>> out;
  detail::enumerate_legs<C>(
      c, d, [&](std::size_t j) { return c.hom(apex, d.objects[j]); },
      [&](const Arrow<C>& arr, const std::vector<typename C::Morphism>& legs) {
        return c.equal(c.compose(arr.map, legs[arr.from]), legs[arr.to]);
      },
      [&](const std::vector<typename C::Morphism>& legs) { out.push_back(legs); });
  return out;
}

/// Every cocone under `d` with the given apex.
template <FiniteCategory C>
std::vector<std::vector<typename C::Morphism>> all_cocones(const C& c, const Diagram<C>& d,
                                                            const typename C::Object& apex) {
  std::vector<std::vector<typename C::Morphism>> out;
  detail::enumerate_legs<C>(
      c, d, [&](std::size_t j) { return c.hom(d.objects[j], apex); },
      [&](const Arrow<C>& arr, const std::vector<typename C::Morphism>& legs) {
        return c.equal(c.compose(legs[arr.to], arr.map), legs[arr.from]);
      },
      [&](const std::vector<typename C::Morphism>& legs) { out.push_back(legs); });
  return out;
}

/// Exhaustive universal-property test: for every test object T, composing with
/// the legs must be a bijection from Hom(T, apex) onto the cones with apex T.
template <FiniteCategory C>
bool is_limit(const C& c, const Diagram<C>& d, const Cone<C>& cone,
              const std::vector<typename C::Object>& test_objects) {
  if (!is_cone(c, d, cone.legs)) return false;
  for (const auto& t : test_objects) {
    const auto cones = all_cones(c, d, t);
    std::vector<bool> hit(cones.size(), false);
    for (const auto& u : c.hom(t, cone.apex)) {
      std::vector<typename C::Morphism> composite;
      for (const auto& leg : cone.legs) composite.push_back(c.compose(leg, u));
      std::size_t matches = 0;
      for (std::size_t k = 0; k < cones.size(); ++k) {
        bool same = true;
        for (std::size_t j = 0; j < composite.size() && same; ++j) same = c.equal(composite[j], cones[k][j]);
        if (!same) continue;
        if (hit[k]) return false;  // two mediating maps for one cone
        hit[k] = true;
        ++matches;
      }
      if (matches != 1) return false;
    }
    for (bool h : hit)
      if (!h) return false;  // a cone with no mediating map
  }
  return true;
}

template <FiniteCategory C>
bool is_colimit(const C& c, const Diagram<C>& d, const Cocone<C>& cocone,
                const std::vector<typename C::Object>& test_objects) {
  if (!is_cocone(c, d, cocone.legs)) return false;
  for (const auto& t : test_objects) {
    const auto cocones = all_cocones(c, d, t);
    std::vector<bool> hit(cocones.size(), false);
    for (const auto& u : c.hom(cocone.apex, t)) {
      std::vector<typename C::Morphism> composite;
      for (const auto& leg : cocone.legs) composite.push_back(c.compose(u, leg));
      std::size_t matches = 0;
      for (std::size_t k = 0; k < cocones.size(); ++k) {
        bool same = true;
        for (std::size_t j = 0; j < composite.size() && same; ++j) same = c.equal(composite[j], cocones[k][j]);
        if (!same) continue;
        if (hit[k]) return false;
        hit[k] = true;
        ++matches;
      }
      if (matches != 1) return false;
    }
    for (bool h : hit)
      if (!h) return false;
  }
  return true;
}

/// Mono test through the kernel pair: f is mono iff the square with both legs
/// the identity is a pullback of f against itself.
template <FiniteCategory C>
bool is_mono_by_kernel_pair(const C& c, const typename C::Morphism& f,
                            const std::vector<typename C::Object>& test_objects) {
  const auto x = c.source(f);
  const auto d = cospan_diagram(c, f, f);
  return is_limit(c, d, Cone<C>{x, {c.identity(x), c.identity(x), f}}, test_objects);
}

}  // namespace germcat
