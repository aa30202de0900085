#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "germcat/error.hpp"

namespace germcat {

/// A category whose hom-sets can be enumerated and compared.
template <class C>
concept FiniteCategory = requires(const C& c, const typename C::Object& x,
                                  const typename C::Morphism& f) {
  { c.hom(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { c.identity(x) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.source(f) } -> std::convertible_to<typename C::Object>;
  { c.target(f) } -> std::convertible_to<typename C::Object>;
  { c.equal(f, f) } -> std::same_as<bool>;
  { x == x } -> std::convertible_to<bool>;
};

template <class C>
struct Arrow {
  std::size_t from;
  std::size_t to;
  typename C::Morphism map;
};

/// A finite diagram: objects indexed 0..n-1 and arrows between them.
template <class C>
struct Diagram {
  std::vector<typename C::Object> objects;
  std::vector<Arrow<C>> arrows;
};

/// Limit cone: legs[j] : apex -> objects[j].
template <class C>
struct Cone {
  typename C::Object apex;
  std::vector<typename C::Morphism> legs;
};

/// Colimit cocone: legs[j] : objects[j] -> apex.
template <class C>
struct Cocone {
  typename C::Object apex;
  std::vector<typename C::Morphism> legs;
};

/// Both endpoints of every arrow must match the diagram objects.
template <FiniteCategory C>
void validate(const C& c, const Diagram<C>& d) {
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arr = d.arrows[a];
    if (arr.from >= d.objects.size() || arr.to >= d.objects.size())
      fail(ErrorKind::IllFormedDiagram, "arrow " + std::to_string(a) + " has an endpoint out of range");
    if (!(c.source(arr.map) == d.objects[arr.from]) || !(c.target(arr.map) == d.objects[arr.to]))
      fail(ErrorKind::IllFormedDiagram, "arrow " + std::to_string(a) + " does not match its endpoints");
  }
}

template <class C>
bool is_cone(const C& c, const Diagram<C>& d, const std::vector<typename C::Morphism>& legs) {
  if (legs.size() != d.objects.size()) return false;
  for (const auto& arr : d.arrows)
    if (!c.equal(c.compose(arr.map, legs[arr.from]), legs[arr.to])) return false;
  return true;
}

template <class C>
bool is_cocone(const C& c, const Diagram<C>& d, const std::vector<typename C::Morphism>& legs) {
  if (legs.size() != d.objects.size()) return false;
  for (const auto& arr : d.arrows)
    if (!c.equal(c.compose(legs[arr.to], arr.map), legs[arr.from])) return false;
  return true;
}

// Shape helpers.

template <class C>
Diagram<C> empty_diagram() {
  return {};
}

template <class C>
Diagram<C> discrete_diagram(std::vector<typename C::Object> objects) {
  return {std::move(objects), {}};
}

/// f : X -> Z, g : Y -> Z as objects {X, Y, Z}.
template <FiniteCategory C>
Diagram<C> cospan_diagram(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
  Diagram<C> d{{c.source(f), c.source(g), c.target(f)}, {}};
  d.arrows.push_back({0, 2, f});
  d.arrows.push_back({1, 2, g});
  return d;
}

/// f : Z -> X, g : Z -> Y as objects {Z, X, Y}.
template <FiniteCategory C>
Diagram<C> span_diagram(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
  Diagram<C> d{{c.source(f), c.target(f), c.target(g)}, {}};
  d.arrows.push_back({0, 1, f});
  d.arrows.push_back({0, 2, g});
  return d;
}

/// f, g : X => Y as objects {X, Y}.
template <FiniteCategory C>
Diagram<C> parallel_diagram(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
  Diagram<C> d{{c.source(f), c.target(f)}, {}};
  d.arrows.push_back({0, 1, f});
  d.arrows.push_back({0, 1, g});
  return d;
}

}  // namespace germcat
