#pragma once

// Reference computations for filter quotients that walk every filter stage
// instead of jumping to the least one.

#include <cstddef>
#include <numeric>
#include <vector>

#include "germcat/germ/quotient.hpp"

namespace germcat::oracle {

/// Size of colim_{V in filter} Hom(X x V, Y), built as a disjoint union of all
/// stage hom-sets glued along restriction.
template <class Base>
std::size_t literal_germ_count(const Quotient<Base>& q, const typename Base::Object& x,
                               const typename Base::Object& y) {
  const auto& base = q.base();
  const auto& members = q.filter().members();
  std::vector<Germ<Base>> elements;
  for (auto v : members)
    for (auto& f : base.hom(q.stage_product(x, v).apex, y)) elements.push_back(Germ<Base>{x, y, v, std::move(f)});
  std::vector<std::size_t> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto& poset = q.filter().poset();
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const auto& from = elements[a];
      const auto& to = elements[b];
      if (from.stage == to.stage || !poset.leq(to.stage, from.stage)) continue;
      if (base.equal(q.restrict(from, to.stage).rep, to.rep)) parent[find(a)] = find(b);
    }
  std::size_t classes = 0;
  for (std::size_t a = 0; a < elements.size(); ++a) classes += find(a) == a ? 1 : 0;
  return classes;
}

/// Agreement at some filter stage below both germs.
template <class Base>
bool equal_by_stage_search(const Quotient<Base>& q, const Germ<Base>& a, const Germ<Base>& b) {
  const auto& poset = q.filter().poset();
  for (auto w : q.filter().members()) {
    if (!poset.leq(w, a.stage) || !poset.leq(w, b.stage)) continue;
    if (q.base().equal(q.restrict(a, w).rep, q.restrict(b, w).rep)) return true;
  }
  return false;
}

/// Invertibility of <rep, pi_2> at some filter stage below the germ.
template <class Base>
bool iso_by_stage_search(const Quotient<Base>& q, const Germ<Base>& a) {
  const auto& poset = q.filter().poset();
  for (auto w : q.filter().members()) {
    if (!poset.leq(w, a.stage)) continue;
    if (q.base().is_iso(q.paired(q.restrict(a, w)))) return true;
  }
  return false;
}

}  // namespace germcat::oracle
