#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>

#include "germcat/filterprod/sequence.hpp"
#include "germcat/filters.hpp"

namespace germcat {

/// Which indices of a family of sequences have to be looked at one by one.
/// Away from `special`, every component depends only on the index modulo
/// `period`; from `start` on nothing is special.
struct Schedule {
  std::set<std::uint64_t> special;
  std::uint64_t start = 0;
  std::uint64_t period = 1;

  static Schedule of(std::initializer_list<const SeqMap*> maps, std::initializer_list<const SeqObj*> objects = {});
  static Schedule of_objects(std::initializer_list<const SeqObj*> objects) { return of({}, objects); }

  /// The least index >= start congruent to r.
  std::uint64_t generic(std::uint64_t r) const;

  /// {n : pred(n)}. Throws AgreementNotDefinable when the answer depends on
  /// the residue class, i.e. the set is neither finite nor cofinite.
  DefinableSubset locus(const std::function<bool(std::uint64_t)>& pred) const;

  /// Throws AgreementNotDefinable unless the components settle to one tail.
  SeqObj build_object(const std::function<Component(std::uint64_t)>& component) const;

  /// Chooses the tail rule from the generic components (Numeral, Successor,
  /// Diagonal, Constant or Cyclic) and patches the rest. Throws
  /// AgreementNotDefinable when no rule fits.
  SeqMap build_map(const SeqObj& source, const SeqObj& target,
                   const std::function<ComponentMap(std::uint64_t)>& component) const;
};

}  // namespace germcat
