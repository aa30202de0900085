#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "germcat/fincat/finset.hpp"

namespace germcat {

/// A sequence of element indices that runs through `preperiod` once and then
/// repeats `cycle` forever. `cycle` is never empty.
struct EventuallyPeriodic {
  std::vector<std::size_t> preperiod;
  std::vector<std::size_t> cycle;

  std::size_t at(std::uint64_t n) const;
  /// Shortest cycle, then shortest preperiod. Two sequences are equal exactly
  /// when their canonical forms are.
  EventuallyPeriodic canonical() const;
  /// n -> at(n + 1).
  EventuallyPeriodic shifted() const;
  /// n -> f(at(n)).
  EventuallyPeriodic mapped(const FinMap& f) const;

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

/// The unique h : N -> X with h(0) = start and h(n+1) = step(h(n)).
/// Throws InvalidArgument unless step is an endomap and start indexes X.
EventuallyPeriodic nno_recursor(const FinMap& step, std::size_t start);

}  // namespace germcat
