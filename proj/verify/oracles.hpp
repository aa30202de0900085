#pragma once

// Brute-force reference implementations used to cross-check the library.
// Each one follows the textbook definition as literally as possible and
// shares no code path with the implementation it checks.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "germcat/filters.hpp"
#include "germcat/fincat/finset.hpp"

namespace germcat::oracle {

/// Subsets of a poset with at most 16 elements, as bitmasks.
using Mask = std::uint32_t;

bool literal_is_filter(const Poset& p, Mask s);
/// Every subset passing literal_is_filter, in increasing mask order.
std::vector<Mask> literal_filters(const Poset& p);
/// Intersection of every literal filter containing `base`; nullopt-like 0 when
/// no filter contains it.
Mask smallest_filter_containing(const Poset& p, Mask base);
bool literal_is_ultrafilter(const Poset& p, Mask s);

Mask to_mask(const Subset& s);
Subset to_subset(Mask m);


/// Floyd's tortoise-and-hare on x -> step(x) from `start`: returns
/// (tail length, cycle length).
std::pair<std::size_t, std::size_t> floyd(const FinMap& step, std::size_t start);

}  // namespace germcat::oracle
