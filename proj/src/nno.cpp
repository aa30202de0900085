#include "germcat/fincat/nno.hpp"

#include <algorithm>

namespace germcat {

std::size_t EventuallyPeriodic::at(std::uint64_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  return cycle[(n - preperiod.size()) % cycle.size()];
}

EventuallyPeriodic EventuallyPeriodic::canonical() const {
  if (cycle.empty()) fail(ErrorKind::InvalidArgument, "eventually periodic sequence without a cycle");
  EventuallyPeriodic out = *this;
  const std::size_t len = out.cycle.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d) continue;
    bool periodic = true;
    for (std::size_t k = d; k < len && periodic; ++k) periodic = out.cycle[k] == out.cycle[k - d];
    if (periodic) {
      out.cycle.resize(d);
      break;
    }
  }
  while (!out.preperiod.empty() && out.preperiod.back() == out.cycle.back()) {
    std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    out.preperiod.pop_back();
  }
  return out;
}

EventuallyPeriodic EventuallyPeriodic::shifted() const {
  EventuallyPeriodic out = *this;
  if (!out.preperiod.empty()) {
    out.preperiod.erase(out.preperiod.begin());
  } else {
    std::rotate(out.cycle.begin(), out.cycle.begin() + 1, out.cycle.end());
  }
  return out.canonical();
}

EventuallyPeriodic EventuallyPeriodic::mapped(const FinMap& f) const {
  EventuallyPeriodic out = *this;
  for (auto& v : out.preperiod) v = f(v);
  for (auto& v : out.cycle) v = f(v);
  return out.canonical();
}

EventuallyPeriodic nno_recursor(const FinMap& step, std::size_t start) {
  if (!(step.source() == step.target()))
    fail(ErrorKind::InvalidArgument, "recursion step must be an endomap");
  if (start >= step.source().size())
    fail(ErrorKind::InvalidArgument, "recursion start is not an element");
  std::vector<std::size_t> first_seen(step.source().size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> orbit;
  std::size_t x = start;
  while (first_seen[x] == static_cast<std::size_t>(-1)) {
    first_seen[x] = orbit.size();
    orbit.push_back(x);
    x = step(x);
  }
  const auto split = orbit.begin() + static_cast<std::ptrdiff_t>(first_seen[x]);
  return EventuallyPeriodic{{orbit.begin(), split}, {split, orbit.end()}};
}

}  // namespace germcat
