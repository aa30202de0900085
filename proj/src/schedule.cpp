#include "germcat/filterprod/schedule.hpp"

#include <numeric>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"

namespace germcat {

namespace {

void scan(const ComponentMap& f, Schedule& s, std::uint64_t& preperiod) {
  if (const auto* t = std::get_if<ToNat>(&f)) s.special.insert(t->values.begin(), t->values.end());
  if (const auto* q = std::get_if<FromNat>(&f)) {
    preperiod = std::max<std::uint64_t>(preperiod, q->sequence.preperiod.size());
    s.period = std::lcm(s.period, static_cast<std::uint64_t>(q->sequence.cycle.size()));
  }
}

void scan(const SeqObj& x, Schedule& s) {
  for (const auto& [n, c] : x.patches) s.special.insert(n);
}

}  // namespace

Schedule Schedule::of(std::initializer_list<const SeqMap*> maps, std::initializer_list<const SeqObj*> objects) {
  Schedule s;
  std::uint64_t preperiod = 0;
  for (const auto* x : objects) scan(*x, s);
  for (const auto* f : maps) {
    scan(f->source(), s);
    scan(f->target(), s);
    for (const auto& [n, c] : f->patches()) {
      s.special.insert(n);
      scan(c, s, preperiod);
    }
    const auto& rule = f->rule();
    s.period = std::lcm(s.period, germcat::period(rule));
    if (const auto* r = std::get_if<tail::Numeral>(&rule)) s.special.insert(r->m);
    if (std::holds_alternative<tail::ZeroPoint>(rule)) s.special.insert(0);
    if (const auto* r = std::get_if<tail::Constant>(&rule)) scan(r->map, s, preperiod);
    if (const auto* r = std::get_if<tail::Cyclic>(&rule))
      for (const auto& c : r->cycle) scan(c, s, preperiod);
  }
  for (std::uint64_t n = 0; n < preperiod; ++n) s.special.insert(n);
  s.start = s.special.empty() ? 0 : *s.special.rbegin() + 1;
  budget::check_size(s.special.size(), "special indices");
  budget::check_size(s.period, "period");
  return s;
}

std::uint64_t Schedule::generic(std::uint64_t r) const { return start + (r + period - start % period) % period; }

DefinableSubset Schedule::locus(const std::function<bool(std::uint64_t)>& pred) const {
  const bool value = pred(generic(0));
  for (std::uint64_t r = 0; r < period; ++r) {
    budget::tick();
    const std::uint64_t n = generic(r);
    if (pred(n) != value || pred(n + period) != value)
      fail(ErrorKind::AgreementNotDefinable, "the set depends on the index modulo " + std::to_string(period));
  }
  std::vector<std::uint64_t> exceptions;
  for (auto n : special)
    if (pred(n) != value) exceptions.push_back(n);
  return value ? DefinableSubset::cofinite(exceptions) : DefinableSubset::finite(exceptions);
}

SeqObj Schedule::build_object(const std::function<Component(std::uint64_t)>& component) const {
  SeqObj out{{}, component(generic(0))};
  for (std::uint64_t r = 0; r < period; ++r) {
    const std::uint64_t n = generic(r);
    if (!(component(n) == out.tail) || !(component(n + period) == out.tail))
      fail(ErrorKind::AgreementNotDefinable, "components do not settle into a single tail");
  }
  for (auto n : special)
    if (auto c = component(n); !(c == out.tail)) out.patches.emplace(n, std::move(c));
  return out;
}

namespace {

bool is_diagonal_at(const ComponentMap& c, std::uint64_t n) {
  const auto* t = std::get_if<ToNat>(&c);
  return t && t->source == one() && t->values == std::vector<std::uint64_t>{n};
}

TailRule named(const ComponentMap& c) {
  if (const auto* t = std::get_if<ToNat>(&c); t && t->source == one()) return tail::Numeral{t->values[0]};
  if (const auto* s = std::get_if<NatShift>(&c); s && s->shift == 1) return tail::Successor{};
  return tail::Constant{c};
}

}  // namespace

SeqMap Schedule::build_map(const SeqObj& source, const SeqObj& target,
                           const std::function<ComponentMap(std::uint64_t)>& component) const {
  std::vector<ComponentMap> cycle(period);
  bool diagonal = true;
  bool periodic = true;
  for (std::uint64_t r = 0; r < period; ++r) {
    budget::tick();
    const std::uint64_t n = generic(r);
    const auto c = component(n);
    const auto later = component(n + period);
    diagonal = diagonal && is_diagonal_at(c, n) && is_diagonal_at(later, n + period);
    periodic = periodic && c == later;
    cycle[n % period] = c;
  }
  TailRule rule;
  if (diagonal) {
    rule = tail::Diagonal{};
  } else if (!periodic) {
    fail(ErrorKind::AgreementNotDefinable, "components follow no tail rule");
  } else if (std::all_of(cycle.begin(), cycle.end(), [&](const ComponentMap& c) { return c == cycle[0]; })) {
    rule = named(cycle[0]);
  } else {
    rule = tail::Cyclic{cycle};
  }
  std::map<std::uint64_t, ComponentMap> patches;
  for (auto n : special)
    if (auto c = component(n); !(c == rule_at(rule, n))) patches.emplace(n, std::move(c));
  return SeqMap(source, target, std::move(patches), std::move(rule));
}

}  // namespace germcat
