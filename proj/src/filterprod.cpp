#include "germcat/filterprod/filterprod.hpp"

#include <tuple>

#include "germcat/error.hpp"
#include "germcat/filterprod/schedule.hpp"

namespace germcat {

FilterProductSpec FilterProductSpec::finite(std::vector<std::string> index, Filter filter) {
  if (!filter.is_explicit() || !filter.poset().is_powerset() || filter.poset().atoms() != index)
    fail(ErrorKind::InvalidArgument, "a finite filter product needs an explicit filter on the powerset of its index");
  return {std::move(index), std::move(filter)};
}

FilterProductSpec FilterProductSpec::nat(Filter filter) {
  if (filter.is_explicit()) fail(ErrorKind::InvalidArgument, "a filter product over N needs a filter on P(N)");
  return {std::nullopt, std::move(filter)};
}

namespace {

const std::vector<std::string>& finite_index(const FilterProductSpec& spec) {
  if (spec.is_nat()) fail(ErrorKind::InvalidArgument, "tuples of maps need a finite index");
  return *spec.finite_index;
}

void require_nat(const FilterProductSpec& spec) {
  if (!spec.is_nat()) fail(ErrorKind::InvalidArgument, "sequence maps need the index N");
}

}  // namespace

FiniteLocus los_equiv_check(const FilterProductSpec& spec, const std::vector<FinMap>& f, const std::vector<FinMap>& g) {
  const auto& index = finite_index(spec);
  if (f.size() != index.size() || g.size() != index.size())
    fail(ErrorKind::InvalidArgument, "one component per index is required");
  FiniteLocus out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (!(f[i].source() == g[i].source()) || !(f[i].target() == g[i].target()))
      fail(ErrorKind::InvalidArgument, "components at " + index[i] + " are not parallel");
    if (f[i] == g[i]) out.locus |= std::size_t{1} << i;
  }
  out.holds = spec.filter.contains(out.locus);
  return out;
}

FiniteLocus los_iso_check(const FilterProductSpec& spec, const std::vector<FinMap>& f) {
  const auto& index = finite_index(spec);
  if (f.size() != index.size()) fail(ErrorKind::InvalidArgument, "one component per index is required");
  FiniteLocus out;
  for (std::size_t i = 0; i < index.size(); ++i)
    if (f[i].is_bijective()) out.locus |= std::size_t{1} << i;
  out.holds = spec.filter.contains(out.locus);
  return out;
}

NatLocus los_equiv_check(const FilterProductSpec& spec, const SeqMap& f, const SeqMap& g) {
  require_nat(spec);
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    fail(ErrorKind::InvalidArgument, "sequence maps are not parallel");
  const auto s = Schedule::of({&f, &g});
  NatLocus out;
  out.locus = s.locus([&](std::uint64_t n) { return f.at(n) == g.at(n); });
  out.holds = spec.filter.contains(out.locus);
  return out;
}

NatLocus los_iso_check(const FilterProductSpec& spec, const SeqMap& f) {
  require_nat(spec);
  const auto s = Schedule::of({&f});
  NatLocus out;
  out.locus = s.locus([&](std::uint64_t n) { return is_invertible(f.at(n)); });
  out.holds = spec.filter.contains(out.locus);
  return out;
}

namespace {

struct ComponentCone {
  Component apex;
  ComponentMap left;
  ComponentMap right;
};

std::uint64_t value(const ComponentMap& f, std::size_t a) {
  if (const auto* m = std::get_if<FinMap>(&f)) return (*m)(a);
  return std::get<ToNat>(f).values[a];
}

bool is_identity(const ComponentMap& f) { return source_of(f) == target_of(f) && f == identity_component(source_of(f)); }

// Identities pull back to the other side itself, keeping its labels.
ComponentCone component_pullback(const ComponentMap& f, const ComponentMap& g) {
  if (is_identity(f)) return {source_of(g), g, identity_component(source_of(g))};
  if (is_identity(g)) return {source_of(f), identity_component(source_of(f)), f};
  const Component fs = source_of(f), gs = source_of(g);
  if (!std::holds_alternative<FinObj>(fs) || !std::holds_alternative<FinObj>(gs))
    fail(ErrorKind::InvalidArgument, "pullbacks along maps out of N are only supported against the identity");
  const auto& x = std::get<FinObj>(fs);
  const auto& y = std::get<FinObj>(gs);
  std::vector<std::string> labels;
  std::vector<std::size_t> left, right;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (value(f, i) == value(g, j)) {
        labels.push_back("(" + x.elements[i] + "," + y.elements[j] + ")");
        left.push_back(i);
        right.push_back(j);
      }
  FinObj apex("pb", labels);
  return {apex, FinMap(apex, x, left), FinMap(apex, y, right)};
}

}  // namespace

SeqCone seq_pullback(const SeqMap& f, const SeqMap& g) {
  if (!(f.target() == g.target())) fail(ErrorKind::InvalidArgument, "pullback needs a common target");
  const auto s = Schedule::of({&f, &g});
  auto at = [&](std::uint64_t n) { return component_pullback(f.at(n), g.at(n)); };
  SeqCone out;
  out.apex = s.build_object([&](std::uint64_t n) { return at(n).apex; });
  out.left = s.build_map(out.apex, f.source(), [&](std::uint64_t n) { return at(n).left; });
  out.right = s.build_map(out.apex, g.source(), [&](std::uint64_t n) { return at(n).right; });
  return out;
}

SeqMap diagonal_map() { return SeqMap(SeqObj::constant(one()), SeqObj::constant(NatObj{}), {}, tail::Diagonal{}); }

SeqMap numeral_map(std::uint64_t m) {
  return SeqMap(SeqObj::constant(one()), SeqObj::constant(NatObj{}), {}, tail::Numeral{m});
}

SeqMap zero_map() { return SeqMap(SeqObj::constant(one()), SeqObj::constant(NatObj{}), {}, tail::ZeroPoint{}); }

SeqMap successor_map() {
  return SeqMap(SeqObj::constant(NatObj{}), SeqObj::constant(NatObj{}), {}, tail::Successor{});
}

SeqMap from_empty(const SeqObj& target) {
  const FinObj empty("0", {});
  const auto s = Schedule::of_objects({&target});
  return s.build_map(SeqObj::constant(empty), target, [&](std::uint64_t n) -> ComponentMap {
    const auto& c = target.at(n);
    if (const auto* o = std::get_if<FinObj>(&c)) return FinMap(empty, *o, {});
    return ToNat{empty, {}};
  });
}

bool NnoCertificate::passes() const {
  if (separations.size() != bound + 1) return false;
  for (std::uint64_t m = 0; m <= bound; ++m)
    if (!separated[m] || separations[m] != DefinableSubset::finite({m}) || !empty_beyond[m] || !germ_empty[m])
      return false;
  return true;
}

NnoCertificate nno_witness(std::uint64_t bound) {
  const auto spec = FilterProductSpec::nat(Filter::frechet());
  const auto diagonal = diagonal_map();
  NnoCertificate c;
  c.bound = bound;
  for (std::uint64_t m = 0; m <= bound; ++m) {
    const auto sep = los_equiv_check(spec, diagonal, numeral_map(m));
    c.separations.push_back(sep.locus);
    c.separated.push_back(!sep.holds);

    const auto p = seq_pullback(diagonal, numeral_map(m)).apex;
    bool empty = std::get<FinObj>(p.tail).empty();
    for (const auto& [n, comp] : p.patches)
      if (n > m) empty = empty && std::get<FinObj>(comp).empty();
    c.pullbacks.push_back(p);
    c.empty_beyond.push_back(empty);

    const auto iso = los_iso_check(spec, from_empty(p));
    c.vanishing.push_back(iso.locus);
    c.germ_empty.push_back(iso.holds);
  }
  c.conclusion =
      "In the Frechet filter product the diagonal point of N differs from every numeral, and its pullback "
      "against each numeral is the initial object. If N were the coproduct of its numerals, descent would "
      "make the diagonal factor through one of them, forcing 1 to be initial. So N is not the countable "
      "coproduct of points, as it would be in a Grothendieck topos.";
  return c;
}

SeqMap nat_recursion_germ(const SeqObj& target, const SeqMap& point, const SeqMap& step) {
  if (!(point.source() == SeqObj::constant(one())) || !(point.target() == target))
    fail(ErrorKind::InvalidArgument, "the point must run 1 -> target");
  if (!(step.source() == target) || !(step.target() == target))
    fail(ErrorKind::InvalidArgument, "the step must be an endomap of the target");
  const auto s = Schedule::of({&point, &step}, {&target});
  return s.build_map(SeqObj::constant(NatObj{}), target, [&](std::uint64_t n) -> ComponentMap {
    const auto pn = point.at(n);
    const auto sn = step.at(n);
    if (!std::holds_alternative<FinMap>(pn) || !std::holds_alternative<FinMap>(sn))
      fail(ErrorKind::InvalidArgument, "recursion needs finite target components");
    const auto& step_n = std::get<FinMap>(sn);
    return FromNat{step_n.target(), nno_recursor(step_n, std::get<FinMap>(pn)(0)).canonical()};
  });
}

}  // namespace germcat
