#include "germcat/filterprod/sequence.hpp"

#include <algorithm>

#include "germcat/error.hpp"
#include "germcat/filterprod/schedule.hpp"

namespace germcat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FinObj one() { return FinObj("1", {"*"}); }

Component source_of(const ComponentMap& f) {
  return std::visit(overloaded{[](const FinMap& m) -> Component { return m.source(); },
                               [](const ToNat& m) -> Component { return m.source; },
                               [](const FromNat&) -> Component { return NatObj{}; },
                               [](const NatShift&) -> Component { return NatObj{}; }},
                    f);
}

Component target_of(const ComponentMap& f) {
  return std::visit(overloaded{[](const FinMap& m) -> Component { return m.target(); },
                               [](const ToNat&) -> Component { return NatObj{}; },
                               [](const FromNat& m) -> Component { return m.target; },
                               [](const NatShift&) -> Component { return NatObj{}; }},
                    f);
}

bool is_invertible(const ComponentMap& f) {
  if (const auto* m = std::get_if<FinMap>(&f)) return m->is_bijective();
  if (const auto* s = std::get_if<NatShift>(&f)) return s->shift == 0;
  return false;  // a finite set is never isomorphic to N
}

ComponentMap identity_component(const Component& x) {
  if (const auto* o = std::get_if<FinObj>(&x)) {
    std::vector<std::size_t> a(o->size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    return FinMap(*o, *o, a);
  }
  return NatShift{0};
}

std::string describe(const Component& x) {
  if (std::holds_alternative<NatObj>(x)) return "N";
  const auto& o = std::get<FinObj>(x);
  std::string s = "{";
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + o.elements[i];
  return s + "}";
}

ComponentMap compose(const ComponentMap& g, const ComponentMap& f) {
  if (!(target_of(f) == source_of(g)))
    fail(ErrorKind::NotComposable, describe(source_of(g)) + " does not receive " + describe(target_of(f)));
  auto outside = [] { fail(ErrorKind::InvalidArgument, "N -> N maps other than shifts are not representable"); };
  if (const auto* fm = std::get_if<FinMap>(&f)) {
    if (const auto* gm = std::get_if<FinMap>(&g)) {
      std::vector<std::size_t> a(fm->source().size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = (*gm)((*fm)(i));
      return FinMap(fm->source(), gm->target(), a);
    }
    const auto& gn = std::get<ToNat>(g);
    ToNat out{fm->source(), {}};
    for (std::size_t i = 0; i < fm->source().size(); ++i) out.values.push_back(gn.values[(*fm)(i)]);
    return out;
  }
  if (const auto* fn = std::get_if<ToNat>(&f)) {
    if (const auto* gs = std::get_if<FromNat>(&g)) {
      std::vector<std::size_t> a;
      for (auto v : fn->values) a.push_back(gs->sequence.at(v));
      return FinMap(fn->source, gs->target, a);
    }
    ToNat out = *fn;
    for (auto& v : out.values) v += std::get<NatShift>(g).shift;
    return out;
  }
  if (const auto* fs = std::get_if<FromNat>(&f)) {
    if (const auto* gm = std::get_if<FinMap>(&g)) return FromNat{gm->target(), fs->sequence.mapped(*gm).canonical()};
    outside();
  }
  const auto shift = std::get<NatShift>(f).shift;
  if (const auto* gs = std::get_if<FromNat>(&g)) {
    auto seq = gs->sequence;
    for (std::uint64_t k = 0; k < shift; ++k) seq = seq.shifted();
    return FromNat{gs->target, seq.canonical()};
  }
  return NatShift{shift + std::get<NatShift>(g).shift};
}

// ---------------------------------------------------------------- SeqObj

const Component& SeqObj::at(std::uint64_t n) const {
  const auto it = patches.find(n);
  return it == patches.end() ? tail : it->second;
}

SeqObj SeqObj::canonical() const {
  SeqObj out{{}, tail};
  for (const auto& [n, c] : patches)
    if (!(c == tail)) out.patches.emplace(n, c);
  return out;
}

std::uint64_t SeqObj::horizon() const { return patches.empty() ? 0 : patches.rbegin()->first + 1; }

bool operator==(const SeqObj& a, const SeqObj& b) {
  const auto ca = a.canonical(), cb = b.canonical();
  return ca.tail == cb.tail && ca.patches == cb.patches;
}

// ---------------------------------------------------------------- rules

ComponentMap rule_at(const TailRule& rule, std::uint64_t n) {
  return std::visit(overloaded{[](const tail::Constant& r) -> ComponentMap { return r.map; },
                               [](const tail::Numeral& r) -> ComponentMap { return ToNat{one(), {r.m}}; },
                               [n](const tail::Diagonal&) -> ComponentMap { return ToNat{one(), {n}}; },
                               [](const tail::Successor&) -> ComponentMap { return NatShift{1}; },
                               [](const tail::ZeroPoint&) -> ComponentMap { return ToNat{one(), {0}}; },
                               [n](const tail::Cyclic& r) -> ComponentMap { return r.cycle[n % r.cycle.size()]; }},
                    rule);
}

std::uint64_t period(const TailRule& rule) {
  if (const auto* c = std::get_if<tail::Cyclic>(&rule)) return c->cycle.size();
  return 1;
}

// ---------------------------------------------------------------- SeqMap

SeqMap::SeqMap(SeqObj source, SeqObj target, std::map<std::uint64_t, ComponentMap> patches, TailRule rule)
    : source_(std::move(source)), target_(std::move(target)), patches_(std::move(patches)), rule_(std::move(rule)) {
  if (const auto* c = std::get_if<tail::Cyclic>(&rule_); c && c->cycle.empty())
    fail(ErrorKind::InvalidArgument, "a cyclic rule needs a nonempty cycle");
  const Schedule s = Schedule::of({this});
  auto check = [&](std::uint64_t n) {
    const auto f = at(n);
    if (!(source_of(f) == source_.at(n)) || !(target_of(f) == target_.at(n)))
      fail(ErrorKind::InvalidArgument, "component " + std::to_string(n) + " runs " + describe(source_of(f)) + " -> " +
                                           describe(target_of(f)) + " but the objects are " + describe(source_.at(n)) +
                                           " -> " + describe(target_.at(n)));
  };
  for (auto n : s.special) check(n);
  for (std::uint64_t r = 0; r < s.period; ++r) check(s.generic(r));
}

ComponentMap SeqMap::at(std::uint64_t n) const {
  const auto it = patches_.find(n);
  return it == patches_.end() ? rule_at(rule_, n) : it->second;
}

std::uint64_t SeqMap::horizon() const {
  std::uint64_t h = std::max(source_.horizon(), target_.horizon());
  if (!patches_.empty()) h = std::max(h, patches_.rbegin()->first + 1);
  return h;
}

std::uint64_t SeqMap::numeral_bound() const {
  std::uint64_t b = 0;
  auto scan = [&b](const ComponentMap& f) {
    if (const auto* t = std::get_if<ToNat>(&f))
      for (auto v : t->values) b = std::max(b, v + 1);
  };
  for (const auto& [n, f] : patches_) scan(f);
  std::visit(overloaded{[&](const tail::Constant& r) { scan(r.map); },
                        [&](const tail::Numeral& r) { b = std::max(b, r.m + 1); },
                        [&](const tail::ZeroPoint&) { b = std::max<std::uint64_t>(b, 1); },
                        [&](const tail::Cyclic& r) {
                          for (const auto& f : r.cycle) scan(f);
                        },
                        [](const auto&) {}},
             rule_);
  return b;
}

SeqMap compose(const SeqMap& g, const SeqMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::NotComposable, "sequence maps do not meet");
  const Schedule s = Schedule::of({&f, &g});
  return s.build_map(f.source(), g.target(), [&](std::uint64_t n) { return compose(g.at(n), f.at(n)); });
}

SeqMap identity_seq(const SeqObj& x) {
  const Schedule s = Schedule::of_objects({&x});
  return s.build_map(x, x, [&](std::uint64_t n) { return identity_component(x.at(n)); });
}

}  // namespace germcat
