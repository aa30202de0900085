#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"
#include "germcat/filters.hpp"
#include "germcat/fincat/category.hpp"

namespace germcat {

/// The subterminal objects of a category, ordered by "admits a map to".
template <class Base>
struct StageSpace {
  std::shared_ptr<const Poset> poset;
  std::vector<typename Base::Object> objects;
};

/// Sub(1) of the base. Categories exposing an index set (powers) get the
/// powerset labels of that index, others get "0", "1", ...
template <class Base>
StageSpace<Base> subterminals(const Base& base) {
  StageSpace<Base> out;
  out.objects = base.subterminal_objects();
  const std::size_t n = out.objects.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) leq[v * n + w] = base.hom(out.objects[v], out.objects[w]).empty() ? 0 : 1;
  auto order = [&](std::size_t v, std::size_t w) { return leq[v * n + w] != 0; };
  if constexpr (requires { base.index(); }) {
    auto p = Poset::powerset(base.index());
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (p.leq(v, w) != order(v, w)) fail(ErrorKind::InvalidArgument, "subterminal order is not the powerset order");
    out.poset = std::make_shared<const Poset>(std::move(p));
  } else {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    out.poset = std::make_shared<const Poset>(std::move(labels), order);
  }
  return out;
}

/// A morphism X x V -> Y of the base, standing for its class in the quotient.
template <class Base>
struct Germ {
  typename Base::Object source;
  typename Base::Object target;
  std::size_t stage;
  typename Base::Morphism rep;
};

/// The filter quotient: same objects as the base, and germs of maps as
/// morphisms. Hom-sets collapse to a single stage, the least filter member.
template <class Base>
class Quotient {
 public:
  using Object = typename Base::Object;
  using Morphism = Germ<Base>;
  using BaseMorphism = typename Base::Morphism;

  /// `filter` must live on the poset returned by subterminals(base), or be
  /// one of the filters on the naturals (in which case only the structural
  /// accessors work and everything else throws NonEnumerableFilter).
  Quotient(Base base, Filter filter) : base_(std::move(base)), filter_(std::move(filter)), stages_(subterminals(base_)) {
    if (filter_.is_explicit() && !(filter_.poset() == *stages_.poset))
      fail(ErrorKind::InvalidArgument, "filter is not on the subterminal objects of the base");
  }

  const Base& base() const noexcept { return base_; }
  const Filter& filter() const noexcept { return filter_; }
  const StageSpace<Base>& stages() const noexcept { return stages_; }

  std::size_t min_stage() const {
    if (!filter_.is_explicit()) fail(ErrorKind::NonEnumerableFilter, "filter has no least member to evaluate at");
    return filter_.minimum();
  }
  std::size_t top_stage() const {
    auto t = stages_.poset->top();
    if (!t) fail(ErrorKind::InvalidArgument, "the base has no terminal stage");
    return *t;
  }
  const Object& stage_object(std::size_t v) const { return stages_.objects.at(v); }

  /// X x V with legs (pi_1, pi_2).
  Cone<Base> stage_product(const Object& x, std::size_t v) const {
    return base_.limit(discrete_diagram<Base>({x, stage_object(v)}));
  }

  /// [f o pi_1] at the terminal stage.
  Germ<Base> project(const BaseMorphism& f) const {
    const std::size_t top = top_stage();
    const auto prod = stage_product(base_.source(f), top);
    return Germ<Base>{base_.source(f), base_.target(f), top, base_.compose(f, prod.legs[0])};
  }

  /// Restrict to a smaller stage w <= g.stage, w in the filter.
  Germ<Base> restrict(const Germ<Base>& g, std::size_t w) const {
    if (w == g.stage) return g;
    if (!stages_.poset->leq(w, g.stage)) fail(ErrorKind::InvalidArgument, "restriction to a stage that is not smaller");
    if (!filter_.contains(w)) fail(ErrorKind::InvalidArgument, "restriction to a stage outside the filter");
    return Germ<Base>{g.source, g.target, w, base_.compose(g.rep, stage_map(g.source, w, g.stage))};
  }

  Germ<Base> canonical(const Germ<Base>& g) const { return restrict(g, min_stage()); }

  /// <rep, pi_2> : X x V -> Y x V.
  BaseMorphism paired(const Germ<Base>& g) const {
    const auto from = stage_product(g.source, g.stage);
    const auto to = stage_product(g.target, g.stage);
    const auto d = discrete_diagram<Base>({g.target, stage_object(g.stage)});
    return base_.factor(to, d, Cone<Base>{from.apex, {g.rep, from.legs[1]}});
  }

  // FiniteCategory interface -------------------------------------------------

  std::vector<Germ<Base>> hom(const Object& x, const Object& y) const {
    const std::size_t v = min_stage();
    std::vector<Germ<Base>> out;
    for (auto& f : base_.hom(stage_product(x, v).apex, y)) out.push_back(Germ<Base>{x, y, v, std::move(f)});
    return out;
  }
  Germ<Base> identity(const Object& x) const { return canonical(project(base_.identity(x))); }
  /// Both germs are restricted to the meet of their stages first.
  Germ<Base> compose(const Germ<Base>& g, const Germ<Base>& f) const {
    if (!(f.target == g.source)) fail(ErrorKind::NotComposable, "germs are not composable");
    const auto meet = stages_.poset->meet(f.stage, g.stage);
    const std::size_t w = meet && filter_.contains(*meet) ? *meet : min_stage();
    const auto fw = restrict(f, w);
    const auto gw = restrict(g, w);
    return Germ<Base>{f.source, g.target, w, base_.compose(gw.rep, paired(fw))};
  }
  const Object& source(const Germ<Base>& g) const { return g.source; }
  const Object& target(const Germ<Base>& g) const { return g.target; }
  bool equal(const Germ<Base>& a, const Germ<Base>& b) const {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    return base_.equal(canonical(a).rep, canonical(b).rep);
  }

  bool is_iso(const Germ<Base>& g) const { return base_.is_iso(paired(canonical(g))); }
  bool is_mono(const Germ<Base>& g) const { return base_.is_mono(paired(canonical(g))); }

  // Limits and colimits via representatives at the least stage ----------------

  Cone<Quotient> limit(const Diagram<Quotient>& d) const {
    validate(*this, d);
    const auto bd = over_stage(d);
    const auto lim = base_.limit(bd);
    const std::size_t v = min_stage();
    const auto apex_prod = stage_product(lim.apex, v);
    Cone<Quotient> out{lim.apex, {}};
    for (std::size_t j = 0; j < d.objects.size(); ++j) {
      const auto to_x = stage_product(d.objects[j], v).legs[0];
      out.legs.push_back(Germ<Base>{lim.apex, d.objects[j], v,
                                    base_.compose(to_x, base_.compose(lim.legs[j], apex_prod.legs[0]))});
    }
    return out;
  }
  Germ<Base> factor(const Cone<Quotient>& lim, const Diagram<Quotient>& d, const Cone<Quotient>& competitor) const {
    const std::size_t v = min_stage();
    const auto bd = over_stage(d);
    const auto base_lim = base_.limit(bd);
    if (!(base_lim.apex == lim.apex)) fail(ErrorKind::InvalidArgument, "cone was not produced by limit()");
    const auto t = stage_product(competitor.apex, v);
    Cone<Base> comp{t.apex, {}};
    for (const auto& leg : competitor.legs) comp.legs.push_back(paired(canonical(leg)));
    comp.legs.push_back(t.legs[1]);
    return Germ<Base>{competitor.apex, lim.apex, v, base_.factor(base_lim, bd, comp)};
  }

  Cocone<Quotient> colimit(const Diagram<Quotient>& d) const {
    validate(*this, d);
    const auto bd = at_stage(d);
    const auto col = base_.colimit(bd);
    const std::size_t v = min_stage();
    Cocone<Quotient> out{col.apex, {}};
    for (std::size_t j = 0; j < d.objects.size(); ++j)
      out.legs.push_back(Germ<Base>{d.objects[j], col.apex, v, col.legs[j]});
    return out;
  }
  Germ<Base> cofactor(const Cocone<Quotient>& colim, const Diagram<Quotient>& d,
                      const Cocone<Quotient>& competitor) const {
    const std::size_t v = min_stage();
    const auto bd = at_stage(d);
    const auto base_col = base_.colimit(bd);
    if (!(base_col.apex == colim.apex)) fail(ErrorKind::InvalidArgument, "cocone was not produced by colimit()");
    Cocone<Base> comp{competitor.apex, {}};
    for (const auto& leg : competitor.legs) comp.legs.push_back(canonical(leg).rep);
    const auto u = base_.cofactor(base_col, bd, comp);
    return Germ<Base>{colim.apex, competitor.apex, v, base_.compose(u, stage_product(colim.apex, v).legs[0])};
  }

  Object terminal() const { return base_.terminal(); }
  Object initial() const { return base_.initial(); }

  // Skeleton ------------------------------------------------------------------

  struct Skeleton {
    std::vector<std::size_t> representatives;  // indices into the input list
    std::vector<std::size_t> class_of;         // input index -> class index
  };

  /// X ~ Y when X x V and Y x V are isomorphic at the least stage.
  Skeleton skeleton(const std::vector<Object>& objects) const {
    const std::size_t v = min_stage();
    Skeleton out;
    std::vector<Object> staged;
    for (std::size_t k = 0; k < objects.size(); ++k) {
      budget::tick();
      auto xv = stage_product(objects[k], v).apex;
      std::optional<std::size_t> cls;
      for (std::size_t c = 0; c < staged.size() && !cls; ++c)
        if (base_.isomorphic(staged[c], xv)) cls = c;
      if (!cls) {
        cls = staged.size();
        staged.push_back(std::move(xv));
        out.representatives.push_back(k);
      }
      out.class_of.push_back(*cls);
    }
    return out;
  }

  // Subobjects and the classifier --------------------------------------------

  /// One germ mono per subobject of X x V at the least stage.
  std::vector<Germ<Base>> subobjects(const Object& x) const {
    const std::size_t v = min_stage();
    const auto xv = stage_product(x, v);
    std::vector<Germ<Base>> out;
    for (const auto& m : base_.subobjects(xv.apex)) {
      const auto s = base_.source(m);
      const auto sv = stage_product(s, v);
      out.push_back(Germ<Base>{s, x, v, base_.compose(xv.legs[0], base_.compose(m, sv.legs[0]))});
    }
    return out;
  }
  Object omega() const { return base_.omega(); }
  Germ<Base> truth() const { return canonical(project(base_.truth())); }
  /// Characteristic germ X -> Omega of a germ mono. Throws NotMono.
  Germ<Base> classify(const Germ<Base>& mono) const {
    const auto c = canonical(mono);
    const auto chi = base_.classify(paired(c));  // X x V -> Omega
    return Germ<Base>{mono.target, omega(), c.stage, chi};
  }

  /// f_*(p) computed over the least stage; returns the germ f_*(Z) -> Y.
  Germ<Base> dependent_product(const Germ<Base>& f, const Germ<Base>& p) const {
    const auto fv = canonical(f);
    const auto pv = canonical(p);
    const auto pushed = base_.dependent_product(paired(fv), paired(pv));  // Pi -> Y x V
    const auto pi = base_.source(pushed);
    const std::size_t v = min_stage();
    const auto y_leg = stage_product(f.target, v).legs[0];
    const auto pi_leg = stage_product(pi, v).legs[0];
    return Germ<Base>{pi, f.target, v, base_.compose(y_leg, base_.compose(pushed, pi_leg))};
  }

  /// The diagonal X -> X x X is a germ mono.
  bool is_zero_truncated(const Object& x) const {
    const auto d = discrete_diagram<Quotient>({x, x});
    const auto prod = limit(d);
    const auto diag = factor(prod, d, Cone<Quotient>{x, {identity(x), identity(x)}});
    return is_mono(diag);
  }

 private:
  // X x W -> X x V for w <= v.
  BaseMorphism stage_map(const Object& x, std::size_t w, std::size_t v) const {
    const auto from = stage_product(x, w);
    const auto to = stage_product(x, v);
    const auto wv = base_.hom(stage_object(w), stage_object(v));
    if (wv.empty()) fail(ErrorKind::InvalidArgument, "no map between stages");
    const auto d = discrete_diagram<Base>({x, stage_object(v)});
    return base_.factor(to, d, Cone<Base>{from.apex, {from.legs[0], base_.compose(wv.front(), from.legs[1])}});
  }

  // Objects X_j x V with paired arrows, plus V itself as the last object.
  Diagram<Base> over_stage(const Diagram<Quotient>& d) const {
    Diagram<Base> out = at_stage(d);
    const std::size_t v = min_stage();
    const std::size_t n = d.objects.size();
    out.objects.push_back(stage_object(v));
    for (std::size_t j = 0; j < n; ++j) out.arrows.push_back({j, n, stage_product(d.objects[j], v).legs[1]});
    return out;
  }
  Diagram<Base> at_stage(const Diagram<Quotient>& d) const {
    const std::size_t v = min_stage();
    Diagram<Base> out;
    for (const auto& o : d.objects) out.objects.push_back(stage_product(o, v).apex);
    for (const auto& a : d.arrows) out.arrows.push_back({a.from, a.to, paired(canonical(a.map))});
    return out;
  }

  Base base_;
  Filter filter_;
  StageSpace<Base> stages_;
};

}  // namespace germcat
