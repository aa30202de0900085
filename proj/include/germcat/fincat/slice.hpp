#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "germcat/fincat/category.hpp"

namespace germcat {

/// The slice C/X. Limits add the anchor to the diagram; colimits are taken in
/// the base and mapped to the anchor by the induced map.
template <class Base>
class SliceCat {
 public:
  using BaseObject = typename Base::Object;
  using BaseMorphism = typename Base::Morphism;

  struct Object {
    BaseObject domain;
    BaseMorphism structure;
    friend bool operator==(const Object& a, const Object& b) {
      return a.domain == b.domain && a.structure == b.structure;
    }
  };
  struct Morphism {
    Object from;
    Object to;
    BaseMorphism map;
    friend bool operator==(const Morphism& a, const Morphism& b) {
      return a.map == b.map && a.from == b.from && a.to == b.to;
    }
  };

  SliceCat(Base base, BaseObject anchor) : base_(std::move(base)), anchor_(std::move(anchor)) {}

  const Base& base() const noexcept { return base_; }
  const BaseObject& anchor() const noexcept { return anchor_; }

  /// Throws InvalidArgument unless `structure` lands in the anchor.
  Object object(BaseMorphism structure) const {
    if (!(base_.target(structure) == anchor_)) fail(ErrorKind::InvalidArgument, "slice object not over the anchor");
    return Object{base_.source(structure), std::move(structure)};
  }
  /// Throws InvalidArgument unless the triangle commutes.
  Morphism morphism(Object from, Object to, BaseMorphism map) const {
    if (!base_.equal(base_.compose(to.structure, map), from.structure))
      fail(ErrorKind::InvalidArgument, "slice triangle does not commute");
    return Morphism{std::move(from), std::move(to), std::move(map)};
  }

  std::vector<Morphism> hom(const Object& a, const Object& b) const {
    std::vector<Morphism> out;
    for (auto& h : base_.hom(a.domain, b.domain))
      if (base_.equal(base_.compose(b.structure, h), a.structure)) out.push_back(Morphism{a, b, std::move(h)});
    return out;
  }
  Morphism identity(const Object& a) const { return Morphism{a, a, base_.identity(a.domain)}; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.to == g.from)) fail(ErrorKind::NotComposable, "slice maps are not composable");
    return Morphism{f.from, g.to, base_.compose(g.map, f.map)};
  }
  const Object& source(const Morphism& f) const { return f.from; }
  const Object& target(const Morphism& f) const { return f.to; }
  bool equal(const Morphism& a, const Morphism& b) const {
    return a.from == b.from && a.to == b.to && base_.equal(a.map, b.map);
  }

  Cone<SliceCat> limit(const Diagram<SliceCat>& d) const {
    validate(*this, d);
    const auto lim = base_.limit(over_anchor(d));
    const std::size_t n = d.objects.size();
    Object apex = object(lim.legs[n]);
    std::vector<Morphism> legs;
    for (std::size_t j = 0; j < n; ++j) legs.push_back(Morphism{apex, d.objects[j], lim.legs[j]});
    return {std::move(apex), std::move(legs)};
  }
  Morphism factor(const Cone<SliceCat>& lim, const Diagram<SliceCat>& d, const Cone<SliceCat>& competitor) const {
    const auto extended = over_anchor(d);
    Cone<Base> base_lim{lim.apex.domain, {}};
    Cone<Base> base_comp{competitor.apex.domain, {}};
    for (const auto& l : lim.legs) base_lim.legs.push_back(l.map);
    for (const auto& l : competitor.legs) base_comp.legs.push_back(l.map);
    base_lim.legs.push_back(lim.apex.structure);
    base_comp.legs.push_back(competitor.apex.structure);
    return Morphism{competitor.apex, lim.apex, base_.factor(base_lim, extended, base_comp)};
  }

  Cocone<SliceCat> colimit(const Diagram<SliceCat>& d) const {
    validate(*this, d);
    const auto bd = domains(d);
    const auto col = base_.colimit(bd);
    Cocone<Base> to_anchor{anchor_, {}};
    for (const auto& o : d.objects) to_anchor.legs.push_back(o.structure);
    Object apex = object(base_.cofactor(col, bd, to_anchor));
    std::vector<Morphism> legs;
    for (std::size_t j = 0; j < d.objects.size(); ++j) legs.push_back(Morphism{d.objects[j], apex, col.legs[j]});
    return {std::move(apex), std::move(legs)};
  }
  Morphism cofactor(const Cocone<SliceCat>& colim, const Diagram<SliceCat>& d,
                    const Cocone<SliceCat>& competitor) const {
    Cocone<Base> base_col{colim.apex.domain, {}};
    Cocone<Base> base_comp{competitor.apex.domain, {}};
    for (const auto& l : colim.legs) base_col.legs.push_back(l.map);
    for (const auto& l : competitor.legs) base_comp.legs.push_back(l.map);
    return Morphism{colim.apex, competitor.apex, base_.cofactor(base_col, domains(d), base_comp)};
  }

  Object terminal() const { return Object{anchor_, base_.identity(anchor_)}; }
  Object initial() const {
    const auto empty = base_.initial();
    return Object{empty, base_.hom(empty, anchor_).at(0)};
  }
  /// pi_2 : Omega x X -> X.
  Object omega() const { return object(product_with_anchor(base_.omega()).legs[1]); }
  Morphism truth() const {
    const auto prod = product_with_anchor(base_.omega());
    const auto d = discrete_diagram<Base>({base_.omega(), anchor_});
    Cone<Base> pair{anchor_, {base_.compose(base_.truth(), base_.to_terminal(anchor_)), base_.identity(anchor_)}};
    return Morphism{terminal(), omega(), base_.factor(prod, d, pair)};
  }

  bool is_mono(const Morphism& f) const { return base_.is_mono(f.map); }
  bool is_iso(const Morphism& f) const { return base_.is_iso(f.map); }

  /// One slice subobject per base subobject of the domain.
  std::vector<Morphism> subobjects(const Object& a) const {
    std::vector<Morphism> out;
    for (auto& m : base_.subobjects(a.domain)) {
      Object sub{base_.source(m), base_.compose(a.structure, m)};
      out.push_back(Morphism{std::move(sub), a, std::move(m)});
    }
    return out;
  }
  /// <chi, structure> : A -> Omega x X.
  Morphism classify(const Morphism& mono) const {
    const auto chi = base_.classify(mono.map);
    const auto prod = product_with_anchor(base_.omega());
    const auto d = discrete_diagram<Base>({base_.omega(), anchor_});
    Cone<Base> pair{mono.to.domain, {chi, mono.to.structure}};
    return Morphism{mono.to, omega(), base_.factor(prod, d, pair)};
  }

  std::vector<Object> subterminal_objects() const {
    std::vector<Object> out;
    for (auto& m : base_.subobjects(anchor_)) out.push_back(Object{base_.source(m), m});
    return out;
  }

 private:
  // The diagram of domains with the anchor appended as the last object.
  Diagram<Base> over_anchor(const Diagram<SliceCat>& d) const {
    Diagram<Base> out = domains(d);
    const std::size_t n = d.objects.size();
    out.objects.push_back(anchor_);
    for (std::size_t j = 0; j < n; ++j) out.arrows.push_back({j, n, d.objects[j].structure});
    return out;
  }
  Diagram<Base> domains(const Diagram<SliceCat>& d) const {
    Diagram<Base> out;
    for (const auto& o : d.objects) out.objects.push_back(o.domain);
    for (const auto& a : d.arrows) out.arrows.push_back({a.from, a.to, a.map.map});
    return out;
  }
  Cone<Base> product_with_anchor(const BaseObject& y) const {
    return base_.limit(discrete_diagram<Base>({y, anchor_}));
  }

  Base base_;
  BaseObject anchor_;
};

}  // namespace germcat
