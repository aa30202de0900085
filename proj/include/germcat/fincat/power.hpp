#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germcat/budget.hpp"
#include "germcat/fincat/category.hpp"

namespace germcat {

/// The power C^I over a finite index set: objects, maps, limits and colimits
/// are all computed one component at a time.
template <class Base>
class PowerCat {
 public:
  struct Object {
    std::vector<typename Base::Object> parts;
    friend bool operator==(const Object& a, const Object& b) { return a.parts == b.parts; }
  };
  struct Morphism {
    std::vector<typename Base::Morphism> parts;
    friend bool operator==(const Morphism& a, const Morphism& b) { return a.parts == b.parts; }
  };

  PowerCat(Base base, std::vector<std::string> index) : base_(std::move(base)), index_(std::move(index)) {
    if (index_.empty()) fail(ErrorKind::InvalidArgument, "power over an empty index set");
  }

  const Base& base() const noexcept { return base_; }
  const std::vector<std::string>& index() const noexcept { return index_; }
  std::size_t arity() const noexcept { return index_.size(); }

  std::vector<Morphism> hom(const Object& x, const Object& y) const {
    check(x);
    check(y);
    std::vector<std::vector<typename Base::Morphism>> per(arity());
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity(); ++i) {
      per[i] = base_.hom(x.parts[i], y.parts[i]);
      total *= per[i].size();
      budget::check_size(total, "hom enumeration");
    }
    std::vector<Morphism> out;
    if (total == 0) return out;
    out.reserve(total);
    std::vector<std::size_t> digits(arity(), 0);
    while (true) {
      budget::tick();
      Morphism m;
      for (std::size_t i = 0; i < arity(); ++i) m.parts.push_back(per[i][digits[i]]);
      out.push_back(std::move(m));
      std::size_t j = arity();
      while (j-- > 0) {
        if (++digits[j] < per[j].size()) break;
        digits[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }

  Morphism identity(const Object& x) const {
    return each([&](std::size_t i) { return base_.identity(x.parts[i]); });
  }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    return each([&](std::size_t i) { return base_.compose(g.parts[i], f.parts[i]); });
  }
  Object source(const Morphism& f) const {
    return objects([&](std::size_t i) { return base_.source(f.parts[i]); });
  }
  Object target(const Morphism& f) const {
    return objects([&](std::size_t i) { return base_.target(f.parts[i]); });
  }
  bool equal(const Morphism& a, const Morphism& b) const {
    for (std::size_t i = 0; i < arity(); ++i)
      if (!base_.equal(a.parts[i], b.parts[i])) return false;
    return true;
  }

  Diagram<Base> component(const Diagram<PowerCat>& d, std::size_t i) const {
    Diagram<Base> out;
    for (const auto& o : d.objects) out.objects.push_back(o.parts.at(i));
    for (const auto& a : d.arrows) out.arrows.push_back({a.from, a.to, a.map.parts.at(i)});
    return out;
  }

  Cone<PowerCat> limit(const Diagram<PowerCat>& d) const {
    validate(*this, d);
    Cone<PowerCat> out{Object{}, std::vector<Morphism>(d.objects.size())};
    for (std::size_t i = 0; i < arity(); ++i) {
      auto c = base_.limit(component(d, i));
      out.apex.parts.push_back(std::move(c.apex));
      for (std::size_t j = 0; j < c.legs.size(); ++j) out.legs[j].parts.push_back(std::move(c.legs[j]));
    }
    return out;
  }

  Morphism factor(const Cone<PowerCat>& lim, const Diagram<PowerCat>& d, const Cone<PowerCat>& competitor) const {
    return each([&](std::size_t i) {
      return base_.factor(component_cone(lim, i), component(d, i), component_cone(competitor, i));
    });
  }

  Cocone<PowerCat> colimit(const Diagram<PowerCat>& d) const {
    validate(*this, d);
    Cocone<PowerCat> out{Object{}, std::vector<Morphism>(d.objects.size())};
    for (std::size_t i = 0; i < arity(); ++i) {
      auto c = base_.colimit(component(d, i));
      out.apex.parts.push_back(std::move(c.apex));
      for (std::size_t j = 0; j < c.legs.size(); ++j) out.legs[j].parts.push_back(std::move(c.legs[j]));
    }
    return out;
  }

  Morphism cofactor(const Cocone<PowerCat>& colim, const Diagram<PowerCat>& d,
                    const Cocone<PowerCat>& competitor) const {
    return each([&](std::size_t i) {
      return base_.cofactor(component_cocone(colim, i), component(d, i), component_cocone(competitor, i));
    });
  }

  Object terminal() const { return objects([&](std::size_t) { return base_.terminal(); }); }
  Object initial() const { return objects([&](std::size_t) { return base_.initial(); }); }
  Morphism to_terminal(const Object& x) const {
    return each([&](std::size_t i) { return base_.to_terminal(x.parts[i]); });
  }
  Object omega() const { return objects([&](std::size_t) { return base_.omega(); }); }
  Morphism truth() const { return each([&](std::size_t) { return base_.truth(); }); }

  bool is_mono(const Morphism& f) const { return all([&](std::size_t i) { return base_.is_mono(f.parts[i]); }); }
  bool is_iso(const Morphism& f) const { return all([&](std::size_t i) { return base_.is_iso(f.parts[i]); }); }
  std::optional<Morphism> inverse(const Morphism& f) const {
    Morphism out;
    for (std::size_t i = 0; i < arity(); ++i) {
      auto inv = base_.inverse(f.parts[i]);
      if (!inv) return std::nullopt;
      out.parts.push_back(std::move(*inv));
    }
    return out;
  }
  bool isomorphic(const Object& x, const Object& y) const {
    return all([&](std::size_t i) { return base_.isomorphic(x.parts[i], y.parts[i]); });
  }

  /// Products of component subobjects, first component most significant.
  std::vector<Morphism> subobjects(const Object& x) const {
    std::vector<std::vector<typename Base::Morphism>> per(arity());
    for (std::size_t i = 0; i < arity(); ++i) per[i] = base_.subobjects(x.parts[i]);
    std::vector<Morphism> out{Morphism{}};
    for (std::size_t i = 0; i < arity(); ++i) {
      std::vector<Morphism> next;
      for (const auto& m : out)
        for (const auto& s : per[i]) {
          budget::tick();
          Morphism e = m;
          e.parts.push_back(s);
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  }

  Morphism classify(const Morphism& mono) const {
    return each([&](std::size_t i) { return base_.classify(mono.parts[i]); });
  }
  Morphism dependent_product(const Morphism& f, const Morphism& p) const {
    return each([&](std::size_t i) { return base_.dependent_product(f.parts[i], p.parts[i]); });
  }

  /// Objects whose every component is initial or terminal; entry k has
  /// component i terminal exactly when bit i of k is set.
  std::vector<Object> subterminal_objects() const {
    std::vector<Object> out;
    const std::size_t count = std::size_t{1} << arity();
    for (std::size_t mask = 0; mask < count; ++mask)
      out.push_back(objects([&](std::size_t i) { return (mask >> i & 1) ? base_.terminal() : base_.initial(); }));
    return out;
  }

  /// Which components of a subterminal object are nonempty, as a bitmask.
  std::size_t support(const Object& v) const {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < arity(); ++i)
      if (!(v.parts[i] == base_.initial())) mask |= std::size_t{1} << i;
    return mask;
  }

 private:
  void check(const Object& x) const {
    if (x.parts.size() != arity()) fail(ErrorKind::InvalidArgument, "object has the wrong number of components");
  }
  template <class F>
  Morphism each(F&& f) const {
    Morphism m;
    m.parts.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) m.parts.push_back(f(i));
    return m;
  }
  template <class F>
  Object objects(F&& f) const {
    Object o;
    o.parts.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) o.parts.push_back(f(i));
    return o;
  }
  template <class F>
  bool all(F&& f) const {
    for (std::size_t i = 0; i < arity(); ++i)
      if (!f(i)) return false;
    return true;
  }
  Cone<Base> component_cone(const Cone<PowerCat>& c, std::size_t i) const {
    Cone<Base> out{c.apex.parts.at(i), {}};
    for (const auto& l : c.legs) out.legs.push_back(l.parts.at(i));
    return out;
  }
  Cocone<Base> component_cocone(const Cocone<PowerCat>& c, std::size_t i) const {
    Cocone<Base> out{c.apex.parts.at(i), {}};
    for (const auto& l : c.legs) out.legs.push_back(l.parts.at(i));
    return out;
  }

  Base base_;
  std::vector<std::string> index_;
};

}  // namespace germcat
