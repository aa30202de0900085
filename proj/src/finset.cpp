#include "germcat/fincat/finset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "germcat/budget.hpp"

namespace germcat {

std::vector<std::string> make_unique_labels(std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    if (seen.insert(l).second) continue;
    for (std::size_t k = 1;; ++k) {
      std::string candidate = l + "#" + std::to_string(k);
      if (seen.insert(candidate).second) {
        l = std::move(candidate);
        break;
      }
    }
  }
  return labels;
}

// ---------------------------------------------------------------- FinObj

FinObj::FinObj(std::string label, std::vector<std::string> elements)
    : label(std::move(label)), elements(std::move(elements)) {
  std::set<std::string_view> seen;
  for (const auto& e : this->elements)
    if (!seen.insert(e).second) fail(ErrorKind::InvalidArgument, "duplicate element '" + e + "'");
}

FinObj FinObj::standard(std::size_t n) { return standard(n, std::to_string(n)); }

FinObj FinObj::standard(std::size_t n, std::string label) {
  std::vector<std::string> els;
  els.reserve(n);
  for (std::size_t i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return FinObj(std::move(label), std::move(els));
}

std::optional<std::size_t> FinObj::find(std::string_view element) const {
  auto it = std::find(elements.begin(), elements.end(), element);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::size_t FinObj::index_of(std::string_view element) const {
  if (auto i = find(element)) return *i;
  fail(ErrorKind::UnknownElement, "'" + std::string(element) + "' is not an element of " + label);
}

// ---------------------------------------------------------------- FinMap

FinMap::FinMap(FinObj source, FinObj target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size())
    fail(ErrorKind::InvalidArgument, "map from " + source_.label + " is not total");
  for (auto v : assignment_)
    if (v >= target_.size())
      fail(ErrorKind::InvalidArgument, "map value outside target " + target_.label);
}

FinMap FinMap::from_labels(FinObj source, FinObj target,
                           const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> a(source.size(), 0);
  std::vector<bool> seen(source.size(), false);
  for (const auto& [from, to] : assignment) {
    const std::size_t i = source.index_of(from);
    a[i] = target.index_of(to);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail(ErrorKind::InvalidArgument, "no value for '" + source.elements[i] + "'");
  return FinMap(std::move(source), std::move(target), std::move(a));
}

bool FinMap::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (auto v : assignment_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinMap::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (auto v : assignment_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------- FinSetCat

namespace {

std::string tuple_label(const std::vector<const std::string*>& parts) {
  if (parts.empty()) return "*";
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += *parts[i];
  }
  return s + ")";
}

std::string joined_labels(const Diagram<FinSetCat>& d, const char* sep) {
  std::string s;
  for (std::size_t j = 0; j < d.objects.size(); ++j) {
    if (j) s += sep;
    s += d.objects[j].label;
  }
  return s;
}

// Advances an odometer with digit j ranging over [0, radix[j]); last digit fastest.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    if (++digits[j] < radix[j]) return true;
    digits[j] = 0;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<FinMap> FinSetCat::hom(const FinObj& x, const FinObj& y) const {
  std::vector<FinMap> out;
  if (y.empty() && !x.empty()) return out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < x.size() && count <= budget::max_size(); ++i) count *= y.size();
  budget::check_size(count, "hom enumeration");
  std::vector<std::size_t> digits(x.size(), 0);
  const std::vector<std::size_t> radix(x.size(), y.size());
  do {
    budget::tick();
    out.emplace_back(x, y, digits);
  } while (advance(digits, radix));
  return out;
}

FinMap FinSetCat::identity(const FinObj& x) const {
  std::vector<std::size_t> a(x.size());
  std::iota(a.begin(), a.end(), 0);
  return FinMap(x, x, std::move(a));
}

FinMap FinSetCat::compose(const FinMap& g, const FinMap& f) const {
  if (!(f.target() == g.source()))
    fail(ErrorKind::NotComposable, "cannot compose " + f.target().label + " with " + g.source().label);
  std::vector<std::size_t> a(f.source().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return FinMap(f.source(), g.target(), std::move(a));
}

Cone<FinSetCat> FinSetCat::limit(const Diagram<FinSetCat>& d) const {
  validate(*this, d);
  const std::size_t n = d.objects.size();
  std::vector<std::size_t> radix(n);
  bool any_empty = false;
  for (std::size_t j = 0; j < n; ++j) {
    radix[j] = d.objects[j].size();
    any_empty = any_empty || radix[j] == 0;
  }
  std::vector<std::vector<std::size_t>> tuples;
  if (!any_empty) {
    std::vector<std::size_t> digits(n, 0);
    do {
      budget::tick();
      bool ok = true;
      for (const auto& arr : d.arrows)
        if (arr.map(digits[arr.from]) != digits[arr.to]) {
          ok = false;
          break;
        }
      if (ok) tuples.push_back(digits);
    } while (advance(digits, radix));
  }
  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::vector<const std::string*> parts;
    for (std::size_t j = 0; j < n; ++j) parts.push_back(&d.objects[j].elements[t[j]]);
    labels.push_back(tuple_label(parts));
  }
  const std::string name = n == 0 ? "1" : d.arrows.empty() ? joined_labels(d, "x") : "lim(" + joined_labels(d, ",") + ")";
  FinObj apex(name, make_unique_labels(std::move(labels)));
  std::vector<FinMap> legs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> a(tuples.size());
    for (std::size_t k = 0; k < tuples.size(); ++k) a[k] = tuples[k][j];
    legs.emplace_back(apex, d.objects[j], std::move(a));
  }
  return {std::move(apex), std::move(legs)};
}

FinMap FinSetCat::factor(const Cone<FinSetCat>& lim, const Diagram<FinSetCat>& d,
                         const Cone<FinSetCat>& competitor) const {
  if (!is_cone(*this, d, competitor.legs)) fail(ErrorKind::IllFormedDiagram, "competitor is not a cone");
  const FinObj& t = competitor.apex;
  std::vector<std::size_t> a(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < lim.apex.size() && !hit; ++k) {
      bool match = true;
      for (std::size_t j = 0; j < lim.legs.size() && match; ++j) match = lim.legs[j](k) == competitor.legs[j](x);
      if (match) hit = k;
    }
    if (!hit) fail(ErrorKind::IllFormedDiagram, "cone does not factor through the limit");
    a[x] = *hit;
  }
  return FinMap(t, lim.apex, std::move(a));
}

Cocone<FinSetCat> FinSetCat::colimit(const Diagram<FinSetCat>& d) const {
  validate(*this, d);
  const std::size_t n = d.objects.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) offset[j + 1] = offset[j] + d.objects[j].size();
  UnionFind uf(offset[n]);
  for (const auto& arr : d.arrows)
    for (std::size_t x = 0; x < d.objects[arr.from].size(); ++x)
      uf.unite(offset[arr.from] + x, offset[arr.to] + arr.map(x));

  // classes in order of their least flat index
  std::vector<std::size_t> class_of(offset[n]);
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> root_class(offset[n], static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < offset[n]; ++k) {
    const std::size_t r = uf.find(k);
    if (root_class[r] == static_cast<std::size_t>(-1)) {
      root_class[r] = members.size();
      members.emplace_back();
    }
    class_of[k] = root_class[r];
    members[class_of[k]].push_back(k);
  }
  auto flat_label = [&](std::size_t k) {
    const std::size_t j = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), k) - offset.begin()) - 1;
    return std::to_string(j) + ":" + d.objects[j].elements[k - offset[j]];
  };
  std::vector<std::string> labels;
  for (const auto& cls : members) {
    if (cls.size() == 1) {
      labels.push_back(flat_label(cls[0]));
      continue;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) s += ',';
      s += flat_label(cls[i]);
    }
    labels.push_back(s + "]");
  }
  const std::string name = n == 0 ? "0" : d.arrows.empty() ? joined_labels(d, "+") : "colim(" + joined_labels(d, ",") + ")";
  FinObj apex(name, make_unique_labels(std::move(labels)));
  std::vector<FinMap> legs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> a(d.objects[j].size());
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = class_of[offset[j] + x];
    legs.emplace_back(d.objects[j], apex, std::move(a));
  }
  return {std::move(apex), std::move(legs)};
}

FinMap FinSetCat::cofactor(const Cocone<FinSetCat>& colim, const Diagram<FinSetCat>& d,
                           const Cocone<FinSetCat>& competitor) const {
  if (!is_cocone(*this, d, competitor.legs))
    fail(ErrorKind::IllFormedDiagram, "competitor is not a cocone");
  const FinObj& t = competitor.apex;
  std::vector<std::optional<std::size_t>> value(colim.apex.size());
  for (std::size_t j = 0; j < colim.legs.size(); ++j)
    for (std::size_t x = 0; x < d.objects[j].size(); ++x) {
      auto& v = value[colim.legs[j](x)];
      const std::size_t w = competitor.legs[j](x);
      if (v && *v != w) fail(ErrorKind::IllFormedDiagram, "cocone does not factor through the colimit");
      v = w;
    }
  std::vector<std::size_t> a(value.size());
  for (std::size_t q = 0; q < value.size(); ++q) {
    if (!value[q]) fail(ErrorKind::IllFormedDiagram, "colimit legs are not jointly surjective");
    a[q] = *value[q];
  }
  return FinMap(colim.apex, t, std::move(a));
}

FinObj FinSetCat::terminal() const { return FinObj("1", {"*"}); }

FinObj FinSetCat::initial() const { return FinObj("0", {}); }

FinMap FinSetCat::to_terminal(const FinObj& x) const {
  return FinMap(x, terminal(), std::vector<std::size_t>(x.size(), 0));
}

FinObj FinSetCat::omega() const { return FinObj("Omega", {"0", "1"}); }

FinMap FinSetCat::truth() const { return FinMap(terminal(), omega(), {1}); }

std::optional<FinMap> FinSetCat::inverse(const FinMap& f) const {
  if (!f.is_bijective()) return std::nullopt;
  std::vector<std::size_t> a(f.target().size());
  for (std::size_t x = 0; x < f.source().size(); ++x) a[f(x)] = x;
  return FinMap(f.target(), f.source(), std::move(a));
}

std::vector<FinMap> FinSetCat::subobjects(const FinObj& x) const {
  budget::check_size(x.size(), "subobject enumeration");
  if (x.size() > 20) fail(ErrorKind::InvalidArgument, "too many subobjects to enumerate");
  std::vector<FinMap> out;
  const std::size_t count = std::size_t{1} << x.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    budget::tick();
    std::vector<std::string> els;
    std::vector<std::size_t> a;
    std::string name = "{";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (!els.empty()) name += ',';
      name += x.elements[i];
      els.push_back(x.elements[i]);
      a.push_back(i);
    }
    out.emplace_back(FinObj(name + "}", std::move(els)), x, std::move(a));
  }
  return out;
}

FinMap FinSetCat::classify(const FinMap& mono) const {
  if (!mono.is_injective()) fail(ErrorKind::NotMono, "map out of " + mono.source().label + " is not injective");
  std::vector<std::size_t> chi(mono.target().size(), 0);
  for (auto v : mono.assignment()) chi[v] = 1;
  FinMap result(mono.target(), omega(), std::move(chi));
  // the pullback of truth along chi recovers the image of the mono
  const auto pb = limit(cospan_diagram(*this, result, truth()));
  std::vector<std::size_t> image(pb.legs[0].assignment());
  std::vector<std::size_t> expected(mono.assignment());
  std::sort(image.begin(), image.end());
  std::sort(expected.begin(), expected.end());
  if (image != expected) fail(ErrorKind::InvalidArgument, "classifier pullback check failed");
  return result;
}

FinMap FinSetCat::dependent_product(const FinMap& f, const FinMap& p) const {
  if (!(p.target() == f.source()))
    fail(ErrorKind::NotComposable, "dependent product needs p : Z -> X and f : X -> Y");
  const FinObj& x = f.source();
  const FinObj& y = f.target();
  const FinObj& z = p.source();
  std::vector<std::vector<std::size_t>> over(x.size());
  for (std::size_t e = 0; e < z.size(); ++e) over[p(e)].push_back(e);

  std::vector<std::string> labels;
  std::vector<std::size_t> to_y;
  for (std::size_t w = 0; w < y.size(); ++w) {
    std::vector<std::size_t> fiber;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (f(i) == w) fiber.push_back(i);
    std::vector<std::size_t> radix(fiber.size());
    bool possible = true;
    for (std::size_t k = 0; k < fiber.size(); ++k) {
      radix[k] = over[fiber[k]].size();
      possible = possible && radix[k] > 0;
    }
    if (!possible) continue;
    std::vector<std::size_t> digits(fiber.size(), 0);
    do {
      budget::tick();
      std::string s = "(" + y.elements[w] + ";";
      for (std::size_t k = 0; k < fiber.size(); ++k) {
        if (k) s += ',';
        s += x.elements[fiber[k]] + ":" + z.elements[over[fiber[k]][digits[k]]];
      }
      labels.push_back(s + ")");
      to_y.push_back(w);
    } while (advance(digits, radix));
  }
  FinObj product("Pi(" + z.label + ")", make_unique_labels(std::move(labels)));
  return FinMap(std::move(product), y, std::move(to_y));
}

}  // namespace germcat
