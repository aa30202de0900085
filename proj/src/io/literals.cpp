#include "germcat/io/literals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "germcat/error.hpp"

namespace germcat::io {

std::string pointer_join(const std::string& base, const std::string& token) {
  std::string out = base + "/";
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string pointer_join(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

void schema_fail(const std::string& pointer, const std::string& what) {
  throw SchemaError(pointer.empty() ? std::string("/") : pointer, what);
}

namespace {

// Library errors raised while building a literal are reported at the literal.
template <class F>
auto at(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    schema_fail(ptr, e.what());
  }
}

std::string kind(const Json& j) {
  if (j.is_object()) return "an object";
  if (j.is_array()) return "an array";
  if (j.is_string()) return "a string";
  if (j.is_boolean()) return "a boolean";
  if (j.is_null()) return "null";
  return "a number";
}

const Json& array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) schema_fail(ptr, "expected an array, got " + kind(j));
  return j;
}

std::uint64_t key_natural(const std::string& key, const std::string& ptr) {
  const auto where = pointer_join(ptr, key);
  if (key.empty() || key.size() > 19 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      (key.size() > 1 && key[0] == '0'))
    schema_fail(where, "expected a natural number as key");
  return std::stoull(key);
}

std::vector<std::size_t> identity_seq(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

void check_keys(const Json& j, const std::string& ptr, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!j.is_object()) schema_fail(ptr, "expected an object, got " + kind(j));
  for (const char* k : required)
    if (!j.contains(k)) schema_fail(pointer_join(ptr, k), "missing required field");
  for (const auto& [k, v] : j.items()) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char* o) { return k == o; });
    if (!known) schema_fail(pointer_join(ptr, k), "unknown field");
  }
}

const Json& field(const Json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) schema_fail(ptr, "expected an object, got " + kind(j));
  if (!j.contains(key)) schema_fail(pointer_join(ptr, key), "missing required field");
  return j.at(key);
}

std::uint64_t parse_natural(const Json& j, const std::string& ptr) {
  if (!j.is_number_unsigned()) schema_fail(ptr, "expected a natural number, got " + kind(j));
  return j.get<std::uint64_t>();
}

std::string parse_label(const Json& j, const std::string& ptr) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
  schema_fail(ptr, "expected a label (string or natural number), got " + kind(j));
}

std::vector<std::string> parse_labels(const Json& j, const std::string& ptr) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) out.push_back(parse_label(j[i], pointer_join(ptr, i)));
  return out;
}

std::vector<std::uint64_t> parse_naturals(const Json& j, const std::string& ptr) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) out.push_back(parse_natural(j[i], pointer_join(ptr, i)));
  return out;
}

// ---------------------------------------------------------------- posets

Poset parse_poset(const Json& j, const std::string& ptr) {
  if (j.is_object() && j.contains("powerset")) {
    check_keys(j, ptr, {"powerset"});
    const auto where = pointer_join(ptr, "powerset");
    auto atoms = parse_labels(j["powerset"], where);
    return at(where, [&] { return Poset::powerset(std::move(atoms)); });
  }
  if (j.is_object() && j.contains("chain")) {
    check_keys(j, ptr, {"chain"});
    const auto n = parse_natural(j["chain"], pointer_join(ptr, "chain"));
    if (n == 0 || n > 64) schema_fail(pointer_join(ptr, "chain"), "chain length must be between 1 and 64");
    return Poset::chain(n);
  }
  check_keys(j, ptr, {"elements", "leq"});
  auto labels = parse_labels(j["elements"], pointer_join(ptr, "elements"));
  const auto leq_ptr = pointer_join(ptr, "leq");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& l : labels) pairs.emplace_back(l, l);
  for (std::size_t i = 0; i < array(j["leq"], leq_ptr).size(); ++i) {
    const auto where = pointer_join(leq_ptr, i);
    const auto& p = j["leq"][i];
    if (!p.is_array() || p.size() != 2) schema_fail(where, "expected a pair [x, y] meaning x <= y");
    pairs.emplace_back(parse_label(p[0], pointer_join(where, 0)), parse_label(p[1], pointer_join(where, 1)));
  }
  return at(ptr, [&] { return Poset::from_pairs(std::move(labels), pairs); });
}

Json to_json(const Poset& p) {
  if (p.is_powerset()) return {{"powerset", p.atoms()}};
  bool chain = p.size() > 0;
  for (std::size_t x = 0; x < p.size() && chain; ++x) {
    chain = p.label(x) == std::to_string(x);
    for (std::size_t y = 0; y < p.size() && chain; ++y) chain = p.leq(x, y) == (x <= y);
  }
  if (chain) return {{"chain", p.size()}};
  Json leq = Json::array();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (x != y && p.leq(x, y)) leq.push_back({p.label(x), p.label(y)});
  return {{"elements", p.labels()}, {"leq", leq}};
}

// ---------------------------------------------------------------- filters

DefinableSubset parse_definable(const Json& j, const std::string& ptr) {
  if (j.is_object() && j.contains("cofinite")) {
    check_keys(j, ptr, {"cofinite"});
    return DefinableSubset::cofinite(parse_naturals(j["cofinite"], pointer_join(ptr, "cofinite")));
  }
  check_keys(j, ptr, {"finite"});
  return DefinableSubset::finite(parse_naturals(j["finite"], pointer_join(ptr, "finite")));
}

Json to_json(const DefinableSubset& s) { return {{s.is_cofinite() ? "cofinite" : "finite", s.exceptions()}}; }

FilterLit parse_filter(const Json& j, const std::string& ptr) {
  FilterLit f;
  f.pointer = ptr;
  using F = FilterLit::Form;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "minimal")
      f.form = F::Minimal;
    else if (s == "improper")
      f.form = F::Improper;
    else if (s == "frechet")
      f.form = F::Frechet;
    else
      schema_fail(ptr, "unknown filter '" + s + "' (expected minimal, improper or frechet)");
    return f;
  }
  if (!j.is_object() || j.size() != 1) schema_fail(ptr, "expected a filter name or a one-field object");
  const auto& [key, value] = *j.items().begin();
  const auto where = pointer_join(ptr, key);
  if (key == "principal") {
    f.form = F::Principal;
    f.elements = {parse_label(value, where)};
  } else if (key == "members") {
    f.form = F::Members;
    f.elements = parse_labels(value, where);
  } else if (key == "generated_by") {
    f.form = F::GeneratedBy;
    f.elements = parse_labels(value, where);
  } else if (key == "principal_definable") {
    f.form = F::PrincipalDefinable;
    f.definable = parse_definable(value, where);
  } else {
    schema_fail(where, "unknown filter form");
  }
  return f;
}

Json to_json(const FilterLit& f) {
  using F = FilterLit::Form;
  switch (f.form) {
    case F::Minimal: return "minimal";
    case F::Improper: return "improper";
    case F::Frechet: return "frechet";
    case F::Principal: return {{"principal", f.elements.at(0)}};
    case F::Members: return {{"members", f.elements}};
    case F::GeneratedBy: return {{"generated_by", f.elements}};
    case F::PrincipalDefinable: return {{"principal_definable", to_json(f.definable)}};
  }
  return nullptr;
}

Filter make_filter(const FilterLit& f, const std::shared_ptr<const Poset>& poset) {
  using F = FilterLit::Form;
  if (f.over_naturals() != (poset == nullptr))
    schema_fail(f.pointer, poset ? "a filter on P(N) cannot be used over a finite poset"
                                 : "only frechet and principal_definable filters live on P(N)");
  if (f.form == F::Frechet) return Filter::frechet();
  if (f.form == F::PrincipalDefinable) return Filter::principal_definable(f.definable);
  auto indices = [&](const char* key) {
    Subset out;
    for (std::size_t i = 0; i < f.elements.size(); ++i) {
      const auto x = poset->find(f.elements[i]);
      if (!x) {
        const auto where = pointer_join(f.pointer, key);
        schema_fail(f.form == F::Principal ? where : pointer_join(where, i),
                    "'" + f.elements[i] + "' is not an element of the poset");
      }
      out.push_back(*x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return at(f.pointer, [&] {
    switch (f.form) {
      case F::Minimal: return Filter::minimal(poset);
      case F::Improper: return Filter::improper(poset);
      case F::Principal: return Filter::principal(poset, indices("principal").at(0));
      case F::Members: return Filter::make_explicit(poset, indices("members"));
      case F::GeneratedBy: {
        const auto base = indices("generated_by");
        return generate_filter(poset, base);
      }
      default: break;
    }
    fail(ErrorKind::InvalidArgument, "unreachable filter form");
  });
}

// ---------------------------------------------------------------- finite sets

FinObj parse_set(const Json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) {
    const auto n = j.get<std::uint64_t>();
    if (n > 4096) schema_fail(ptr, "set too large");
    return FinObj::standard(n);
  }
  auto labels = parse_labels(j, ptr);
  std::string name = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) name += (i ? "," : "") + labels[i];
  return at(ptr, [&] { return FinObj(name + "}", std::move(labels)); });
}

Json to_json(const FinObj& x) {
  if (x == FinObj::standard(x.size())) return x.size();
  return x.elements;
}

FinMap parse_finmap(const Json& j, const std::string& ptr) {
  check_keys(j, ptr, {"source", "target", "map"});
  auto s = parse_set(j["source"], pointer_join(ptr, "source"));
  auto t = parse_set(j["target"], pointer_join(ptr, "target"));
  const auto map_ptr = pointer_join(ptr, "map");
  auto a = to_sizes(parse_naturals(j["map"], map_ptr));
  if (a.size() != s.size()) schema_fail(map_ptr, "expected one value per source element");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= t.size()) schema_fail(pointer_join(map_ptr, i), "value outside the target");
  return FinMap(std::move(s), std::move(t), std::move(a));
}

Json to_json(const FinMap& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", f.assignment()}};
}

// ---------------------------------------------------------------- sequences

Component parse_component(const Json& j, const std::string& ptr) {
  if (j.is_string() && j.get<std::string>() == "N") return NatObj{};
  return parse_set(j, ptr);
}

Json to_json(const Component& c) {
  if (std::holds_alternative<NatObj>(c)) return "N";
  return to_json(std::get<FinObj>(c));
}

ComponentMap parse_component_map(const Json& j, const std::string& ptr) {
  if (j.is_object() && j.contains("to_nat")) {
    check_keys(j, ptr, {"to_nat"});
    const auto where = pointer_join(ptr, "to_nat");
    check_keys(j["to_nat"], where, {"source", "values"});
    ToNat t{parse_set(j["to_nat"]["source"], pointer_join(where, "source")),
            parse_naturals(j["to_nat"]["values"], pointer_join(where, "values"))};
    if (t.values.size() != t.source.size()) schema_fail(pointer_join(where, "values"), "expected one value per source element");
    return t;
  }
  if (j.is_object() && j.contains("from_nat")) {
    check_keys(j, ptr, {"from_nat"});
    const auto where = pointer_join(ptr, "from_nat");
    check_keys(j["from_nat"], where, {"target", "cycle"}, {"preperiod"});
    const auto& body = j["from_nat"];
    FromNat q{parse_set(body["target"], pointer_join(where, "target")), {}};
    if (body.contains("preperiod"))
      q.sequence.preperiod = to_sizes(parse_naturals(body["preperiod"], pointer_join(where, "preperiod")));
    q.sequence.cycle = to_sizes(parse_naturals(body["cycle"], pointer_join(where, "cycle")));
    if (q.sequence.cycle.empty()) schema_fail(pointer_join(where, "cycle"), "the cycle must not be empty");
    for (auto v : q.sequence.preperiod)
      if (v >= q.target.size()) schema_fail(pointer_join(where, "preperiod"), "value outside the target");
    for (auto v : q.sequence.cycle)
      if (v >= q.target.size()) schema_fail(pointer_join(where, "cycle"), "value outside the target");
    return q;
  }
  if (j.is_object() && j.contains("shift")) {
    check_keys(j, ptr, {"shift"});
    return NatShift{parse_natural(j["shift"], pointer_join(ptr, "shift"))};
  }
  return parse_finmap(j, ptr);
}

Json to_json(const ComponentMap& f) {
  if (const auto* m = std::get_if<FinMap>(&f)) return to_json(*m);
  if (const auto* t = std::get_if<ToNat>(&f)) return {{"to_nat", {{"source", to_json(t->source)}, {"values", t->values}}}};
  if (const auto* q = std::get_if<FromNat>(&f)) {
    Json body = {{"target", to_json(q->target)}, {"cycle", q->sequence.cycle}};
    if (!q->sequence.preperiod.empty()) body["preperiod"] = q->sequence.preperiod;
    return {{"from_nat", body}};
  }
  return {{"shift", std::get<NatShift>(f).shift}};
}

SeqObj parse_seqobj(const Json& j, const std::string& ptr) {
  check_keys(j, ptr, {"tail"}, {"patches"});
  SeqObj x{{}, parse_component(j["tail"], pointer_join(ptr, "tail"))};
  if (j.contains("patches")) {
    const auto where = pointer_join(ptr, "patches");
    if (!j["patches"].is_object()) schema_fail(where, "expected an object keyed by index");
    for (const auto& [k, v] : j["patches"].items())
      x.patches.emplace(key_natural(k, where), parse_component(v, pointer_join(where, k)));
  }
  return x;
}

Json to_json(const SeqObj& x) {
  Json out = {{"tail", to_json(x.tail)}};
  if (!x.patches.empty()) {
    Json p = Json::object();
    for (const auto& [n, c] : x.patches) p[std::to_string(n)] = to_json(c);
    out["patches"] = p;
  }
  return out;
}

TailRule parse_tail_rule(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "diagonal") return tail::Diagonal{};
    if (s == "successor") return tail::Successor{};
    if (s == "zero") return tail::ZeroPoint{};
    schema_fail(ptr, "unknown tail rule '" + s + "'");
  }
  if (!j.is_object() || j.size() != 1) schema_fail(ptr, "expected a tail rule name or a one-field object");
  const auto& [key, value] = *j.items().begin();
  const auto where = pointer_join(ptr, key);
  if (key == "constant") return tail::Constant{parse_component_map(value, where)};
  if (key == "numeral") return tail::Numeral{parse_natural(value, where)};
  if (key == "cyclic") {
    tail::Cyclic c;
    for (std::size_t i = 0; i < array(value, where).size(); ++i)
      c.cycle.push_back(parse_component_map(value[i], pointer_join(where, i)));
    if (c.cycle.empty()) schema_fail(where, "the cycle must not be empty");
    return c;
  }
  schema_fail(where, "unknown tail rule");
}

Json to_json(const TailRule& r) {
  if (const auto* c = std::get_if<tail::Constant>(&r)) return {{"constant", to_json(c->map)}};
  if (const auto* m = std::get_if<tail::Numeral>(&r)) return {{"numeral", m->m}};
  if (std::holds_alternative<tail::Diagonal>(r)) return "diagonal";
  if (std::holds_alternative<tail::Successor>(r)) return "successor";
  if (std::holds_alternative<tail::ZeroPoint>(r)) return "zero";
  Json cycle = Json::array();
  for (const auto& c : std::get<tail::Cyclic>(r).cycle) cycle.push_back(to_json(c));
  return {{"cyclic", cycle}};
}

SeqMap parse_seqmap(const Json& j, const std::string& ptr) {
  check_keys(j, ptr, {"source", "target", "tail"}, {"patches"});
  auto s = parse_seqobj(j["source"], pointer_join(ptr, "source"));
  auto t = parse_seqobj(j["target"], pointer_join(ptr, "target"));
  auto rule = parse_tail_rule(j["tail"], pointer_join(ptr, "tail"));
  std::map<std::uint64_t, ComponentMap> patches;
  if (j.contains("patches")) {
    const auto where = pointer_join(ptr, "patches");
    if (!j["patches"].is_object()) schema_fail(where, "expected an object keyed by index");
    for (const auto& [k, v] : j["patches"].items())
      patches.emplace(key_natural(k, where), parse_component_map(v, pointer_join(where, k)));
  }
  return at(ptr, [&] { return SeqMap(std::move(s), std::move(t), std::move(patches), std::move(rule)); });
}

Json to_json(const SeqMap& f) {
  Json out = {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"tail", to_json(f.rule())}};
  if (!f.patches().empty()) {
    Json p = Json::object();
    for (const auto& [n, c] : f.patches()) p[std::to_string(n)] = to_json(c);
    out["patches"] = p;
  }
  return out;
}

// ---------------------------------------------------------------- categories

CategoryLit parse_category(const Json& j, const std::string& ptr) {
  using F = CategoryLit::Form;
  if (j.is_string() && j.get<std::string>() == "idempotent") return {F::Idempotent, 2};
  if (!j.is_object() || j.size() != 1) schema_fail(ptr, "expected \"idempotent\" or a one-field object");
  const auto& [key, value] = *j.items().begin();
  const auto where = pointer_join(ptr, key);
  const auto n = parse_natural(value, where);
  if (n == 0 || n > 16) schema_fail(where, "size must be between 1 and 16");
  if (key == "cyclic") return {F::Cyclic, n};
  if (key == "chain") return {F::Chain, n};
  if (key == "codiscrete") return {F::Codiscrete, n};
  schema_fail(where, "unknown category form");
}

Json to_json(const CategoryLit& c) {
  using F = CategoryLit::Form;
  switch (c.form) {
    case F::Cyclic: return {{"cyclic", c.n}};
    case F::Chain: return {{"chain", c.n}};
    case F::Codiscrete: return {{"codiscrete", c.n}};
    case F::Idempotent: return "idempotent";
  }
  return nullptr;
}

SmallCategory make_category(const CategoryLit& c) {
  using F = CategoryLit::Form;
  switch (c.form) {
    case F::Cyclic: return cyclic_group(c.n);
    case F::Chain: return chain(c.n);
    case F::Codiscrete: return codiscrete(c.n);
    case F::Idempotent: return idempotent_monoid();
  }
  fail(ErrorKind::InvalidArgument, "unknown category form");
}

// ---------------------------------------------------------------- simplicial sets

CellRef parse_cell_ref(const Json& j, const std::string& ptr, std::size_t level) {
  if (j.is_number_unsigned()) return CellRef{level, j.get<std::size_t>(), identity_seq(level + 1)};
  check_keys(j, ptr, {"dim", "cell", "map"});
  CellRef r{parse_natural(j["dim"], pointer_join(ptr, "dim")), parse_natural(j["cell"], pointer_join(ptr, "cell")),
            to_sizes(parse_naturals(j["map"], pointer_join(ptr, "map")))};
  if (r.map.size() != level + 1) schema_fail(pointer_join(ptr, "map"), "expected " + std::to_string(level + 1) + " entries");
  return r;
}

Json to_json(const CellRef& r, std::size_t level) {
  if (r.dim == level) return r.cell;
  return {{"dim", r.dim}, {"cell", r.cell}, {"map", r.map}};
}

namespace {

constexpr std::size_t max_dim_bound = 6;

std::size_t parse_dim_bound(const Json& j, const std::string& ptr) {
  const auto d = parse_natural(field(j, ptr, "dim_bound"), pointer_join(ptr, "dim_bound"));
  if (d > max_dim_bound) schema_fail(pointer_join(ptr, "dim_bound"), "dimension bounds above 6 are not supported");
  return d;
}

std::size_t small(const Json& j, const std::string& ptr, std::size_t limit) {
  const auto n = parse_natural(j, ptr);
  if (n > limit) schema_fail(ptr, "must be at most " + std::to_string(limit));
  return n;
}

}  // namespace

SimpSetLit parse_simpset(const Json& j, const std::string& ptr) {
  using F = SimpSetLit::Form;
  SimpSetLit s;
  s.dim_bound = parse_dim_bound(j, ptr);
  if (j.contains("nerve")) {
    check_keys(j, ptr, {"dim_bound", "nerve"});
    s.form = F::Nerve;
    s.category = parse_category(j["nerve"], pointer_join(ptr, "nerve"));
  } else if (j.contains("simplex")) {
    check_keys(j, ptr, {"dim_bound", "simplex"});
    s.form = F::Simplex;
    s.n = small(j["simplex"], pointer_join(ptr, "simplex"), 8);
  } else if (j.contains("boundary")) {
    check_keys(j, ptr, {"dim_bound", "boundary"});
    s.form = F::Boundary;
    s.n = small(j["boundary"], pointer_join(ptr, "boundary"), 8);
  } else if (j.contains("horn")) {
    check_keys(j, ptr, {"dim_bound", "horn"});
    s.form = F::Horn;
    const auto where = pointer_join(ptr, "horn");
    const auto& h = j["horn"];
    if (!h.is_array() || h.size() != 2) schema_fail(where, "expected [n, k]");
    s.n = small(h[0], pointer_join(where, 0), 8);
    s.k = small(h[1], pointer_join(where, 1), 8);
    if (s.n == 0 || s.k > s.n) schema_fail(where, "a horn needs 0 <= k <= n and n >= 1");
  } else {
    check_keys(j, ptr, {"dim_bound", "cells"});
    s.form = F::Cells;
    const auto where = pointer_join(ptr, "cells");
    const auto& c = j["cells"];
    if (!c.is_object()) schema_fail(where, "expected an object keyed by dimension");
    s.cells.dim_bound = s.dim_bound;
    s.cells.vertices = parse_labels(field(c, where, "0"), pointer_join(where, "0"));
    for (const auto& [k, v] : c.items()) {
      const auto m = key_natural(k, where);
      if (m == 0) continue;
      const auto level_ptr = pointer_join(where, k);
      if (m > s.dim_bound) schema_fail(level_ptr, "cells above the dimension bound");
      if (array(v, level_ptr).empty()) continue;
      if (s.cells.cells.size() <= m) s.cells.cells.resize(m + 1);
      for (std::size_t y = 0; y < v.size(); ++y) {
        const auto cell_ptr = pointer_join(level_ptr, y);
        const auto& faces = array(v[y], cell_ptr);
        if (faces.size() != m + 1) schema_fail(cell_ptr, "a " + k + "-cell needs " + std::to_string(m + 1) + " faces");
        std::vector<CellRef> refs;
        for (std::size_t i = 0; i < faces.size(); ++i) refs.push_back(parse_cell_ref(faces[i], pointer_join(cell_ptr, i), m - 1));
        s.cells.cells[m].push_back(std::move(refs));
      }
    }
  }
  return s;
}

Json to_json(const SimpSetLit& s) {
  using F = SimpSetLit::Form;
  Json out = {{"dim_bound", s.dim_bound}};
  switch (s.form) {
    case F::Nerve: out["nerve"] = to_json(s.category); break;
    case F::Simplex: out["simplex"] = s.n; break;
    case F::Boundary: out["boundary"] = s.n; break;
    case F::Horn: out["horn"] = {s.n, s.k}; break;
    case F::Cells: {
      Json cells = {{"0", s.cells.vertices}};
      for (std::size_t m = 1; m < s.cells.cells.size(); ++m) {
        if (s.cells.cells[m].empty()) continue;
        Json level = Json::array();
        for (const auto& faces : s.cells.cells[m]) {
          Json fs = Json::array();
          for (const auto& r : faces) fs.push_back(to_json(r, m - 1));
          level.push_back(fs);
        }
        cells[std::to_string(m)] = level;
      }
      out["cells"] = cells;
      break;
    }
  }
  return out;
}

SimpSet make_simpset(const SimpSetLit& s, const std::string& ptr) {
  using F = SimpSetLit::Form;
  return at(ptr, [&] {
    switch (s.form) {
      case F::Cells: return SimpSet::from_cells(s.cells);
      case F::Nerve: return nerve(make_category(s.category), s.dim_bound);
      case F::Simplex: return standard_simplex(s.n, s.dim_bound);
      case F::Horn: return horn(s.n, s.k, s.dim_bound);
      case F::Boundary: return boundary(s.n, s.dim_bound);
    }
    fail(ErrorKind::InvalidArgument, "unknown simplicial set form");
  });
}

SimpMap map_from_cells(const SimpSet& source, const SimpSet& target, const CellImages& images, const std::string& ptr) {
  const std::size_t d = source.dim_bound();
  if (target.dim_bound() != d) schema_fail(ptr, "source and target have different dimension bounds");
  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::vector<std::map<Key, std::size_t>> lookup(d + 1);
  std::vector<std::size_t> target_cells(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    target_cells[n] = target.nondegenerate(n).size();
    for (std::size_t y = 0; y < target.count(n); ++y) {
      auto r = target.decompose(n, y);
      lookup[n].emplace(Key{r.dim, r.cell, std::move(r.map)}, y);
    }
  }
  std::vector<std::vector<CellRef>> given(d + 1);
  for (std::size_t m = 0; m <= d; ++m) {
    const auto level_ptr = pointer_join(ptr, std::to_string(m));
    const std::size_t cells = source.nondegenerate(m).size();
    if (m < images.size()) given[m] = images[m];
    if (given[m].size() != cells)
      schema_fail(level_ptr, "expected images of " + std::to_string(cells) + " nondegenerate " + std::to_string(m) + "-cells");
    for (std::size_t c = 0; c < cells; ++c) {
      const auto& r = given[m][c];
      const auto where = pointer_join(level_ptr, c);
      bool ok = r.dim <= m && r.cell < target_cells[r.dim] && r.map.size() == m + 1 && r.map.front() == 0 &&
                r.map.back() == r.dim;
      for (std::size_t i = 1; i < r.map.size() && ok; ++i) ok = r.map[i] == r.map[i - 1] || r.map[i] == r.map[i - 1] + 1;
      if (!ok) schema_fail(where, "not a simplex of the target");
    }
  }
  for (std::size_t m = d + 1; m < images.size(); ++m)
    if (!images[m].empty()) schema_fail(pointer_join(ptr, std::to_string(m)), "images above the dimension bound");

  SimpMap f;
  f.levels.resize(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    f.levels[n].resize(source.count(n));
    for (std::size_t x = 0; x < source.count(n); ++x) {
      const auto r = source.decompose(n, x);
      const auto& img = given[r.dim][r.cell];
      std::vector<std::size_t> composite(n + 1);
      for (std::size_t i = 0; i <= n; ++i) composite[i] = img.map[r.map[i]];
      f.levels[n][x] = lookup[n].at(Key{img.dim, img.cell, composite});
    }
  }
  if (!is_simplicial_map(source, target, f)) schema_fail(ptr, "the images do not commute with faces");
  return f;
}

namespace {

CellImages parse_images(const Json& j, const std::string& ptr) {
  if (!j.is_object()) schema_fail(ptr, "expected an object keyed by dimension");
  CellImages out;
  for (const auto& [k, v] : j.items()) {
    const auto m = key_natural(k, ptr);
    if (m > max_dim_bound) schema_fail(pointer_join(ptr, k), "dimension too large");
    const auto level_ptr = pointer_join(ptr, k);
    if (array(v, level_ptr).empty()) continue;
    if (out.size() <= m) out.resize(m + 1);
    for (std::size_t c = 0; c < v.size(); ++c) out[m].push_back(parse_cell_ref(v[c], pointer_join(level_ptr, c), m));
  }
  return out;
}

Json images_to_json(const CellImages& images) {
  Json out = Json::object();
  for (std::size_t m = 0; m < images.size(); ++m) {
    if (images[m].empty()) continue;
    Json level = Json::array();
    for (const auto& r : images[m]) level.push_back(to_json(r, m));
    out[std::to_string(m)] = level;
  }
  return out;
}

}  // namespace

DiagramLit parse_diagram(const Json& j, const std::string& ptr) {
  check_keys(j, ptr, {"objects"}, {"arrows"});
  DiagramLit d;
  const auto obj_ptr = pointer_join(ptr, "objects");
  for (std::size_t i = 0; i < array(j["objects"], obj_ptr).size(); ++i)
    d.objects.push_back(parse_simpset(j["objects"][i], pointer_join(obj_ptr, i)));
  if (d.objects.empty()) schema_fail(obj_ptr, "a diagram needs at least one object");
  if (j.contains("arrows")) {
    const auto arr_ptr = pointer_join(ptr, "arrows");
    for (std::size_t i = 0; i < array(j["arrows"], arr_ptr).size(); ++i) {
      const auto where = pointer_join(arr_ptr, i);
      const auto& a = j["arrows"][i];
      check_keys(a, where, {"from", "to", "map"});
      DiagramLit::ArrowLit arrow{parse_natural(a["from"], pointer_join(where, "from")),
                                 parse_natural(a["to"], pointer_join(where, "to")),
                                 parse_images(a["map"], pointer_join(where, "map"))};
      if (arrow.from >= d.objects.size()) schema_fail(pointer_join(where, "from"), "no such object");
      if (arrow.to >= d.objects.size()) schema_fail(pointer_join(where, "to"), "no such object");
      d.arrows.push_back(std::move(arrow));
    }
  }
  return d;
}

Json to_json(const DiagramLit& d) {
  Json objects = Json::array();
  for (const auto& o : d.objects) objects.push_back(to_json(o));
  Json out = {{"objects", objects}};
  if (!d.arrows.empty()) {
    Json arrows = Json::array();
    for (const auto& a : d.arrows) arrows.push_back({{"from", a.from}, {"to", a.to}, {"map", images_to_json(a.images)}});
    out["arrows"] = arrows;
  }
  return out;
}

SimpDiagram make_diagram(const DiagramLit& d, const std::string& ptr) {
  SimpDiagram out;
  const auto obj_ptr = pointer_join(ptr, "objects");
  for (std::size_t i = 0; i < d.objects.size(); ++i) out.objects.push_back(make_simpset(d.objects[i], pointer_join(obj_ptr, i)));
  const auto arr_ptr = pointer_join(ptr, "arrows");
  for (std::size_t i = 0; i < d.arrows.size(); ++i) {
    const auto& a = d.arrows[i];
    out.arrows.push_back(
        {a.from, a.to, map_from_cells(out.objects[a.from], out.objects[a.to], a.images, pointer_join(pointer_join(arr_ptr, i), "map"))});
  }
  at(ptr, [&] { validate(out); });
  return out;
}

EnrichedLit parse_enriched(const Json& j, const std::string& ptr) {
  check_keys(j, ptr, {"category"}, {"group_order"});
  EnrichedLit e{parse_category(j["category"], pointer_join(ptr, "category")), 1};
  if (j.contains("group_order")) {
    e.group_order = parse_natural(j["group_order"], pointer_join(ptr, "group_order"));
    if (e.group_order == 0 || e.group_order > 8) schema_fail(pointer_join(ptr, "group_order"), "must be between 1 and 8");
  }
  return e;
}

Json to_json(const EnrichedLit& e) {
  Json out = {{"category", to_json(e.category)}};
  if (e.group_order != 1) out["group_order"] = e.group_order;
  return out;
}

}  // namespace germcat::io
