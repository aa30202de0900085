#include "germcat/io/request.hpp"

#include <algorithm>
#include <memory>

#include "germcat/error.hpp"
#include "germcat/simplicial/lifting.hpp"

namespace germcat::io {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const std::string root;

std::vector<std::string> parse_index(const Json& j, const std::string& ptr) {
  auto index = parse_labels(j, ptr);
  if (index.empty() || index.size() > 8) schema_fail(ptr, "an index set has between 1 and 8 elements");
  auto sorted = index;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) schema_fail(ptr, "index labels repeat");
  return index;
}

// Filters on a finite poset are checked against it while parsing.
void check_filter(const FilterLit& f, const Poset& p) { (void)make_filter(f, std::make_shared<const Poset>(p)); }

CheckFilterRequest parse_check_filter(const Json& j) {
  check_keys(j, root, {"command", "poset", "subset"}, {"seed", "expect"});
  CheckFilterRequest r;
  r.poset = parse_poset(j["poset"], "/poset");
  auto labels = parse_labels(j["subset"], "/subset");
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto x = r.poset.find(labels[i]);
    if (!x) schema_fail(pointer_join("/subset", i), "'" + labels[i] + "' is not an element of the poset");
    indices.push_back(*x);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (auto x : indices) r.subset.push_back(r.poset.label(x));
  return r;
}

QuotientRequest parse_quotient(const Json& j) {
  QuotientRequest r;
  const auto& base = field(j, root, "base");
  if (base.is_string() && base.get<std::string>() == "finset") {
    r.base = QuotientRequest::Base::FinSet;
  } else if (base.is_object() && base.contains("power")) {
    check_keys(base, "/base", {"power"});
    r.base = QuotientRequest::Base::Power;
    r.index = parse_index(base["power"], "/base/power");
  } else if (base.is_object() && base.contains("enriched")) {
    check_keys(base, "/base", {"enriched"});
    r.base = QuotientRequest::Base::Enriched;
    const auto& e = base["enriched"];
    const std::string ptr = "/base/enriched";
    check_keys(e, ptr, {"index", "components", "dim_bound"});
    r.index = parse_index(e["index"], ptr + "/index");
    const auto d = parse_natural(e["dim_bound"], ptr + "/dim_bound");
    if (d > 3) schema_fail(ptr + "/dim_bound", "enriched bases are supported up to dimension 3");
    r.dim_bound = d;
    const auto& comps = e["components"];
    if (!comps.is_array() || comps.size() != r.index.size())
      schema_fail(ptr + "/components", "expected one component per index element");
    for (std::size_t i = 0; i < comps.size(); ++i)
      r.components.push_back(parse_enriched(comps[i], pointer_join(ptr + "/components", i)));
  } else {
    schema_fail("/base", "expected \"finset\", {\"power\": [..]} or {\"enriched\": {..}}");
  }

  if (r.base == QuotientRequest::Base::Enriched)
    check_keys(j, root, {"command", "base", "filter"}, {"seed", "expect"});
  else
    check_keys(j, root, {"command", "base", "filter", "objects"}, {"seed", "expect"});

  r.filter = parse_filter(j["filter"], "/filter");
  check_filter(r.filter, r.base == QuotientRequest::Base::FinSet ? Poset::chain(2) : Poset::powerset(r.index));

  if (r.base != QuotientRequest::Base::Enriched) {
    const auto& objs = j["objects"];
    if (!objs.is_array() || objs.empty()) schema_fail("/objects", "expected a nonempty array of objects");
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const auto ptr = pointer_join("/objects", i);
      if (r.base == QuotientRequest::Base::FinSet) {
        r.objects.push_back({parse_set(objs[i], ptr)});
        continue;
      }
      if (!objs[i].is_array() || objs[i].size() != r.index.size())
        schema_fail(ptr, "expected one set per index element");
      std::vector<FinObj> parts;
      for (std::size_t k = 0; k < objs[i].size(); ++k) parts.push_back(parse_set(objs[i][k], pointer_join(ptr, k)));
      r.objects.push_back(std::move(parts));
    }
  }
  return r;
}

std::vector<FinMap> parse_tuple(const Json& j, const std::string& ptr, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema_fail(ptr, "expected one finite map per index element");
  std::vector<FinMap> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_finmap(j[i], pointer_join(ptr, i)));
  return out;
}

LosRequest parse_los(const Json& j) {
  check_keys(j, root, {"command", "index", "filter", "f"}, {"g", "seed", "expect"});
  LosRequest r;
  r.filter = parse_filter(j["filter"], "/filter");
  r.has_g = j.contains("g");
  if (j["index"].is_string() && j["index"].get<std::string>() == "N") {
    if (!r.filter.over_naturals()) schema_fail("/filter", "over N the filter is frechet or principal_definable");
    r.seq_f = parse_seqmap(j["f"], "/f");
    if (r.has_g) {
      r.seq_g = parse_seqmap(j["g"], "/g");
      if (!(r.seq_f->source() == r.seq_g->source()) || !(r.seq_f->target() == r.seq_g->target()))
        schema_fail("/g", "g is not parallel to f");
    }
    return r;
  }
  r.index = parse_index(j["index"], "/index");
  check_filter(r.filter, Poset::powerset(*r.index));
  r.f = parse_tuple(j["f"], "/f", r.index->size());
  if (r.has_g) {
    r.g = parse_tuple(j["g"], "/g", r.index->size());
    for (std::size_t i = 0; i < r.f.size(); ++i)
      if (!(r.f[i].source() == r.g[i].source()) || !(r.f[i].target() == r.g[i].target()))
        schema_fail(pointer_join("/g", i), "not parallel to the matching component of f");
  }
  return r;
}

NnoRequest parse_nno(const Json& j) {
  check_keys(j, root, {"command", "M"}, {"seed", "expect"});
  const auto m = parse_natural(j["M"], "/M");
  if (m > 10000) schema_fail("/M", "bound too large");
  return {m};
}

RlpRequest parse_rlp(const Json& j) {
  RlpRequest r;
  if (j.contains("diagram"))
    check_keys(j, root, {"command", "generators", "diagram"}, {"seed", "expect"});
  else
    check_keys(j, root, {"command", "generators", "target"}, {"seed", "expect"});
  const auto& g = j["generators"];
  if (!g.is_object() || g.size() != 1) schema_fail("/generators", "expected {\"family\": max_dimension}");
  const auto& [family, n] = *g.items().begin();
  const auto& families = generator_families();
  const auto it = std::find_if(families.begin(), families.end(), [&](const auto& f) { return f.name == family; });
  if (it == families.end()) schema_fail(pointer_join("/generators", family), "unknown generator family");
  if (!it->instantiated)
    schema_fail(pointer_join("/generators", family), "the " + family + " family has no simplicial instance");
  r.family = family;
  r.max_n = parse_natural(n, pointer_join("/generators", family));
  if (r.max_n == 0 || r.max_n > 4) schema_fail(pointer_join("/generators", family), "must be between 1 and 4");
  if (j.contains("diagram")) {
    r.diagram = parse_diagram(j["diagram"], "/diagram");
    for (std::size_t i = 0; i < r.diagram->objects.size(); ++i)
      if (r.diagram->objects[i].dim_bound < r.max_n)
        schema_fail(pointer_join("/diagram/objects", i) + "/dim_bound", "below the generator dimension");
  } else {
    r.target = parse_simpset(j["target"], "/target");
    if (r.target->dim_bound < r.max_n) schema_fail("/target/dim_bound", "below the generator dimension");
  }
  return r;
}

ReportAllRequest parse_report_all(const Json& j) {
  check_keys(j, root, {"command"}, {"fixtures", "seed", "expect"});
  ReportAllRequest r;
  if (j.contains("fixtures")) {
    if (!j["fixtures"].is_string()) schema_fail("/fixtures", "expected a directory path");
    r.fixtures = j["fixtures"].get<std::string>();
  }
  return r;
}

Json quotient_json(const QuotientRequest& r) {
  using B = QuotientRequest::Base;
  Json out = {{"filter", to_json(r.filter)}};
  if (r.base == B::FinSet) out["base"] = "finset";
  if (r.base == B::Power) out["base"] = {{"power", r.index}};
  if (r.base == B::Enriched) {
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(to_json(c));
    out["base"] = {{"enriched", {{"index", r.index}, {"components", comps}, {"dim_bound", r.dim_bound}}}};
    return out;
  }
  Json objs = Json::array();
  for (const auto& o : r.objects) {
    if (r.base == B::FinSet) {
      objs.push_back(to_json(o.at(0)));
      continue;
    }
    Json parts = Json::array();
    for (const auto& p : o) parts.push_back(to_json(p));
    objs.push_back(parts);
  }
  out["objects"] = objs;
  return out;
}

Json tuple_json(const std::vector<FinMap>& t) {
  Json out = Json::array();
  for (const auto& f : t) out.push_back(to_json(f));
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-filter", "quotient", "los-check", "nno-witness", "rlp-check", "report-all"};
  return names;
}

std::string Request::command() const { return command_names().at(payload.index()); }

Request parse_request(const Json& j) {
  if (!j.is_object()) schema_fail("/", "a request is a JSON object");
  const auto& c = field(j, root, "command");
  if (!c.is_string()) schema_fail("/command", "expected a command name");
  const auto command = c.get<std::string>();
  Request r;
  if (command == "check-filter")
    r.payload = parse_check_filter(j);
  else if (command == "quotient")
    r.payload = parse_quotient(j);
  else if (command == "los-check")
    r.payload = parse_los(j);
  else if (command == "nno-witness")
    r.payload = parse_nno(j);
  else if (command == "rlp-check")
    r.payload = parse_rlp(j);
  else if (command == "report-all")
    r.payload = parse_report_all(j);
  else
    schema_fail("/command", "unknown command '" + command + "'");
  if (j.contains("seed")) r.seed = parse_natural(j["seed"], "/seed");
  if (j.contains("expect")) {
    const auto& e = j["expect"];
    if (!e.is_string() || (e != "pass" && e != "fail" && e != "error"))
      schema_fail("/expect", "expected pass, fail or error");
    r.expect = e.get<std::string>();
  }
  return r;
}

Request parse_request(const std::string& command, const Json& j) {
  if (!j.is_object()) schema_fail("/", "a request is a JSON object");
  if (j.contains("command") && j["command"] != command)
    schema_fail("/command", "the file asks for a different command than the command line");
  Json full = j;
  full["command"] = command;
  return parse_request(full);
}

Json to_json(const Request& r) {
  Json out = std::visit(
      overloaded{
          [](const CheckFilterRequest& c) -> Json { return {{"poset", to_json(c.poset)}, {"subset", c.subset}}; },
          [](const QuotientRequest& q) { return quotient_json(q); },
          [](const LosRequest& l) -> Json {
            Json out = {{"filter", to_json(l.filter)}};
            if (l.index) {
              out["index"] = *l.index;
              out["f"] = tuple_json(l.f);
              if (l.has_g) out["g"] = tuple_json(l.g);
            } else {
              out["index"] = "N";
              out["f"] = to_json(*l.seq_f);
              if (l.has_g) out["g"] = to_json(*l.seq_g);
            }
            return out;
          },
          [](const NnoRequest& n) -> Json { return {{"M", n.bound}}; },
          [](const RlpRequest& p) -> Json {
            Json out = {{"generators", {{p.family, p.max_n}}}};
            if (p.diagram) out["diagram"] = to_json(*p.diagram);
            if (p.target) out["target"] = to_json(*p.target);
            return out;
          },
          [](const ReportAllRequest& a) -> Json {
            Json out = Json::object();
            if (a.fixtures) out["fixtures"] = *a.fixtures;
            return out;
          },
      },
      r.payload);
  out["command"] = r.command();
  if (r.seed) out["seed"] = *r.seed;
  if (r.expect) out["expect"] = *r.expect;
  return out;
}

}  // namespace germcat::io
