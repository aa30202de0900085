#include <algorithm>
#include <map>
#include <memory>

#include "criteria.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/simplicial/enriched.hpp"
#include "germcat/simplicial/lifting.hpp"
#include "simplicial_oracles.hpp"

namespace germcat::acceptance {

using Json = nlohmann::json;

namespace {

struct EnrichedFixture {
  std::string name;
  std::vector<std::string> index;
  std::vector<EnrichedCat> components;
  Filter filter;
};

std::vector<EnrichedFixture> enriched_fixtures(const std::vector<std::pair<std::string, io::Request>>& fixtures) {
  std::vector<EnrichedFixture> out;
  for (const auto& [name, r] : fixtures) {
    const auto* q = std::get_if<io::QuotientRequest>(&r.payload);
    if (!q || q->base != io::QuotientRequest::Base::Enriched) continue;
    std::vector<EnrichedCat> comps;
    for (const auto& c : q->components)
      comps.push_back(enriched_from_category(io::make_category(c.category), c.group_order, q->dim_bound));
    auto poset = std::make_shared<const Poset>(Poset::powerset(q->index));
    out.push_back({name, q->index, std::move(comps), io::make_filter(q->filter, poset)});
  }
  return out;
}

// Mixed-radix digits, first digit slowest.
std::vector<std::size_t> digits(std::size_t x, const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> out(radix.size());
  for (std::size_t j = radix.size(); j-- > 0;) {
    out[j] = x % radix[j];
    x /= radix[j];
  }
  return out;
}

std::size_t number(const std::vector<std::size_t>& ds, const std::vector<std::size_t>& radix) {
  std::size_t x = 0;
  for (std::size_t j = 0; j < radix.size(); ++j) x = x * radix[j] + ds[j];
  return x;
}

std::vector<std::size_t> members_of(std::size_t stage, std::size_t arity) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity; ++i)
    if (stage >> i & 1) out.push_back(i);
  return out;
}

struct PairResult {
  bool ok = false;
  std::size_t germ_components = 0;
  std::size_t discrete_hom = 0;
};

// pi0 of the germ mapping complex against the hom-set of the filter quotient
// of the pi0-categories, the latter built as a literal colimit of finite sets
// over every filter stage.
PairResult compare_pair(const EnrichedFixture& f, const EnrichedQuotient& q, const EnrichedQuotient::Object& x,
                        const EnrichedQuotient::Object& y) {
  const std::size_t arity = f.index.size();
  std::vector<std::vector<std::size_t>> labels(arity);
  std::vector<std::size_t> counts(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    auto [l, n] = oracle::component_labels(f.components[i].hom(x[i], y[i]));
    labels[i] = std::move(l);
    counts[i] = n;
  }

  const auto& stages = f.filter.members();
  Diagram<FinSetCat> d;
  for (auto v : stages) {
    std::size_t size = 1;
    for (auto i : members_of(v, arity)) size *= counts[i];
    d.objects.push_back(FinObj::standard(size));
  }
  for (std::size_t a = 0; a < stages.size(); ++a)
    for (std::size_t b = 0; b < stages.size(); ++b) {
      if (a == b || (stages[b] & ~stages[a]) != 0) continue;
      const auto from = members_of(stages[a], arity);
      const auto to = members_of(stages[b], arity);
      std::vector<std::size_t> from_radix, to_radix;
      for (auto i : from) from_radix.push_back(counts[i]);
      for (auto i : to) to_radix.push_back(counts[i]);
      std::vector<std::size_t> assignment(d.objects[a].size());
      for (std::size_t t = 0; t < assignment.size(); ++t) {
        const auto ds = digits(t, from_radix);
        std::vector<std::size_t> kept;
        for (std::size_t p = 0; p < from.size(); ++p)
          if (stages[b] >> from[p] & 1) kept.push_back(ds[p]);
        assignment[t] = number(kept, to_radix);
      }
      d.arrows.push_back({a, b, FinMap(d.objects[a], d.objects[b], assignment)});
    }
  const auto colim = FinSetCat().colimit(d);

  const std::size_t least = f.filter.minimum();
  const std::size_t least_pos = std::find(stages.begin(), stages.end(), least) - stages.begin();
  const auto factors = members_of(least, arity);
  std::vector<std::size_t> vertex_radix, component_radix;
  for (auto i : factors) {
    vertex_radix.push_back(f.components[i].hom(x[i], y[i]).count(0));
    component_radix.push_back(counts[i]);
  }

  const auto germ = q.germ_mapping_complex(x, y);
  const auto lib = pi0(germ);
  std::map<std::size_t, std::size_t> image;  // library component -> colimit element
  bool ok = lib.count == oracle::component_count(germ);
  for (std::size_t v = 0; v < germ.count(0) && ok; ++v) {
    const auto ds = digits(v, vertex_radix);
    std::vector<std::size_t> cs;
    for (std::size_t p = 0; p < factors.size(); ++p) cs.push_back(labels[factors[p]][ds[p]]);
    const auto target = colim.legs[least_pos](number(cs, component_radix));
    const auto [it, fresh] = image.emplace(lib.component_of[v], target);
    ok = fresh || it->second == target;
  }
  std::vector<std::size_t> hit;
  for (const auto& [comp, t] : image) hit.push_back(t);
  std::sort(hit.begin(), hit.end());
  ok = ok && image.size() == lib.count && std::adjacent_find(hit.begin(), hit.end()) == hit.end() &&
       hit.size() == colim.apex.size();
  return {ok, lib.count, colim.apex.size()};
}

}  // namespace

// ------------------------------------------------------------------ 5

Outcome truncation_comparison(const Config& c) {
  Outcome o{5, "truncation-comparison"};
  const auto fixtures = enriched_fixtures(load_fixtures(c.fixture_dir));
  std::size_t pairs = 0, failures = 0;
  Json per = Json::object();
  for (const auto& f : fixtures) {
    for (const auto& k : f.components)
      if (!check_enrichment(k).ok) ++failures;
    const EnrichedQuotient q(f.index, f.components, f.filter);
    std::size_t local = 0, local_fail = 0;
    for (const auto& x : q.objects())
      for (const auto& y : q.objects()) {
        const auto r = compare_pair(f, q, x, y);
        ++local;
        local_fail += r.ok ? 0 : 1;
      }
    pairs += local;
    failures += local_fail;
    per[f.name] = {{"object_pairs", local}, {"failures", local_fail}};
  }
  o.passed = !fixtures.empty() && failures == 0;
  o.details = {{"fixtures", per}, {"object_pairs", pairs}, {"failures", failures}};
  o.summary = std::to_string(pairs) + " object pairs over " + std::to_string(fixtures.size()) +
              " enriched fixtures: pi0 of each germ mapping complex is in bijection with the discrete quotient hom-set";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome simplicial_layer(const Config& c) {
  Outcome o{8, "simplicial-layer"};
  const auto fixtures = load_fixtures(c.fixture_dir);
  std::size_t diagrams = 0, pi0_failures = 0, kan_checked = 0, kan_mismatches = 0;
  std::size_t filtered = 0, filtered_failures = 0, controls = 0, control_failures = 0;

  auto kan_agrees = [&](const SimpSet& x, const std::vector<GeneratingMono>& gens, std::size_t max_n) {
    ++kan_checked;
    if (has_rlp(x, gens).holds != oracle::kan_up_to(x, max_n)) ++kan_mismatches;
  };

  for (const auto& [name, r] : fixtures) {
    const auto* p = std::get_if<io::RlpRequest>(&r.payload);
    if (!p) continue;
    if (p->target) {
      const auto x = io::make_simpset(*p->target, "/target");
      kan_agrees(x, horn_generators(p->max_n, x.dim_bound()), p->max_n);
      continue;
    }
    ++diagrams;
    const auto d = io::make_diagram(*p->diagram, "/diagram");
    const std::size_t dim = d.objects.front().dim_bound();
    const auto gens = horn_generators(p->max_n, dim);

    // pi0 of the colimit against the colimit of independently computed pi0 sets.
    const auto colim = colimit(d);
    Diagram<FinSetCat> sets;
    std::vector<std::vector<std::size_t>> labels;
    for (const auto& x : d.objects) {
      auto [l, n] = oracle::component_labels(x);
      labels.push_back(std::move(l));
      sets.objects.push_back(FinObj::standard(n));
    }
    for (const auto& a : d.arrows) {
      std::vector<std::size_t> assignment(sets.objects[a.from].size());
      for (std::size_t v = 0; v < d.objects[a.from].count(0); ++v)
        assignment[labels[a.from][v]] = labels[a.to][a.map.levels[0][v]];
      sets.arrows.push_back({a.from, a.to, FinMap(sets.objects[a.from], sets.objects[a.to], assignment)});
    }
    const auto literal = FinSetCat().colimit(sets).apex.size();
    const auto cmp = pi0_commutes_check(d);
    if (!cmp.bijective || cmp.of_colimit != oracle::component_count(colim.apex) || cmp.colimit_of != literal)
      ++pi0_failures;

    for (const auto& x : d.objects) kan_agrees(x, gens, p->max_n);
    kan_agrees(colim.apex, gens, p->max_n);

    const auto pres = rlp_preserved_check(d, gens);
    if (r.expect == std::optional<std::string>("fail")) {
      ++controls;
      if (pres.holds) ++control_failures;
    } else if (pres.shape_filtered) {
      ++filtered;
      if (!pres.holds) ++filtered_failures;
    }
  }

  // Every single-entry corruption of the composition tables of one fixture.
  std::size_t mutants = 0, missed = 0;
  std::string mutated;
  const auto enriched = enriched_fixtures(fixtures);
  if (!enriched.empty()) {
    mutated = enriched.front().name;
    for (const auto& k : enriched.front().components) {
      if (!check_enrichment(k).ok) ++missed;
      const std::size_t n = k.size();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t cc = 0; cc < n; ++cc) {
            const std::size_t triple = (a * n + b) * n + cc;
            for (std::size_t level = 0; level <= k.dim_bound; ++level) {
              const auto& table = k.composition[triple][level];
              const std::size_t range = k.hom(a, cc).count(level);
              for (std::size_t e = 0; e < table.size(); ++e)
                for (std::size_t v = 0; v < range; ++v) {
                  if (v == table[e]) continue;
                  ++mutants;
                  if (check_enrichment(with_entry(k, triple, level, e, v)).ok) ++missed;
                }
            }
          }
    }
  }

  o.passed = diagrams > 0 && pi0_failures == 0 && kan_mismatches == 0 && filtered > 0 && filtered_failures == 0 &&
             controls > 0 && control_failures == 0 && mutants > 0 && missed == 0;
  o.details = {{"diagrams", diagrams},
               {"pi0_failures", pi0_failures},
               {"lifting_checks", kan_checked},
               {"lifting_mismatches", kan_mismatches},
               {"filtered_diagrams", filtered},
               {"filtered_failures", filtered_failures},
               {"negative_controls", controls},
               {"negative_control_failures", control_failures},
               {"mutation_fixture", mutated},
               {"mutants", mutants},
               {"mutants_missed", missed}};
  o.summary = std::to_string(diagrams) + " fixture diagrams: pi0 commutes with colimits, " + std::to_string(kan_checked) +
              " lifting verdicts match filler search, " + std::to_string(filtered) + " filtered diagrams keep the lifting property and " +
              std::to_string(controls) + " negative control loses it; " + std::to_string(mutants - missed) + " of " +
              std::to_string(mutants) + " corrupted composition tables rejected";
  return o;
}

}  // namespace germcat::acceptance
