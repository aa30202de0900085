#include "criteria.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

#include "category_oracles.hpp"
#include "germ_oracles.hpp"
#include "germcat/error.hpp"
#include "germcat/filterprod/filterprod.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/power.hpp"
#include "germcat/fincat/universal.hpp"
#include "germcat/germ/quotient.hpp"
#include "oracles.hpp"

#ifndef GERMCAT_FIXTURE_DIR
#define GERMCAT_FIXTURE_DIR "tests/fixtures"
#endif

namespace germcat::acceptance {

using Json = nlohmann::json;

std::string default_fixture_dir() { return GERMCAT_FIXTURE_DIR; }

std::vector<std::pair<std::string, io::Request>> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, io::Request>> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    try {
      out.emplace_back(path.filename().string(), io::parse_request(Json::parse(in)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.filename().string() + ": " + e.what());
    }
  }
  return out;
}

std::string key(const Outcome& o) { return std::to_string(o.id) + "-" + o.name; }

namespace {

using Pow = PowerCat<FinSetCat>;
using PowQ = Quotient<Pow>;
using SetQ = Quotient<FinSetCat>;

const FinSetCat set;

FinObj obj(std::size_t n) { return FinObj::standard(n); }

FinMap random_map(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (auto& v : a) v = rng() % y.size();
  return FinMap(x, y, a);
}

FinMap random_permutation(const FinObj& x, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  for (std::size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[rng() % i]);
  return FinMap(x, x, a);
}

std::vector<std::string> index_of_size(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

// Power objects with the given part sizes.
Pow::Object pobj(const std::vector<std::size_t>& sizes) {
  Pow::Object o;
  for (auto s : sizes) o.parts.push_back(obj(s));
  return o;
}

// Every object whose part sizes are at most `each` and add up to at most `total`.
std::vector<Pow::Object> small_objects(std::size_t arity, std::size_t each, std::size_t total) {
  std::vector<Pow::Object> out;
  std::vector<std::size_t> sizes(arity, 0);
  while (true) {
    std::size_t sum = 0;
    for (auto s : sizes) sum += s;
    if (sum <= total) out.push_back(pobj(sizes));
    std::size_t j = arity;
    while (j-- > 0) {
      if (++sizes[j] <= each) break;
      sizes[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

Pow::Object random_object(std::size_t arity, std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  std::vector<std::size_t> sizes(arity);
  for (auto& s : sizes) s = lo + rng() % (hi - lo + 1);
  return pobj(sizes);
}

// A map x -> y; parts of x over an empty part of y are emptied first.
std::pair<Pow::Object, Pow::Morphism> random_pmap(Pow::Object x, const Pow::Object& y, std::mt19937_64& rng) {
  Pow::Morphism f;
  for (std::size_t i = 0; i < x.parts.size(); ++i) {
    if (y.parts[i].empty()) x.parts[i] = obj(0);
    f.parts.push_back(random_map(x.parts[i], y.parts[i], rng));
  }
  return {x, f};
}

template <class Q>
auto rep_key(const Q& q, const typename Q::Morphism& g) {
  const auto c = q.canonical(g);
  if constexpr (std::is_same_v<Q, SetQ>) {
    return c.rep.assignment();
  } else {
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& p : c.rep.parts) parts.push_back(p.assignment());
    return parts;
  }
}

// P_Phi restricted to Hom(x, y) is a bijection onto the germ hom-set.
template <class Q>
bool projection_bijective(const Q& q, const typename Q::Object& x, const typename Q::Object& y) {
  const auto base_hom = q.base().hom(x, y);
  const auto germs = q.hom(x, y);
  if (germs.size() != base_hom.size()) return false;
  std::set<decltype(rep_key(q, germs.front()))> projected, listed;
  for (const auto& f : base_hom) projected.insert(rep_key(q, q.project(f)));
  for (const auto& g : germs) listed.insert(rep_key(q, g));
  return projected.size() == base_hom.size() && projected == listed;
}

template <class Base>
Diagram<Quotient<Base>> projected(const Quotient<Base>& q, const Diagram<Base>& d) {
  Diagram<Quotient<Base>> out{d.objects, {}};
  for (const auto& a : d.arrows) out.arrows.push_back({a.from, a.to, q.project(a.map)});
  return out;
}

}  // namespace

// ------------------------------------------------------------------ 1

Outcome filter_enumeration(const Config&) {
  Outcome o{1, "filter-enumeration"};
  const std::vector<std::string> atoms{"a", "b", "c"};
  std::size_t mismatches = 0, subsets = 0;
  Json counts = Json::object();
  std::size_t two_filters = 0, two_ultra = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto p = Poset::powerset({atoms.begin(), atoms.begin() + n});
    const auto literal = oracle::literal_filters(p);
    std::vector<oracle::Mask> library;
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << p.size()); ++s) {
      ++subsets;
      if (is_filter(p, oracle::to_subset(s))) library.push_back(s);
    }
    std::vector<oracle::Mask> enumerated;
    for (const auto& f : all_filters(p)) enumerated.push_back(oracle::to_mask(f));
    std::sort(enumerated.begin(), enumerated.end());
    if (library != literal) ++mismatches;
    if (enumerated != literal) ++mismatches;
    std::size_t ultra = 0;
    for (auto s : literal) {
      const bool lib = is_ultrafilter(p, oracle::to_subset(s));
      if (lib != oracle::literal_is_ultrafilter(p, s)) ++mismatches;
      ultra += lib ? 1 : 0;
    }
    counts[std::to_string(n)] = {{"filters", literal.size()}, {"ultrafilters", ultra}};
    if (n == 2) {
      two_filters = literal.size();
      two_ultra = ultra;
    }
  }
  o.passed = mismatches == 0 && two_filters == 4 && two_ultra == 2;
  o.details = {{"by_atom_count", counts}, {"subsets_checked", subsets}, {"mismatches", mismatches}};
  o.summary = std::to_string(subsets) + " subsets of P(S), |S| <= 3, agree with the literal definition; P({a,b}) has " +
              std::to_string(two_filters) + " filters and " + std::to_string(two_ultra) + " ultrafilters";
  return o;
}

// ------------------------------------------------------------------ 2

Outcome trivial_quotients(const Config&) {
  Outcome o{2, "trivial-quotients"};
  std::size_t pairs = 0, failures = 0;

  const auto set_stages = subterminals(set);
  const SetQ set_min(set, Filter::minimal(set_stages.poset));
  const SetQ set_imp(set, Filter::improper(set_stages.poset));
  std::vector<FinObj> set_objects;
  for (std::size_t n = 0; n <= 3; ++n) set_objects.push_back(obj(n));
  for (const auto& x : set_objects)
    for (const auto& y : set_objects) {
      ++pairs;
      if (!projection_bijective(set_min, x, y)) ++failures;
      if (oracle::literal_germ_count(set_min, x, y) != set.hom(x, y).size()) ++failures;
      if (set_imp.hom(x, y).size() != 1 || oracle::literal_germ_count(set_imp, x, y) != 1) ++failures;
    }
  const auto set_classes = set_imp.skeleton(set_objects).representatives.size();

  const Pow pow(set, {"1", "2"});
  const auto pow_stages = subterminals(pow);
  const PowQ pow_min(pow, Filter::minimal(pow_stages.poset));
  const PowQ pow_imp(pow, Filter::improper(pow_stages.poset));
  const auto pow_objects = small_objects(2, 3, 3);
  for (const auto& x : pow_objects)
    for (const auto& y : pow_objects) {
      ++pairs;
      if (!projection_bijective(pow_min, x, y)) ++failures;
      if (oracle::literal_germ_count(pow_min, x, y) != pow.hom(x, y).size()) ++failures;
      if (pow_imp.hom(x, y).size() != 1 || oracle::literal_germ_count(pow_imp, x, y) != 1) ++failures;
    }
  const auto pow_classes = pow_imp.skeleton(pow_objects).representatives.size();

  o.passed = failures == 0 && set_classes == 1 && pow_classes == 1;
  o.details = {{"object_pairs", pairs},
               {"failures", failures},
               {"improper_skeleton_classes", {{"FinSet", set_classes}, {"FinSet^2", pow_classes}}}};
  o.summary = std::to_string(pairs) + " object pairs in FinSet and FinSet^2: the minimal filter keeps every hom-set, "
              "the improper one collapses them to points and the skeleton to one class";
  return o;
}

// ------------------------------------------------------------------ 3

Outcome los_suite(const Config& c) {
  Outcome o{3, "los-equivalence"};
  std::mt19937_64 rng(c.seed);
  std::size_t tuples = 0, mismatches = 0, filters = 0, agree = 0, iso = 0;
  for (std::size_t arity = 1; arity <= 4; ++arity) {
    const auto index = index_of_size(arity);
    const Pow pow(set, index);
    const auto stages = subterminals(pow);
    for (const auto& members : all_filters(*stages.poset)) {
      ++filters;
      const auto filter = Filter::make_explicit(stages.poset, members);
      const PowQ q(pow, filter);
      const auto spec = FilterProductSpec::finite(index, filter);
      for (int round = 0; round < 40; ++round) {
        std::vector<FinMap> f, g;
        for (std::size_t i = 0; i < arity; ++i) {
          const auto x = obj(rng() % 4);
          if (rng() % 2) {
            f.push_back(random_permutation(x, rng));
          } else {
            const auto y = obj(x.empty() ? rng() % 4 : 1 + rng() % 3);
            f.push_back(random_map(x, y, rng));
          }
          g.push_back(rng() % 2 ? f.back() : random_map(f.back().source(), f.back().target(), rng));
        }
        const auto pf = q.project(Pow::Morphism{f});
        const auto pg = q.project(Pow::Morphism{g});
        const bool lib_equal = los_equiv_check(spec, f, g).holds;
        const bool lib_iso = los_iso_check(spec, f).holds;
        if (lib_equal != oracle::equal_by_stage_search(q, pf, pg)) ++mismatches;
        if (lib_iso != oracle::iso_by_stage_search(q, pf)) ++mismatches;
        agree += lib_equal ? 1 : 0;
        iso += lib_iso ? 1 : 0;
        ++tuples;
      }
    }
  }
  o.passed = mismatches == 0 && tuples >= 1000;
  o.details = {{"filters", filters}, {"tuples", tuples}, {"mismatches", mismatches},
               {"germs_equal", agree}, {"germs_invertible", iso}};
  o.summary = std::to_string(tuples) + " random map tuples over " + std::to_string(filters) +
              " filters with |I| <= 4: " + std::to_string(mismatches) + " mismatches against stage-by-stage germ search";
  return o;
}

// ------------------------------------------------------------------ 4

Outcome topos_transport(const Config& c) {
  Outcome o{4, "topos-transport"};
  std::mt19937_64 rng(c.seed + 4);
  Json failures = Json::object();
  auto tally = [&](const char* what, bool ok) {
    auto& slot = failures[what];
    if (slot.is_null()) slot = 0;
    if (!ok) slot = slot.get<std::size_t>() + 1;
  };
  std::size_t contexts = 0, checks = 0;
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    const Pow pow(set, index_of_size(arity));
    const auto stages = subterminals(pow);
    auto tests = small_objects(arity, 1, arity);
    tests.push_back(pobj(std::vector<std::size_t>(arity, 2)));
    const auto sub_objects = small_objects(arity, 3, 3);
    for (const auto& members : all_filters(*stages.poset)) {
      ++contexts;
      const PowQ q(pow, Filter::make_explicit(stages.poset, members));
      auto limit_preserved = [&](const Diagram<Pow>& d) {
        ++checks;
        const auto cone = pow.limit(d);
        Cone<PowQ> image{cone.apex, {}};
        for (const auto& leg : cone.legs) image.legs.push_back(q.project(leg));
        return is_limit(q, projected(q, d), image, tests);
      };
      auto colimit_preserved = [&](const Diagram<Pow>& d) {
        ++checks;
        const auto cocone = pow.colimit(d);
        Cocone<PowQ> image{cocone.apex, {}};
        for (const auto& leg : cocone.legs) image.legs.push_back(q.project(leg));
        return is_colimit(q, projected(q, d), image, tests);
      };
      tally("terminal", limit_preserved({}));
      tally("initial", colimit_preserved({}));
      for (int round = 0; round < 2; ++round) {
        const auto x = random_object(arity, 0, 2, rng);
        const auto y = random_object(arity, 0, 2, rng);
        const auto z = random_object(arity, 1, 2, rng);
        tally("binary-products", limit_preserved(discrete_diagram<Pow>({x, y})));
        tally("coproducts", colimit_preserved(discrete_diagram<Pow>({x, y})));
        const auto [fx, f] = random_pmap(x, z, rng);
        const auto [gy, g] = random_pmap(y, z, rng);
        tally("pullbacks", limit_preserved(cospan_diagram(pow, f, g)));
        Pow::Morphism h;
        for (const auto& part : f.parts) h.parts.push_back(random_map(part.source(), part.target(), rng));
        tally("coequalizers", colimit_preserved(parallel_diagram(pow, f, h)));
      }

      // Sub(x) ~ Hom(x, Omega), naturally in x.
      for (const auto& x : sub_objects) {
        ++checks;
        const auto subs = q.subobjects(x);
        std::vector<Germ<Pow>> chis;
        bool ok = q.hom(x, q.omega()).size() == subs.size();
        for (const auto& m : subs) {
          const auto chi = q.classify(m);
          for (const auto& other : chis) ok = ok && !q.equal(other, chi);
          chis.push_back(chi);
        }
        const auto [y, f] = random_pmap(random_object(arity, 0, 2, rng), x, rng);
        const auto pf = q.project(f);
        for (std::size_t k = 0; k < subs.size() && ok; ++k) {
          const auto pb = q.limit(cospan_diagram(q, subs[k], pf));
          ok = q.equal(q.classify(pb.legs[1]), q.compose(chis[k], pf));
        }
        tally("subobject-classifier", ok);
      }

      // Pullback along f has a right adjoint: equal hom counts on both sides.
      for (int round = 0; round < 3; ++round) {
        ++checks;
        const auto yy = random_object(arity, 1, 2, rng);
        const auto [xx, f] = random_pmap(random_object(arity, 0, 2, rng), yy, rng);
        const auto [zz, p] = random_pmap(random_object(arity, 0, 2, rng), xx, rng);
        const auto [ww, g] = random_pmap(random_object(arity, 0, 2, rng), yy, rng);
        const auto [left, right] = oracle::adjunction_counts(q, q.project(f), q.project(p), q.project(g));
        tally("dependent-products", left == right);
      }
    }
  }
  std::size_t failed = 0;
  for (const auto& [k, v] : failures.items()) failed += v.get<std::size_t>();
  o.passed = failed == 0;
  o.details = {{"filters", contexts}, {"checks", checks}, {"failures", failures}};
  o.summary = std::to_string(checks) + " universal-property, classifier and adjunction checks over " +
              std::to_string(contexts) + " quotients of FinSet^I with |I| <= 3: " + std::to_string(failed) + " failures";
  return o;
}

std::vector<Outcome> library_checks(const Config& c) {
  using Check = Outcome (*)(const Config&);
  const std::vector<std::pair<Check, std::pair<int, const char*>>> checks{
      {filter_enumeration, {1, "filter-enumeration"}},   {trivial_quotients, {2, "trivial-quotients"}},
      {los_suite, {3, "los-equivalence"}},               {topos_transport, {4, "topos-transport"}},
      {truncation_comparison, {5, "truncation-comparison"}}, {nno_counterexample, {6, "nno-counterexample"}},
      {nno_preservation, {7, "nno-preservation"}},       {simplicial_layer, {8, "simplicial-layer"}},
  };
  std::vector<Outcome> out;
  for (const auto& [check, id] : checks) {
    try {
      out.push_back(check(c));
    } catch (const Error& e) {
      // A spent budget is the caller's limit, not a failed check.
      if (e.kind() == ErrorKind::Budget || e.kind() == ErrorKind::MaxSize) throw;
      Outcome failed{id.first, id.second};
      failed.summary = std::string("raised: ") + e.what();
      out.push_back(std::move(failed));
    } catch (const std::exception& e) {
      Outcome failed{id.first, id.second};
      failed.summary = std::string("raised: ") + e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

}  // namespace germcat::acceptance
