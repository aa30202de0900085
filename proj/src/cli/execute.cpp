#include "germcat/cli/execute.hpp"

#include <chrono>
#include <memory>
#include <new>
#include <sstream>

#include "criteria.hpp"
#include "germcat/budget.hpp"
#include "germcat/error.hpp"
#include "germcat/filterprod/filterprod.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/power.hpp"
#include "germcat/germ/quotient.hpp"
#include "germcat/simplicial/enriched.hpp"
#include "germcat/simplicial/lifting.hpp"

namespace germcat::cli {

int Report::exit_code() const {
  if (verdict == "pass") return 0;
  if (verdict == "fail") return 1;
  return 2;
}

namespace {

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

// ---------------------------------------------------------------- check-filter

Report check_filter(const io::CheckFilterRequest& r) {
  Report out;
  const auto& p = r.poset;
  const auto s = p.indices_of(r.subset);
  std::vector<bool> in(p.size(), false);
  for (auto x : s) in[x] = true;
  const bool ok = is_filter(p, s);
  out.witnesses["is_filter"] = ok;
  const std::string shown = "{" + join(r.subset) + "}";
  if (ok) {
    std::string least;
    for (auto x : s) {
      bool below_all = true;
      for (auto y : s) below_all = below_all && p.leq(x, y);
      if (below_all) least = p.label(x);
    }
    out.witnesses["minimum"] = least;
    out.witnesses["ultrafilter"] = is_ultrafilter(p, s);
    out.summary = shown + " is a filter with least element " + least;
  } else if (s.empty()) {
    out.witnesses["violation"] = {{"condition", "nonempty"}};
    out.summary = "the empty subset is not a filter";
  } else {
    Json violation;
    for (auto x : s)
      for (std::size_t y = 0; y < p.size() && violation.is_null(); ++y)
        if (p.leq(x, y) && !in[y])
          violation = {{"condition", "upward-closed"}, {"member", p.label(x)}, {"above", p.label(y)}};
    for (auto x : s)
      for (auto y : s) {
        if (!violation.is_null()) break;
        bool lower = false;
        for (auto z : s) lower = lower || (p.leq(z, x) && p.leq(z, y));
        if (!lower) violation = {{"condition", "downward-directed"}, {"pair", {p.label(x), p.label(y)}}};
      }
    out.witnesses["violation"] = violation;
    out.summary = shown + " is not a filter: it is not " + violation["condition"].get<std::string>();
  }
  out.verdict = verdict(ok);
  return out;
}

// ---------------------------------------------------------------- quotient

template <class Base>
Report quotient_over(const Base& base, const io::QuotientRequest& r,
                     const std::vector<typename Base::Object>& objects) {
  const auto stages = subterminals(base);
  const Quotient<Base> q(base, io::make_filter(r.filter, stages.poset));
  Report out;
  Json members = Json::array();
  for (auto v : q.filter().members()) members.push_back(stages.poset->label(v));
  out.witnesses["stages"] = members;
  out.witnesses["least_stage"] = stages.poset->label(q.min_stage());

  Json homs = Json::array();
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      homs.push_back({{"source", i}, {"target", j}, {"germs", q.hom(objects[i], objects[j]).size()}});
  out.witnesses["hom_sizes"] = homs;

  const auto sk = q.skeleton(objects);
  out.witnesses["skeleton"] = {{"representatives", sk.representatives}, {"class_of", sk.class_of}};

  bool all = true;
  Json classifier = Json::array();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto subs = q.subobjects(objects[i]);
    const auto maps = q.hom(objects[i], q.omega()).size();
    std::vector<Germ<Base>> chis;
    bool distinct = true;
    for (const auto& m : subs) {
      const auto chi = q.classify(m);
      for (const auto& c : chis) distinct = distinct && !q.equal(c, chi);
      chis.push_back(chi);
    }
    const bool ok = distinct && maps == subs.size();
    all = all && ok;
    classifier.push_back({{"object", i}, {"subobjects", subs.size()}, {"maps_to_omega", maps}, {"bijective", ok}});
  }
  out.witnesses["classifier"] = classifier;
  out.verdict = verdict(all);
  out.summary = std::to_string(objects.size()) + " objects fall into " + std::to_string(sk.representatives.size()) +
                (sk.representatives.size() == 1 ? " class" : " classes") + " at stage " + stages.poset->label(q.min_stage()) + "; classifying germs " +
                (all ? "match" : "do not match") + " germ subobjects";
  return out;
}

Report enriched_quotient(const io::QuotientRequest& r) {
  std::vector<EnrichedCat> comps;
  std::vector<SmallCategory> cats;
  for (const auto& c : r.components) {
    cats.push_back(io::make_category(c.category));
    comps.push_back(enriched_from_category(cats.back(), c.group_order, r.dim_bound));
  }
  Report out;
  bool valid = true;
  for (const auto& k : comps) {
    const auto check = check_enrichment(k);
    if (!check.ok) {
      valid = false;
      out.witnesses["enrichment_failure"] = check.first_failure;
    }
  }
  auto poset = std::make_shared<const Poset>(Poset::powerset(r.index));
  const EnrichedQuotient q(r.index, comps, io::make_filter(r.filter, poset));
  out.witnesses["least_stage"] = poset->label(q.filter().minimum());
  const auto objects = q.objects();
  Json names = Json::array();
  for (const auto& x : objects) {
    Json t = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i) t.push_back(cats[i].objects[x[i]]);
    names.push_back(t);
  }
  out.witnesses["objects"] = names;
  Json complexes = Json::array();
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = 0; b < objects.size(); ++b) {
      const auto g = q.germ_mapping_complex(objects[a], objects[b]);
      std::vector<std::size_t> counts;
      for (std::size_t n = 0; n <= g.dim_bound(); ++n) counts.push_back(g.count(n));
      complexes.push_back({{"source", a}, {"target", b}, {"simplices", counts}, {"components", pi0(g).count}});
    }
  out.witnesses["mapping_complexes"] = complexes;
  Json truncated = Json::array();
  std::size_t how_many = 0;
  for (const auto& x : objects) {
    const bool t = q.is_zero_truncated(x);
    how_many += t ? 1 : 0;
    truncated.push_back(t);
  }
  out.witnesses["zero_truncated"] = truncated;
  out.verdict = verdict(valid);
  out.summary = std::to_string(objects.size()) + " objects, " + std::to_string(how_many) +
                " of them 0-truncated in the quotient; composition tables " + (valid ? "pass" : "fail") +
                " the enrichment audit";
  return out;
}

Report quotient(const io::QuotientRequest& r) {
  using B = io::QuotientRequest::Base;
  if (r.base == B::Enriched) return enriched_quotient(r);
  const FinSetCat set;
  if (r.base == B::FinSet) {
    std::vector<FinObj> objects;
    for (const auto& o : r.objects) objects.push_back(o.at(0));
    return quotient_over(set, r, objects);
  }
  using Pow = PowerCat<FinSetCat>;
  std::vector<Pow::Object> objects;
  for (const auto& o : r.objects) objects.push_back(Pow::Object{o});
  return quotient_over(Pow(set, r.index), r, objects);
}

// ---------------------------------------------------------------- los-check

Report los(const io::LosRequest& r) {
  Report out;
  const char* relation = r.has_g ? "agree" : "invertible";
  out.witnesses["relation"] = relation;
  if (r.index) {
    auto poset = std::make_shared<const Poset>(Poset::powerset(*r.index));
    const auto spec = FilterProductSpec::finite(*r.index, io::make_filter(r.filter, poset));
    const auto res = r.has_g ? los_equiv_check(spec, r.f, r.g) : los_iso_check(spec, r.f);
    std::vector<std::string> locus;
    for (std::size_t i = 0; i < r.index->size(); ++i)
      if (res.locus >> i & 1) locus.push_back((*r.index)[i]);
    out.witnesses["locus"] = locus;
    out.witnesses["in_filter"] = res.holds;
    out.verdict = verdict(res.holds);
    out.summary = std::string("components ") + relation + " on " + poset->label(res.locus) + ", which is " +
                  (res.holds ? "" : "not ") + "in the filter";
    return out;
  }
  const auto spec = FilterProductSpec::nat(io::make_filter(r.filter, nullptr));
  const auto res = r.has_g ? los_equiv_check(spec, *r.seq_f, *r.seq_g) : los_iso_check(spec, *r.seq_f);
  out.witnesses["locus"] = io::to_json(res.locus);
  out.witnesses["in_filter"] = res.holds;
  out.verdict = verdict(res.holds);
  out.summary = std::string("components ") + relation + " on " + res.locus.to_string() + ", which is " +
                (res.holds ? "" : "not ") + "in the filter";
  return out;
}

// ---------------------------------------------------------------- nno-witness

Report nno(const io::NnoRequest& r) {
  const auto c = nno_witness(r.bound);
  Report out;
  Json separations = Json::array(), pullbacks = Json::array(), vanishing = Json::array();
  for (const auto& s : c.separations) separations.push_back(s.to_string());
  for (const auto& p : c.pullbacks) pullbacks.push_back(io::to_json(p));
  for (const auto& v : c.vanishing) vanishing.push_back(v.to_string());
  out.witnesses = {{"bound", c.bound},
                   {"separations", separations},
                   {"separated", c.separated},
                   {"pullbacks", pullbacks},
                   {"empty_beyond", c.empty_beyond},
                   {"vanishing", vanishing},
                   {"germ_empty", c.germ_empty},
                   {"conclusion", c.conclusion}};
  out.verdict = verdict(c.passes());
  out.summary = std::to_string(c.separations.size()) + " separations: the diagonal of N meets numeral m only at index m, "
                "and each pullback is germ-empty";
  return out;
}

// ---------------------------------------------------------------- rlp-check

Json names(const std::vector<GeneratingMono>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

Report rlp(const io::RlpRequest& r) {
  Report out;
  if (r.target) {
    const auto x = io::make_simpset(*r.target, "/target");
    const auto gens = horn_generators(r.max_n, x.dim_bound());
    const auto v = has_rlp(x, gens);
    out.witnesses["generators"] = names(gens);
    out.witnesses["holds"] = v.holds;
    if (!v.holds) {
      out.witnesses["failing_generator"] = gens[*v.failing_generator].name;
      out.witnesses["unfillable"] = v.unfillable->levels;
    }
    out.verdict = verdict(v.holds);
    out.summary = v.holds ? "every horn up to dimension " + std::to_string(r.max_n) + " has a filler"
                          : "the horn " + gens[*v.failing_generator].name + " has an unfillable map";
    return out;
  }
  const auto d = io::make_diagram(*r.diagram, "/diagram");
  const auto gens = horn_generators(r.max_n, d.objects.front().dim_bound());
  const auto pres = rlp_preserved_check(d, gens);
  const auto cmp = pi0_commutes_check(d);
  std::vector<bool> stages(pres.stages.begin(), pres.stages.end());
  out.witnesses = {{"generators", names(gens)},
                   {"stages", stages},
                   {"stages_ok", pres.stages_ok},
                   {"colimit_ok", pres.colimit_ok},
                   {"shape_filtered", pres.shape_filtered},
                   {"holds", pres.holds},
                   {"pi0", {{"of_colimit", cmp.of_colimit}, {"colimit_of", cmp.colimit_of}, {"bijective", cmp.bijective}}}};
  out.verdict = verdict(pres.holds);
  out.summary = std::string("stages ") + (pres.stages_ok ? "all have" : "do not all have") + " the lifting property; the colimit " +
                (pres.colimit_ok ? "keeps" : "loses") + " it" + (pres.shape_filtered ? "" : " (shape not filtered)");
  return out;
}

// ---------------------------------------------------------------- report-all

Report report_all(const io::ReportAllRequest& r, std::uint64_t seed) {
  acceptance::Config config{seed, r.fixtures.value_or(acceptance::default_fixture_dir())};
  const auto outcomes = acceptance::library_checks(config);
  Report out;
  Json checks = Json::object();
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    checks[acceptance::key(o)] = {{"passed", o.passed}, {"summary", o.summary}, {"details", o.details}};
    passed += o.passed ? 1 : 0;
  }
  out.witnesses = {{"seed", seed}, {"checks", checks}};
  out.verdict = verdict(passed == outcomes.size());
  out.summary = std::to_string(passed) + " of " + std::to_string(outcomes.size()) + " checks pass";
  return out;
}

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

Report error_report(const std::string& command, const std::string& reason, const std::string& what) {
  Report out;
  out.command = command;
  out.verdict = "error";
  out.reason = reason;
  out.summary = what;
  return out;
}

template <class F>
Report guarded(const std::string& command, const Options& o, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  Report out;
  try {
    budget::Scope scope(o.max_millis, o.max_size);
    out = run();
  } catch (const SchemaError& e) {
    out = error_report(command, to_string(e.kind()), e.what());
    out.pointer = e.pointer();
  } catch (const Error& e) {
    out = error_report(command, to_string(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    throw;
  } catch (const std::exception& e) {
    out = error_report(command, "internal", e.what());
  }
  out.command = command;
  if (o.timing)
    out.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

Report execute(const io::Request& r, const Options& o) {
  const std::uint64_t seed = r.seed.value_or(o.seed);
  return guarded(r.command(), o, [&] {
    return std::visit(overloaded{
                          [](const io::CheckFilterRequest& p) { return check_filter(p); },
                          [](const io::QuotientRequest& p) { return quotient(p); },
                          [](const io::LosRequest& p) { return los(p); },
                          [](const io::NnoRequest& p) { return nno(p); },
                          [](const io::RlpRequest& p) { return rlp(p); },
                          [&](const io::ReportAllRequest& p) { return report_all(p, seed); },
                      },
                      r.payload);
  });
}

Report execute(const Json& request, const Options& o) {
  std::string command = "unknown";
  if (request.is_object() && request.contains("command") && request["command"].is_string())
    command = request["command"].get<std::string>();
  std::optional<io::Request> parsed;
  auto report = guarded(command, o, [&] {
    parsed = io::parse_request(request);
    return Report{};
  });
  if (!parsed) return report;
  return execute(*parsed, o);
}

Report execute(const std::string& command, const Json& payload, const Options& o) {
  std::optional<io::Request> parsed;
  auto report = guarded(command, o, [&] {
    parsed = io::parse_request(command, payload);
    return Report{};
  });
  if (!parsed) return report;
  return execute(*parsed, o);
}

Json to_json(const Report& r) {
  Json out = {{"command", r.command}, {"verdict", r.verdict}, {"witnesses", r.witnesses}, {"summary", r.summary}};
  if (r.reason) out["reason"] = *r.reason;
  if (r.pointer) out["pointer"] = *r.pointer;
  if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream s;
  s << r.command << ": " << r.verdict << "\n" << r.summary << "\n";
  if (r.reason) s << "reason: " << *r.reason << "\n";
  if (r.pointer) s << "at: " << *r.pointer << "\n";
  if (r.witnesses.contains("checks")) {
    for (const auto& [name, c] : r.witnesses["checks"].items())
      s << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] " << name << ": "
        << c["summary"].get<std::string>() << "\n";
  } else {
    for (const auto& [k, v] : r.witnesses.items()) s << "  " << k << ": " << v.dump() << "\n";
  }
  if (r.timing_ms) s << "time: " << *r.timing_ms << " ms\n";
  return s.str();
}

}  // namespace germcat::cli
