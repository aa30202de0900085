#include <algorithm>
#include <functional>
#include <random>

#include "criteria.hpp"
#include "germcat/filterprod/filterprod.hpp"
#include "germcat/fincat/nno.hpp"

namespace germcat::acceptance {

using Json = nlohmann::json;

// ------------------------------------------------------------------ 6

Outcome nno_counterexample(const Config&) {
  Outcome o{6, "nno-counterexample"};
  constexpr std::uint64_t bound = 50;
  const auto cert = nno_witness(bound);
  std::size_t bad_separation = 0, bad_pullback = 0, bad_vanishing = 0;
  for (std::uint64_t m = 0; m <= bound && m < cert.separations.size(); ++m) {
    const auto& sep = cert.separations[m];
    if (!(sep == DefinableSubset::finite({m})) || frechet_contains(sep) || !cert.separated[m]) ++bad_separation;
    // The pullback of n and m over 1 x 1 has one point when n = m, none otherwise.
    const auto& p = cert.pullbacks[m];
    bool ok = cert.empty_beyond[m];
    for (std::uint64_t n = 0; n <= m + bound + 10 && ok; ++n)
      ok = std::get<FinObj>(p.at(n)).size() == (n == m ? 1u : 0u);
    if (!ok) ++bad_pullback;
    if (!(cert.vanishing[m] == DefinableSubset::cofinite({m})) || !cert.germ_empty[m]) ++bad_vanishing;
  }
  o.passed = cert.passes() && cert.separations.size() == bound + 1 && bad_separation + bad_pullback + bad_vanishing == 0;
  o.details = {{"bound", bound},
               {"agreement_sets", cert.separations.size()},
               {"bad_agreement_sets", bad_separation},
               {"bad_pullbacks", bad_pullback},
               {"bad_vanishing_loci", bad_vanishing}};
  o.summary = "nno_witness(50): " + std::to_string(cert.separations.size()) +
              " agreement sets equal {m}, outside the Frechet filter; every pullback P^m is empty past m and germ-empty";
  return o;
}

// ------------------------------------------------------------------ 7

namespace {

FinObj obj(std::size_t n) { return FinObj::standard(n); }

FinMap random_map(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (auto& v : a) v = rng() % y.size();
  return FinMap(x, y, a);
}

struct Triple {
  SeqObj target;
  SeqMap point;
  SeqMap step;
};

Triple random_triple(std::mt19937_64& rng) {
  const auto tail_set = obj(1 + rng() % 4);
  SeqObj target{{}, tail_set};
  const std::size_t patches = rng() % 4;
  for (std::size_t k = 0; k < patches; ++k) target.patches[rng() % 6] = obj(1 + rng() % 4);
  auto set_at = [&](std::uint64_t n) { return std::get<FinObj>(target.at(n)); };

  // Tails are constant or cycle through two or three components.
  auto rule = [&](const std::function<FinMap()>& make) -> TailRule {
    if (rng() % 4 != 0) return tail::Constant{make()};
    tail::Cyclic c;
    const std::size_t len = 2 + rng() % 2;
    for (std::size_t k = 0; k < len; ++k) c.cycle.push_back(make());
    return c;
  };
  std::map<std::uint64_t, ComponentMap> point_patches, step_patches;
  for (const auto& [n, c] : target.patches) {
    point_patches[n] = random_map(one(), set_at(n), rng);
    step_patches[n] = random_map(set_at(n), set_at(n), rng);
  }
  const std::uint64_t extra = 6 + rng() % 3;
  if (rng() % 2) point_patches[extra] = random_map(one(), tail_set, rng);
  if (rng() % 2) step_patches[extra] = random_map(tail_set, tail_set, rng);
  const auto point_rule = rule([&] { return random_map(one(), tail_set, rng); });
  const auto step_rule = rule([&] { return random_map(tail_set, tail_set, rng); });
  return {target, SeqMap(SeqObj::constant(one()), target, point_patches, point_rule),
          SeqMap(target, target, step_patches, step_rule)};
}

// Every sequence with preperiod and period at most |X| solving h(0) = start,
// h(k+1) = step(h(k)), found by a complete search over candidate values with
// each constraint checked as soon as its positions are filled. Solutions are
// returned as their first `window` values.
std::vector<std::vector<std::size_t>> recursion_solutions(const FinMap& step, std::size_t start, std::size_t window) {
  const std::size_t t = step.source().size();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t pre = 0; pre <= t; ++pre)
    for (std::size_t cyc = 1; cyc <= t; ++cyc) {
      const std::size_t len = pre + cyc;
      std::vector<std::size_t> v(len);
      std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == len) {
          if (step(v[len - 1]) != v[pre]) return;
          std::vector<std::size_t> values(window);
          for (std::size_t n = 0; n < window; ++n) values[n] = n < pre ? v[n] : v[pre + (n - pre) % cyc];
          if (std::find(out.begin(), out.end(), values) == out.end()) out.push_back(std::move(values));
          return;
        }
        for (std::size_t x = 0; x < t; ++x) {
          if (k == 0 && x != start) continue;
          if (k > 0 && step(v[k - 1]) != x) continue;
          v[k] = x;
          go(k + 1);
        }
      };
      go(0);
    }
  return out;
}

}  // namespace

Outcome nno_preservation(const Config& c) {
  Outcome o{7, "nno-preservation"};
  std::mt19937_64 rng(c.seed + 7);
  const auto spec = FilterProductSpec::nat(Filter::frechet());
  constexpr std::size_t triples = 120;
  constexpr std::size_t window = 40;
  std::size_t zero_ok = 0, succ_ok = 0, unique_ok = 0, indices_checked = 0;
  for (std::size_t round = 0; round < triples; ++round) {
    const auto [target, point, step] = random_triple(rng);
    const auto h = nat_recursion_germ(target, point, step);

    // h o zero = point and h o succ = step o h, at every index.
    const auto at_zero = los_equiv_check(spec, compose(h, zero_map()), point);
    const auto at_succ = los_equiv_check(spec, compose(h, successor_map()), compose(step, h));
    zero_ok += at_zero.holds && at_zero.locus == DefinableSubset::all() ? 1 : 0;
    succ_ok += at_succ.holds && at_succ.locus == DefinableSubset::all() ? 1 : 0;

    // Uniqueness at every patched index and across six tail indices, which
    // cover every residue of the cyclic tails.
    std::vector<std::uint64_t> indices;
    for (const auto& [n, x] : target.patches) indices.push_back(n);
    for (const auto& [n, x] : point.patches()) indices.push_back(n);
    for (const auto& [n, x] : step.patches()) indices.push_back(n);
    const std::uint64_t tail_from = std::max({target.horizon(), point.horizon(), step.horizon()});
    for (std::uint64_t n = tail_from; n < tail_from + 6; ++n) indices.push_back(n);
    bool unique = true;
    for (auto n : indices) {
      ++indices_checked;
      const auto s = std::get<FinMap>(step.at(n));
      const auto p = std::get<FinMap>(point.at(n))(0);
      const auto solutions = recursion_solutions(s, p, window);
      const auto hn = std::get<FromNat>(h.at(n));
      bool matches = solutions.size() == 1;
      for (std::size_t k = 0; k < window && matches; ++k) matches = solutions[0][k] == hn.sequence.at(k);
      unique = unique && matches;
    }
    unique_ok += unique ? 1 : 0;
  }
  o.passed = triples >= 100 && zero_ok == triples && succ_ok == triples && unique_ok == triples;
  o.details = {{"triples", triples},
               {"zero_equation", zero_ok},
               {"successor_equation", succ_ok},
               {"unique", unique_ok},
               {"indices_searched", indices_checked}};
  o.summary = std::to_string(triples) + " random (target, point, step) triples: recursion germ satisfies both equations in " +
              std::to_string(std::min(zero_ok, succ_ok)) + " and is the only eventually periodic solution in " +
              std::to_string(unique_ok);
  return o;
}

}  // namespace germcat::acceptance
