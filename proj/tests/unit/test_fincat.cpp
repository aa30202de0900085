#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "category_oracles.hpp"
#include "germcat/error.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/nno.hpp"
#include "germcat/fincat/power.hpp"
#include "germcat/fincat/slice.hpp"
#include "germcat/fincat/universal.hpp"
#include "oracles.hpp"

using namespace germcat;

namespace {

const FinSetCat set;

FinObj obj(std::size_t n) { return FinObj::standard(n); }

FinMap random_map(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (auto& v : a) v = rng() % y.size();
  return FinMap(x, y, a);
}

std::vector<FinObj> small_objects(std::size_t max) {
  std::vector<FinObj> out;
  for (std::size_t n = 0; n <= max; ++n) out.push_back(obj(n));
  return out;
}

// Random diagram over a fixed shape, objects of size 1..3.
Diagram<FinSetCat> random_diagram(int shape, std::mt19937_64& rng) {
  auto o = [&] { return obj(1 + rng() % 3); };
  Diagram<FinSetCat> d;
  switch (shape) {
    case 0:  // ternary product
      d.objects = {o(), o(), o()};
      break;
    case 1: {  // pullback
      d.objects = {o(), o(), o()};
      d.arrows = {{0, 2, random_map(d.objects[0], d.objects[2], rng)}, {1, 2, random_map(d.objects[1], d.objects[2], rng)}};
      break;
    }
    case 2: {  // equalizer / coequalizer pair
      d.objects = {o(), o()};
      d.arrows = {{0, 1, random_map(d.objects[0], d.objects[1], rng)}, {0, 1, random_map(d.objects[0], d.objects[1], rng)}};
      break;
    }
    default: {  // span with an extra leg: 4 objects
      d.objects = {o(), o(), o(), o()};
      d.arrows = {{0, 1, random_map(d.objects[0], d.objects[1], rng)},
                  {0, 2, random_map(d.objects[0], d.objects[2], rng)},
                  {1, 3, random_map(d.objects[1], d.objects[3], rng)}};
      break;
    }
  }
  return d;
}

}  // namespace

TEST_CASE("finite sets reject malformed data") {
  CHECK_THROWS_AS(FinObj("x", {"a", "a"}), Error);
  CHECK_THROWS_AS(FinMap(obj(2), obj(1), {0, 1}), Error);
  CHECK_THROWS_AS(FinMap(obj(2), obj(1), {0}), Error);
  CHECK_THROWS_AS(set.compose(set.identity(obj(2)), set.identity(obj(3))), Error);
}

TEST_CASE("limit examples") {
  const auto terminal = set.limit({});
  CHECK(terminal.apex.size() == 1);

  const auto product = set.limit(discrete_diagram<FinSetCat>({obj(2), obj(3)}));
  CHECK(product.apex.size() == 6);
  CHECK(product.apex.elements.front() == "(0,0)");
  CHECK(product.apex.elements.back() == "(1,2)");

  const FinObj x("X", {"x1", "x2", "x3"});
  const FinObj y("Y", {"y"});
  const FinMap f(x, obj(2), {0, 0, 1});
  const FinMap g(y, obj(2), {0});
  const auto pb = set.limit(cospan_diagram(set, f, g));
  CHECK(pb.apex.elements == std::vector<std::string>{"(x1,y,0)", "(x2,y,0)"});
  CHECK(is_limit(set, cospan_diagram(set, f, g), pb, small_objects(2)));
}

TEST_CASE("colimit examples") {
  CHECK(set.colimit({}).apex.empty());
  CHECK(set.colimit(discrete_diagram<FinSetCat>({obj(2), obj(3)})).apex.size() == 5);
  const auto coeq = set.colimit(parallel_diagram(set, FinMap(obj(1), obj(2), {0}), FinMap(obj(1), obj(2), {1})));
  CHECK(coeq.apex.size() == 1);
}

TEST_CASE("limits and colimits satisfy their universal properties") {
  std::mt19937_64 rng(19);
  const auto tests = small_objects(2);
  for (int round = 0; round < 60; ++round) {
    const auto d = random_diagram(round % 4, rng);
    const auto lim = set.limit(d);
    REQUIRE(is_limit(set, d, lim, tests));
    const auto col = set.colimit(d);
    REQUIRE(is_colimit(set, d, col, tests));
    // factoring an arbitrary cone reproduces its legs
    for (const auto& legs : all_cones(set, d, obj(2))) {
      const auto u = set.factor(lim, d, Cone<FinSetCat>{obj(2), legs});
      for (std::size_t j = 0; j < legs.size(); ++j) CHECK(set.compose(lim.legs[j], u) == legs[j]);
    }
    for (const auto& legs : all_cocones(set, d, obj(2))) {
      const auto u = set.cofactor(col, d, Cocone<FinSetCat>{obj(2), legs});
      for (std::size_t j = 0; j < legs.size(); ++j) CHECK(set.compose(u, col.legs[j]) == legs[j]);
    }
  }
}

TEST_CASE("an ill-formed diagram is rejected") {
  Diagram<FinSetCat> d{{obj(2), obj(3)}, {{0, 1, FinMap(obj(3), obj(3), {0, 1, 2})}}};
  CHECK_THROWS_AS(set.limit(d), Error);
  Diagram<FinSetCat> e{{obj(2)}, {{0, 4, set.identity(obj(2))}}};
  CHECK_THROWS_AS(set.colimit(e), Error);
}

TEST_CASE("power categories compute componentwise") {
  const PowerCat<FinSetCat> pow(set, {"1", "2"});
  using P = PowerCat<FinSetCat>;
  std::mt19937_64 rng(23);
  std::vector<P::Object> tests;
  for (std::size_t a = 0; a <= 1; ++a)
    for (std::size_t b = 0; b <= 1; ++b) tests.push_back({{obj(a), obj(b)}});
  for (int round = 0; round < 20; ++round) {
    const auto d0 = random_diagram(round % 3, rng);
    auto d1 = random_diagram(round % 3, rng);
    Diagram<P> d;
    for (std::size_t j = 0; j < d0.objects.size(); ++j) d.objects.push_back({{d0.objects[j], d1.objects[j]}});
    for (std::size_t k = 0; k < d0.arrows.size(); ++k)
      d.arrows.push_back({d0.arrows[k].from, d0.arrows[k].to, {{d0.arrows[k].map, d1.arrows[k].map}}});
    const auto lim = pow.limit(d);
    CHECK(lim.apex.parts[0] == set.limit(d0).apex);
    CHECK(lim.apex.parts[1] == set.limit(d1).apex);
    CHECK(is_limit(pow, d, lim, tests));
    const auto col = pow.colimit(d);
    CHECK(col.apex.parts[0].size() == set.colimit(d0).apex.size());
    CHECK(is_colimit(pow, d, col, tests));
  }
}

TEST_CASE("mono agrees with the kernel-pair criterion") {
  const auto tests = small_objects(2);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : set.hom(obj(a), obj(b))) CHECK(set.is_mono(f) == is_mono_by_kernel_pair(set, f, tests));

  CHECK(set.is_mono(FinMap(FinObj("AB", {"a", "b"}), obj(3), {0, 2})));
  CHECK_FALSE(set.is_mono(FinMap(FinObj("AB", {"a", "b"}), obj(2), {1, 1})));

  const PowerCat<FinSetCat> pow(set, {"1", "2"});
  std::vector<PowerCat<FinSetCat>::Object> ptests{{{obj(1), obj(1)}}, {{obj(2), obj(1)}}, {{obj(1), obj(2)}}};
  for (const auto& f : pow.hom({{obj(2), obj(1)}}, {{obj(2), obj(2)}}))
    CHECK(pow.is_mono(f) == is_mono_by_kernel_pair(pow, f, ptests));
}

TEST_CASE("subobject lattices and the classifier") {
  CHECK(set.subobjects(obj(3)).size() == 8);
  CHECK(set.subobjects(obj(0)).size() == 1);
  const PowerCat<FinSetCat> pow(set, {"1", "2"});
  CHECK(pow.subobjects({{obj(2), obj(1)}}).size() == 8);

  const FinObj x("X", {"1", "2"});
  const FinMap one(FinObj("S", {"1"}), x, {0});
  CHECK(set.classify(one).assignment() == std::vector<std::size_t>{1, 0});
  CHECK(set.classify(set.identity(x)).assignment() == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(set.classify(FinMap(obj(2), obj(1), {0, 0})), Error);

  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<FinMap> chis;
    for (const auto& m : set.subobjects(obj(n))) {
      const auto chi = set.classify(m);
      // pulling truth back along chi recovers the subset
      const auto pb = set.limit(cospan_diagram(set, chi, set.truth()));
      CHECK(pb.legs[0].assignment() == m.assignment());
      for (const auto& other : chis) CHECK_FALSE(other == chi);
      chis.push_back(chi);
    }
    CHECK(chis.size() == set.hom(obj(n), set.omega()).size());
  }
}

TEST_CASE("dependent products") {
  const FinObj x = obj(2);
  const FinMap p(obj(5), x, {0, 0, 1, 1, 1});
  CHECK(set.dependent_product(set.to_terminal(x), p).source().size() == 6);
  CHECK(set.dependent_product(set.identity(x), p).source().size() == 5);
  const FinMap gap(obj(2), x, {0, 0});
  CHECK(set.dependent_product(set.to_terminal(x), gap).source().empty());

  std::mt19937_64 rng(29);
  for (int round = 0; round < 300; ++round) {
    const auto xo = obj(rng() % 4);
    const auto yo = obj(1 + rng() % 3);
    const auto zo = obj(rng() % 4);
    const auto wo = obj(rng() % 3);
    if (xo.empty() == false && zo.empty()) continue;
    const auto f = random_map(xo, yo, rng);
    const auto pz = xo.empty() ? FinMap(obj(0), xo, {}) : random_map(zo, xo, rng);
    const auto g = random_map(wo, yo, rng);
    const auto [left, right] = oracle::adjunction_counts(set, f, pz, g);
    CHECK(left == right);
  }
}

TEST_CASE("recursion from the natural numbers") {
  const FinObj one("A", {"a"});
  auto h = nno_recursor(FinMap(one, one, {0}), 0);
  CHECK(h.preperiod.empty());
  CHECK(h.cycle == std::vector<std::size_t>{0});

  h = nno_recursor(FinMap(obj(2), obj(2), {1, 0}), 0);
  CHECK(h.preperiod.empty());
  CHECK(h.cycle == std::vector<std::size_t>{0, 1});

  h = nno_recursor(FinMap(obj(3), obj(3), {1, 2, 1}), 0);
  CHECK(h.preperiod == std::vector<std::size_t>{0});
  CHECK(h.cycle == std::vector<std::size_t>{1, 2});

  std::mt19937_64 rng(31);
  for (int round = 0; round < 500; ++round) {
    const auto x = obj(1 + rng() % 6);
    const auto step = random_map(x, x, rng);
    const std::size_t start = rng() % x.size();
    const auto seq = nno_recursor(step, start);
    const auto [mu, lambda] = oracle::floyd(step, start);
    CHECK(seq.preperiod.size() == mu);
    CHECK(seq.cycle.size() == lambda);
    CHECK(seq.at(0) == start);
    for (std::uint64_t n = 0; n < mu + 2 * lambda; ++n) CHECK(seq.at(n + 1) == step(seq.at(n)));
    CHECK(seq.canonical() == seq);
  }
}

TEST_CASE("eventually periodic normal forms") {
  const EventuallyPeriodic s{{2, 0, 1}, {0, 1, 0, 1}};
  const auto c = s.canonical();
  CHECK(c.preperiod == std::vector<std::size_t>{2});
  CHECK(c.cycle == std::vector<std::size_t>{0, 1});
  for (std::uint64_t n = 0; n < 12; ++n) {
    CHECK(c.at(n) == s.at(n));
    CHECK(s.shifted().at(n) == s.at(n + 1));
  }
}

TEST_CASE("slices") {
  const FinObj anchor = obj(2);
  const SliceCat<FinSetCat> slice(set, anchor);
  using S = SliceCat<FinSetCat>;
  const auto a = slice.object(FinMap(obj(3), anchor, {0, 1, 1}));
  const auto b = slice.object(FinMap(obj(2), anchor, {1, 0}));
  const auto c = slice.object(FinMap(obj(2), anchor, {0, 0}));
  const std::vector<S::Object> tests{slice.terminal(), slice.initial(), a, c};

  const auto d = discrete_diagram<S>({a, b});
  CHECK(is_limit(slice, d, slice.limit(d), tests));
  CHECK(slice.limit(d).apex.domain.size() == 3);  // fibered product over the anchor
  CHECK(is_colimit(slice, d, slice.colimit(d), tests));
  CHECK(is_limit(slice, Diagram<S>{}, slice.limit({}), tests));

  CHECK(slice.omega().domain.size() == 4);
  const auto subs = slice.subobjects(a);
  CHECK(subs.size() == 8);
  for (const auto& m : subs) {
    const auto chi = slice.classify(m);
    const auto pb = slice.limit(cospan_diagram(slice, chi, slice.truth()));
    CHECK(pb.apex.domain.size() == m.from.domain.size());
  }
  CHECK(slice.subterminal_objects().size() == 4);
}
