#include <doctest.h>

#include <random>
#include <vector>

#include "germ_oracles.hpp"
#include "germcat/error.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/power.hpp"
#include "germcat/fincat/universal.hpp"
#include "germcat/germ/quotient.hpp"

using namespace germcat;

namespace {

using Pow = PowerCat<FinSetCat>;
using PowQ = Quotient<Pow>;
using SetQ = Quotient<FinSetCat>;

const FinSetCat set;

FinObj obj(std::size_t n) { return FinObj::standard(n); }
Pow::Object pobj(std::size_t a, std::size_t b) { return {{obj(a), obj(b)}}; }

FinMap random_map(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (auto& v : a) v = rng() % y.size();
  return FinMap(x, y, a);
}

Pow pow2() { return Pow(set, {"1", "2"}); }

// mask 1 = stage {1}: component 1 survives
PowQ first_component() {
  auto pow = pow2();
  const auto stages = subterminals(pow);
  return PowQ(pow, Filter::principal(stages.poset, 1));
}

SetQ set_quotient(bool improper) {
  const auto stages = subterminals(set);
  return SetQ(set, improper ? Filter::improper(stages.poset) : Filter::minimal(stages.poset));
}

}  // namespace

TEST_CASE("stage space of finite sets and powers") {
  const auto s = subterminals(set);
  CHECK(s.poset->labels() == std::vector<std::string>{"0", "1"});
  CHECK(s.poset->leq(0, 1));
  const auto p = subterminals(pow2());
  CHECK(p.poset->size() == 4);
  CHECK(p.poset->label(1) == "{1}");
}

TEST_CASE("trivial filters") {
  const auto minimal = set_quotient(false);
  const auto improper = set_quotient(true);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      CHECK(minimal.hom(obj(a), obj(b)).size() == set.hom(obj(a), obj(b)).size());
      CHECK(improper.hom(obj(a), obj(b)).size() == 1);
    }
  std::vector<FinObj> objs{obj(0), obj(1), obj(2), obj(3)};
  CHECK(improper.skeleton(objs).representatives.size() == 1);
  CHECK(minimal.skeleton(objs).representatives.size() == 4);

  const auto f = minimal.project(FinMap(obj(2), obj(2), {0, 0}));
  const auto g = minimal.project(FinMap(obj(2), obj(2), {1, 1}));
  CHECK_FALSE(minimal.equal(f, g));
  CHECK_FALSE(minimal.is_iso(f));
  CHECK(minimal.is_iso(minimal.identity(obj(2))));
}

TEST_CASE("germ hom-sets collapse to the least stage") {
  const auto q = first_component();
  CHECK(q.hom(pobj(2, 3), pobj(3, 5)).size() == 9);
  CHECK(oracle::literal_germ_count(q, pobj(2, 3), pobj(3, 5)) == 9);

  // every filter on P({1,2}) and several object pairs
  const auto pow = pow2();
  const auto stages = subterminals(pow);
  for (const auto& members : all_filters(*stages.poset)) {
    const PowQ qq(pow, Filter::make_explicit(stages.poset, members));
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 1; b <= 2; ++b) {
        const auto x = pobj(a, b);
        const auto y = pobj(b, a + 1);
        CHECK(qq.hom(x, y).size() == oracle::literal_germ_count(qq, x, y));
      }
  }
}

TEST_CASE("germ composition") {
  const auto q = first_component();
  std::mt19937_64 rng(41);
  const auto x = pobj(2, 2);
  const auto y = pobj(3, 2);
  const auto z = pobj(2, 3);
  for (int round = 0; round < 50; ++round) {
    const Pow::Morphism f{{random_map(obj(2), obj(3), rng), random_map(obj(2), obj(2), rng)}};
    const Pow::Morphism g{{random_map(obj(3), obj(2), rng), random_map(obj(2), obj(3), rng)}};
    const auto pf = q.project(f);
    const auto pg = q.project(g);
    CHECK(q.equal(q.compose(pg, pf), q.project(q.base().compose(g, f))));
    CHECK(q.equal(q.compose(q.identity(y), pf), pf));
    CHECK(q.equal(q.compose(pf, q.identity(x)), pf));
    // representatives at the top stage and the least stage compose alike
    const std::vector<Germ<Pow>> fs{pf, q.canonical(pf)};
    const std::vector<Germ<Pow>> gs{pg, q.canonical(pg)};
    for (const auto& a : fs)
      for (const auto& b : gs) CHECK(q.equal(q.compose(b, a), q.compose(gs[0], fs[0])));
    (void)z;
  }
  CHECK_THROWS_AS(q.compose(q.identity(x), q.identity(y)), Error);
}

TEST_CASE("germ equality and invertibility") {
  const auto q = first_component();
  const auto f1 = FinMap(obj(2), obj(2), {0, 1});
  const auto f2 = FinMap(obj(2), obj(2), {0, 0});
  const auto g2 = FinMap(obj(2), obj(2), {1, 1});
  const auto a = q.project({{f1, f2}});
  const auto b = q.project({{f1, g2}});
  CHECK(q.equal(a, a));
  CHECK(q.equal(a, b));
  CHECK(oracle::equal_by_stage_search(q, a, b));
  CHECK(q.is_iso(a));  // the non-iso component is dropped
  CHECK(oracle::iso_by_stage_search(q, a));

  std::mt19937_64 rng(43);
  const auto pow = pow2();
  const auto stages = subterminals(pow);
  for (const auto& members : all_filters(*stages.poset)) {
    const PowQ qq(pow, Filter::make_explicit(stages.poset, members));
    for (int round = 0; round < 40; ++round) {
      const std::size_t n = 1 + rng() % 3;
      const Pow::Morphism u{{random_map(obj(n), obj(n), rng), random_map(obj(2), obj(2), rng)}};
      const Pow::Morphism w{{random_map(obj(n), obj(n), rng), random_map(obj(2), obj(2), rng)}};
      const auto gu = qq.project(u);
      const auto gw = qq.project(w);
      CHECK(qq.equal(gu, gw) == oracle::equal_by_stage_search(qq, gu, gw));
      CHECK(qq.is_iso(gu) == oracle::iso_by_stage_search(qq, gu));
      // equality is a congruence for composition
      if (qq.equal(gu, gw)) CHECK(qq.equal(qq.compose(gu, gu), qq.compose(gw, gw)));
    }
  }
}

TEST_CASE("skeleton") {
  const auto q = first_component();
  const auto sk = q.skeleton({pobj(2, 3), pobj(2, 5), pobj(1, 3)});
  CHECK(sk.representatives == std::vector<std::size_t>{0, 2});
  CHECK(sk.class_of == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("limits and colimits in the quotient") {
  const auto q = first_component();
  std::vector<Pow::Object> tests{pobj(0, 0), pobj(1, 0), pobj(2, 1)};

  const auto terminal = q.limit({});
  CHECK(is_limit(q, Diagram<PowQ>{}, terminal, tests));
  CHECK(q.skeleton({terminal.apex, q.terminal()}).representatives.size() == 1);
  const auto initial = q.colimit({});
  CHECK(is_colimit(q, Diagram<PowQ>{}, initial, tests));

  std::mt19937_64 rng(47);
  for (int round = 0; round < 10; ++round) {
    const auto x = pobj(1 + rng() % 2, 1);
    const auto y = pobj(1 + rng() % 2, 2);
    const auto z = pobj(2, 1);
    // germs whose representatives live at different stages
    const Germ<Pow> f = q.project({{random_map(x.parts[0], z.parts[0], rng), random_map(x.parts[1], z.parts[1], rng)}});
    const Germ<Pow> g = q.canonical(
        q.project({{random_map(y.parts[0], z.parts[0], rng), random_map(y.parts[1], z.parts[1], rng)}}));
    const auto pb = cospan_diagram(q, f, g);
    CHECK(is_limit(q, pb, q.limit(pb), tests));
    const auto prod = discrete_diagram<PowQ>({x, y});
    CHECK(is_limit(q, prod, q.limit(prod), tests));
    CHECK(is_colimit(q, prod, q.colimit(prod), tests));
    const auto h = q.project({{random_map(x.parts[0], z.parts[0], rng), random_map(x.parts[1], z.parts[1], rng)}});
    const auto coeq = parallel_diagram(q, f, h);
    CHECK(is_colimit(q, coeq, q.colimit(coeq), tests));
    CHECK(is_limit(q, coeq, q.limit(coeq), tests));
  }
}

TEST_CASE("subobject classifier in the quotient") {
  const auto q = first_component();
  const auto x = pobj(2, 2);
  const auto subs = q.subobjects(x);
  CHECK(subs.size() == 4);
  CHECK(q.hom(x, q.omega()).size() == 4);
  std::vector<Germ<Pow>> chis;
  for (const auto& m : subs) {
    CHECK(q.is_mono(m));
    const auto chi = q.classify(m);
    for (const auto& c : chis) CHECK_FALSE(q.equal(c, chi));
    chis.push_back(chi);
  }

  const auto improper = set_quotient(true);
  CHECK(improper.subobjects(obj(3)).size() == 1);
  CHECK(improper.hom(obj(3), improper.omega()).size() == 1);
}

TEST_CASE("zero truncation of discrete objects") {
  const auto q = first_component();
  CHECK(q.is_zero_truncated(pobj(2, 3)));
  CHECK(set_quotient(false).is_zero_truncated(obj(3)));
}

TEST_CASE("quotients need an explicit filter on Sub(1)") {
  CHECK_THROWS_AS(SetQ(set, Filter::minimal(std::make_shared<const Poset>(Poset::chain(3)))), Error);
  const SetQ frechet(set, Filter::frechet());
  CHECK_THROWS_AS(frechet.hom(obj(1), obj(1)), Error);
}
