#include <doctest.h>

#include <random>

#include "germcat/error.hpp"
#include "germcat/filterprod/filterprod.hpp"
#include "germcat/filterprod/schedule.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/power.hpp"
#include "germcat/germ/quotient.hpp"

using namespace germcat;

namespace {

using Pow = PowerCat<FinSetCat>;

FinObj obj(std::size_t n) { return FinObj::standard(n); }

FinMap random_map(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::vector<std::size_t> a(x.size());
  for (auto& v : a) v = rng() % y.size();
  return FinMap(x, y, a);
}

FilterProductSpec frechet() { return FilterProductSpec::nat(Filter::frechet()); }

SeqObj constant(std::size_t n) { return SeqObj::constant(obj(n)); }

FinMap swap2() { return FinMap(obj(2), obj(2), {1, 0}); }
FinMap const2(std::size_t v) { return FinMap(obj(2), obj(2), {v, v}); }
FinMap point_of(const FinObj& x, std::size_t v) { return FinMap(one(), x, {v}); }

}  // namespace

TEST_CASE("finite filter products agree with the germ quotient") {
  const FinSetCat set;
  std::mt19937_64 rng(59);
  std::size_t checked = 0;
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    std::vector<std::string> index;
    for (std::size_t i = 0; i < arity; ++i) index.push_back(std::to_string(i + 1));
    const Pow pow(set, index);
    const auto stages = subterminals(pow);
    for (const auto& members : all_filters(*stages.poset)) {
      const auto filter = Filter::make_explicit(stages.poset, members);
      const Quotient<Pow> q(pow, filter);
      const auto spec = FilterProductSpec::finite(index, filter);
      for (int round = 0; round < 15; ++round) {
        std::vector<FinMap> f, g;
        for (std::size_t i = 0; i < arity; ++i) {
          const auto x = obj(1 + rng() % 3), y = obj(1 + rng() % 3);
          f.push_back(random_map(x, y, rng));
          g.push_back(rng() % 2 ? f.back() : random_map(x, y, rng));
        }
        const auto gf = q.project({f});
        const auto gg = q.project({g});
        CHECK(los_equiv_check(spec, f, g).holds == q.equal(gf, gg));
        CHECK(los_iso_check(spec, f).holds == q.is_iso(gf));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("finite loci") {
  const std::vector<std::string> index{"1", "2", "3"};
  const auto p = std::make_shared<const Poset>(Poset::powerset(index));
  const auto spec = FilterProductSpec::finite(index, Filter::principal(p, 0b011));
  const std::vector<FinMap> f{const2(0), const2(0), const2(0)};
  const std::vector<FinMap> g{const2(0), const2(0), const2(1)};
  const auto r = los_equiv_check(spec, f, g);
  CHECK(r.holds);
  CHECK(r.locus == 0b011);
  CHECK(los_equiv_check(spec, f, f).locus == 0b111);

  const auto improper = FilterProductSpec::finite(index, Filter::improper(p));
  const std::vector<FinMap> h{const2(1), const2(1), const2(1)};
  CHECK(los_equiv_check(improper, f, h).holds);
  CHECK(los_equiv_check(improper, f, h).locus == 0);
  CHECK_THROWS_AS(FilterProductSpec::finite({"1", "2"}, Filter::improper(p)), Error);
}

TEST_CASE("loci are monotone in the filter and satisfy the triangle law") {
  const std::vector<std::string> index{"1", "2", "3"};
  const auto p = std::make_shared<const Poset>(Poset::powerset(index));
  const auto filters = all_filters(*p);
  std::mt19937_64 rng(61);
  for (int round = 0; round < 60; ++round) {
    std::vector<FinMap> f, g, h;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto x = obj(1 + rng() % 2), y = obj(1 + rng() % 2);
      f.push_back(random_map(x, y, rng));
      g.push_back(random_map(x, y, rng));
      h.push_back(random_map(x, y, rng));
    }
    for (const auto& small : filters)
      for (const auto& large : filters) {
        if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) continue;
        const auto a = FilterProductSpec::finite(index, Filter::make_explicit(p, small));
        const auto b = FilterProductSpec::finite(index, Filter::make_explicit(p, large));
        if (los_equiv_check(a, f, g).holds) CHECK(los_equiv_check(b, f, g).holds);
        if (los_iso_check(a, f).holds) CHECK(los_iso_check(b, f).holds);
      }
    const auto spec = FilterProductSpec::finite(index, Filter::minimal(p));
    const auto fg = los_equiv_check(spec, f, g).locus, gh = los_equiv_check(spec, g, h).locus;
    const auto fh = los_equiv_check(spec, f, h).locus;
    CHECK((fg & gh & ~fh) == 0);
  }
}

TEST_CASE("loci over the naturals") {
  const auto spec = frechet();
  for (std::uint64_t m = 0; m <= 5; ++m) {
    const auto r = los_equiv_check(spec, diagonal_map(), numeral_map(m));
    CHECK_FALSE(r.holds);
    CHECK(r.locus == DefinableSubset::finite({m}));
  }
  CHECK(los_equiv_check(spec, diagonal_map(), diagonal_map()).locus == DefinableSubset::all());

  const auto x = constant(2);
  const SeqMap id(x, x, {}, tail::Constant{swap2()});
  CHECK(los_iso_check(spec, id).locus == DefinableSubset::all());
  const SeqMap almost(x, x, {{0, const2(0)}}, tail::Constant{swap2()});
  const auto a = los_iso_check(spec, almost);
  CHECK(a.holds);
  CHECK(a.locus == DefinableSubset::cofinite({0}));
  const SeqMap once(x, x, {{0, swap2()}}, tail::Constant{const2(1)});
  const auto b = los_iso_check(spec, once);
  CHECK_FALSE(b.holds);
  CHECK(b.locus == DefinableSubset::finite({0}));

  // a germ inverse for `almost`: patch index 0 arbitrarily
  const SeqMap inverse(x, x, {{0, const2(1)}}, tail::Constant{swap2()});
  const auto roundtrip = compose(inverse, almost);
  CHECK(los_equiv_check(spec, roundtrip, identity_seq(x)).holds);

  // alternating components agree on the even indices only
  const SeqMap alternating(x, x, {}, tail::Cyclic{{const2(0), const2(1)}});
  const SeqMap zero(x, x, {}, tail::Constant{const2(0)});
  CHECK_THROWS_AS(los_equiv_check(spec, alternating, zero), Error);
  try {
    los_equiv_check(spec, alternating, zero);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AgreementNotDefinable);
  }
  const SeqMap alternating_iso(x, x, {}, tail::Cyclic{{swap2(), swap2()}});
  CHECK(los_iso_check(spec, alternating_iso).locus == DefinableSubset::all());
  CHECK(los_equiv_check(spec, alternating, alternating).holds);
}

TEST_CASE("sequence maps are typed") {
  CHECK_THROWS_AS(SeqMap(constant(2), constant(3), {}, tail::Constant{swap2()}), Error);
  CHECK_THROWS_AS(SeqMap(constant(2), SeqObj::constant(NatObj{}), {}, tail::Diagonal{}), Error);
  CHECK_THROWS_AS(SeqMap(constant(2), constant(2), {{4, FinMap(obj(3), obj(2), {0, 0, 0})}}, tail::Constant{swap2()}),
                  Error);
  const SeqObj x{{{3, obj(3)}}, obj(2)};
  CHECK_NOTHROW(SeqMap(x, constant(2), {{3, FinMap(obj(3), obj(2), {0, 0, 0})}}, tail::Constant{swap2()}));
  CHECK(SeqObj{{{1, obj(2)}}, obj(2)} == constant(2));
}

TEST_CASE("composition of sequence maps") {
  const auto succ_m = compose(successor_map(), numeral_map(4));
  CHECK(std::holds_alternative<tail::Numeral>(succ_m.rule()));
  CHECK(std::get<tail::Numeral>(succ_m.rule()).m == 5);
  CHECK_THROWS_AS(compose(successor_map(), diagonal_map()), Error);
  // a sequence N -> {0,1} read off along the diagonal is eventually periodic
  const FromNat parity{obj(2), {{}, {0, 1}}};
  const SeqMap read(SeqObj::constant(NatObj{}), constant(2), {}, tail::Constant{parity});
  const auto along = compose(read, diagonal_map());
  CHECK(std::holds_alternative<tail::Cyclic>(along.rule()));
  for (std::uint64_t n = 0; n < 10; ++n) CHECK(along.at(n) == ComponentMap{point_of(obj(2), n % 2)});
}

TEST_CASE("pullbacks") {
  for (std::uint64_t m = 0; m <= 4; ++m) {
    const auto c = seq_pullback(diagonal_map(), numeral_map(m));
    CHECK(c.apex.tail == Component{FinObj("", {})});
    REQUIRE(c.apex.patches.size() == 1);
    CHECK(std::get<FinObj>(c.apex.patches.at(m)).size() == 1);
  }

  const auto x = constant(2);
  const SeqMap f(constant(3), x, {{2, FinMap(obj(3), obj(2), {1, 1, 1})}}, tail::Constant{FinMap(obj(3), obj(2), {0, 1, 1})});
  const SeqMap g(constant(2), x, {{0, const2(0)}, {5, swap2()}}, tail::Constant{FinMap(obj(2), obj(2), {1, 1})});
  const auto c = seq_pullback(f, g);
  const FinSetCat set;
  const std::uint64_t horizon = std::max(f.horizon(), g.horizon()) + 2;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    const auto fn = std::get<FinMap>(f.at(n)), gn = std::get<FinMap>(g.at(n));
    const auto lim = set.limit(cospan_diagram(set, fn, gn));
    const auto apex = std::get<FinObj>(c.apex.at(n));
    CHECK(apex.size() == lim.apex.size());
    const auto l = std::get<FinMap>(c.left.at(n)), r = std::get<FinMap>(c.right.at(n));
    for (std::size_t p = 0; p < apex.size(); ++p) CHECK(fn(l(p)) == gn(r(p)));
    // the cone is jointly injective, hence the pullback
    for (std::size_t p = 0; p < apex.size(); ++p)
      for (std::size_t q = p + 1; q < apex.size(); ++q) CHECK((l(p) != l(q) || r(p) != r(q)));
  }

  const auto id = identity_seq(x);
  const auto trivial = seq_pullback(id, g);
  CHECK(trivial.apex == g.source());
  const auto nat_id = identity_seq(SeqObj::constant(NatObj{}));
  CHECK(seq_pullback(nat_id, numeral_map(3)).apex == SeqObj::constant(one()));
  CHECK_THROWS_AS(seq_pullback(successor_map(), successor_map()), Error);
}

TEST_CASE("the natural numbers object counterexample") {
  const auto one_cert = nno_witness(1);
  CHECK(one_cert.passes());
  CHECK(one_cert.separations == std::vector<DefinableSubset>{DefinableSubset::finite({0}), DefinableSubset::finite({1})});
  CHECK(nno_witness(0).separations.size() == 1);
  const auto big = nno_witness(50);
  CHECK(big.passes());
  CHECK(big.separations.size() == 51);
  for (std::uint64_t m = 0; m <= 50; ++m) CHECK(big.vanishing[m] == DefinableSubset::cofinite({m}));
}

TEST_CASE("recursion in the filter product") {
  const auto spec = frechet();
  const auto single = constant(1);
  const SeqMap p1(SeqObj::constant(one()), single, {}, tail::Constant{point_of(obj(1), 0)});
  const SeqMap s1(single, single, {}, tail::Constant{FinMap(obj(1), obj(1), {0})});
  const auto h1 = nat_recursion_germ(single, p1, s1);
  CHECK(h1.patches().empty());
  CHECK(std::get<FromNat>(std::get<tail::Constant>(h1.rule()).map).sequence.canonical() == EventuallyPeriodic{{}, {0}});

  const auto x = constant(2);
  const SeqMap point(SeqObj::constant(one()), x, {}, tail::Constant{point_of(obj(2), 0)});
  const SeqMap step(x, x, {}, tail::Constant{swap2()});
  const auto h = nat_recursion_germ(x, point, step);
  CHECK(std::get<FromNat>(std::get<tail::Constant>(h.rule()).map).sequence.canonical() == EventuallyPeriodic{{}, {0, 1}});
  CHECK(los_equiv_check(spec, compose(h, zero_map()), point).locus == DefinableSubset::all());
  CHECK(los_equiv_check(spec, compose(h, successor_map()), compose(step, h)).locus == DefinableSubset::all());

  const SeqMap patched(SeqObj::constant(one()), x, {{3, point_of(obj(2), 1)}}, tail::Constant{point_of(obj(2), 0)});
  const auto hp = nat_recursion_germ(x, patched, step);
  REQUIRE(hp.patches().size() == 1);
  CHECK(hp.patches().count(3) == 1);
}
