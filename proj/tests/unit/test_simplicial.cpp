#include <doctest.h>

#include "germcat/error.hpp"
#include "germcat/simplicial/enriched.hpp"
#include "germcat/simplicial/lifting.hpp"
#include "germcat/simplicial/nerve.hpp"
#include "germcat/simplicial/simpset.hpp"
#include "simplicial_oracles.hpp"

using namespace germcat;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_kan(const SimpSet& x, std::size_t max_n) { return has_rlp(x, horn_generators(max_n, x.dim_bound())).holds; }

// J <- {a, b} -> J: two free isomorphisms glued at both ends
SimpDiagram glued_isomorphisms() {
  const auto j = nerve(codiscrete(2), 2);
  const auto ends = discrete_simpset({"a", "b"}, 2);
  SimpMap inclusion;
  for (std::size_t n = 0; n <= 2; ++n) {
    // the constant strings at object 0 and at object 1
    inclusion.levels.push_back({0, j.count(n) - 1});
  }
  return {{ends, j, j}, {{0, 1, inclusion}, {0, 2, inclusion}}};
}

}  // namespace

TEST_CASE("standard simplices and horns") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto s = standard_simplex(n, 3);
    for (std::size_t l = 0; l <= 3; ++l) CHECK(s.count(l) == binomial(n + l + 1, l + 1));
    CHECK(s.dimension() == n);
  }
  // Lambda^2_1: two edges, no 2-cell
  const auto h = horn(2, 1, 2);
  CHECK(h.nondegenerate(1).size() == 2);
  CHECK(h.nondegenerate(2).empty());
  CHECK(boundary(2, 2).nondegenerate(1).size() == 3);
  CHECK(is_simplicial_map(h, standard_simplex(2, 2), simplex_inclusion(2, 2, [](const std::vector<std::size_t>& s) {
                            return std::find(s.begin(), s.end(), 0) == s.end() || std::find(s.begin(), s.end(), 2) == s.end();
                          })));
}

TEST_CASE("normalized cells round trip") {
  NormalizedCells interval{3, {"0", "1"}, {{}, {{CellRef{0, 1, {0}}, CellRef{0, 0, {0}}}}}};
  const auto x = SimpSet::from_cells(interval);
  for (std::size_t l = 0; l <= 3; ++l) CHECK(x.count(l) == l + 2);
  CHECK(x.to_cells() == interval);

  for (const auto& s : {standard_simplex(2, 3), horn(3, 1, 3), nerve(cyclic_group(2), 3), nerve(chain(3), 2)}) {
    const auto cells = s.to_cells();
    const auto back = SimpSet::from_cells(cells);
    CHECK(back.to_cells() == cells);
    for (std::size_t l = 0; l <= s.dim_bound(); ++l) CHECK(back.count(l) == s.count(l));
  }

  // a face reference with the wrong vertex count
  NormalizedCells bad = interval;
  bad.cells[1][0][0].map = {0, 0};
  CHECK_THROWS_AS(SimpSet::from_cells(bad), Error);
}

TEST_CASE("simplicial identities are audited") {
  const auto s = standard_simplex(2, 2);
  auto faces = s.face_tables();
  auto degeneracies = s.degeneracy_tables();
  std::swap(faces[2][0][4], faces[2][1][4]);
  CHECK_THROWS_AS(SimpSet(2, s.vertices(), {s.count(0), s.count(1), s.count(2)}, faces, degeneracies), Error);
}

TEST_CASE("nerves") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto x = nerve(cyclic_group(n), 3);
    for (std::size_t l = 0; l <= 3; ++l) CHECK(x.count(l) == power(n, l));
  }
  const auto j = nerve(codiscrete(2), 3);
  for (std::size_t l = 0; l <= 3; ++l) CHECK(j.count(l) == power(2, l + 1));
  const auto interval = nerve(chain(2), 3);
  for (std::size_t l = 0; l <= 3; ++l) CHECK(interval.count(l) == standard_simplex(1, 3).count(l));
  CHECK(codiscrete(2).is_groupoid());
  CHECK_FALSE(chain(2).is_groupoid());

  // Z/4 -> Z/2
  std::vector<std::size_t> mod2{0, 1, 0, 1};
  CHECK(is_simplicial_map(nerve(cyclic_group(4), 2), nerve(cyclic_group(2), 2), nerve_map(cyclic_group(4), cyclic_group(2), mod2, 2)));
  CHECK_THROWS_AS(nerve_map(cyclic_group(4), cyclic_group(2), {0, 1, 1, 1}, 2), Error);
}

TEST_CASE("path components") {
  CHECK(pi0(disjoint_union(point(2), point(2))).count == 2);
  CHECK(pi0(standard_simplex(1, 2)).count == 1);
  CHECK(pi0(nerve(cyclic_group(2), 2)).count == 1);
  CHECK(pi0(empty_simpset(2)).count == 0);
  const std::vector<SimpSet> samples{nerve(chain(3), 2), disjoint_union(nerve(codiscrete(2), 2), horn(2, 0, 2)),
                                     discrete_simpset({"a", "b", "c"}, 2), boundary(3, 2)};
  for (const auto& s : samples) CHECK(pi0(s).count == oracle::component_count(s));
}

TEST_CASE("level-wise colimits and components") {
  // constant diagram
  const auto x = disjoint_union(nerve(cyclic_group(2), 2), point(2));
  const SimpDiagram constant{{x, x}, {{0, 1, identity_map(x)}}};
  const auto c = pi0_commutes_check(constant);
  CHECK(c.bijective);
  CHECK(c.of_colimit == 2);
  CHECK(colimit(constant).apex.count(2) == x.count(2));

  // the lower stage merges the two components of the upper one
  const auto two = discrete_simpset({"p", "q"}, 2);
  const auto one = point(2);
  SimpMap collapse;
  for (std::size_t n = 0; n <= 2; ++n) collapse.levels.push_back({0, 0});
  const auto merged = pi0_commutes_check({{two, one}, {{0, 1, collapse}}});
  CHECK(merged.bijective);
  CHECK(merged.of_colimit == 1);
  CHECK(merged.colimit_of == 1);

  const auto empty = pi0_commutes_check({{empty_simpset(2), empty_simpset(2)}, {{0, 1, identity_map(empty_simpset(2))}}});
  CHECK(empty.bijective);
  CHECK(empty.of_colimit == 0);

  // gluing two intervals at their ends: a circle with two edges
  const auto glued = colimit(glued_isomorphisms());
  CHECK(glued.apex.count(0) == 2);
  CHECK(pi0(glued.apex).count == 1);
  CHECK(pi0_commutes_check(glued_isomorphisms()).bijective);
  CHECK(has_terminal_index({{x, x}, {{0, 1, identity_map(x)}}}));
  CHECK_FALSE(has_terminal_index(glued_isomorphisms()));
}

TEST_CASE("horn filling") {
  CHECK(is_kan(nerve(cyclic_group(3), 3), 3));
  CHECK(is_kan(nerve(codiscrete(2), 3), 3));
  CHECK(is_kan(point(3), 3));
  const auto interval = nerve(chain(2), 2);
  const auto outer = horn_generators(2, 2);
  // Lambda^2_0 comes right after the two 1-horns
  const auto verdict = has_rlp(interval, {outer[2]});
  CHECK(outer[2].name == "horn(2,0)");
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.unfillable);
  CHECK_FALSE(find_extension(outer[2], interval, *verdict.unfillable));
  // inner horns fill in any nerve
  CHECK(has_rlp(nerve(chain(3), 2), {outer[3]}).holds);

  const std::vector<SimpSet> samples{nerve(chain(2), 3),      nerve(chain(3), 2),          nerve(idempotent_monoid(), 3),
                                     nerve(cyclic_group(2), 3), boundary(2, 2),             horn(2, 1, 2),
                                     standard_simplex(2, 2),  discrete_simpset({"a", "b"}, 3),
                                     colimit(glued_isomorphisms()).apex};
  for (const auto& s : samples) {
    const std::size_t top = std::min<std::size_t>(s.dim_bound(), 3);
    const auto gens = horn_generators(top, s.dim_bound());
    std::size_t g = 0;
    for (std::size_t n = 1; n <= top; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(has_rlp(s, {gens[g++]}).holds == oracle::horn_fillable(s, n, k));
    CHECK(has_rlp(s, gens).holds == oracle::kan_up_to(s, top));
  }
  CHECK_THROWS_AS(has_rlp(nerve(chain(2), 2), horn_generators(3, 2)), Error);
}

TEST_CASE("lifting is antitone in the generators") {
  const std::vector<SimpSet> samples{nerve(chain(3), 2), boundary(2, 2), nerve(cyclic_group(2), 2)};
  const auto gens = horn_generators(2, 2);
  for (const auto& s : samples)
    for (std::size_t mask = 0; mask < (1u << gens.size()); ++mask) {
      std::vector<GeneratingMono> some;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (mask >> g & 1) some.push_back(gens[g]);
      if (!has_rlp(s, some).holds) CHECK_FALSE(has_rlp(s, gens).holds);
    }
}

TEST_CASE("maps found by search are simplicial") {
  const auto h = horn(2, 1, 2);
  const auto x = nerve(codiscrete(2), 2);
  std::size_t count = 0;
  for_each_map(h, x, nullptr, [&](const SimpMap& f) {
    CHECK(is_simplicial_map(h, x, f));
    ++count;
    return true;
  });
  // a horn (f, g) in J is any composable pair of arrows: 2^3
  CHECK(count == 8);
  for (const auto& g : horn_generators(2, 2)) CHECK_NOTHROW(validate(g));
}

TEST_CASE("lifting under colimits") {
  const auto gens = horn_generators(2, 2);
  const auto x = nerve(cyclic_group(2), 2);
  const auto constant = rlp_preserved_check({{x, x}, {{0, 1, identity_map(x)}}}, gens);
  CHECK(constant.holds);
  CHECK(constant.shape_filtered);

  const auto big = nerve(cyclic_group(4), 2);
  const auto quotient = rlp_preserved_check(
      {{big, x}, {{0, 1, nerve_map(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}, 2)}}}, gens);
  CHECK(quotient.stages_ok);
  CHECK(quotient.holds);

  const auto glued = rlp_preserved_check(glued_isomorphisms(), gens);
  CHECK(glued.stages_ok);
  CHECK_FALSE(glued.shape_filtered);
  CHECK_FALSE(glued.colimit_ok);
  CHECK_FALSE(glued.holds);

  CHECK(generator_families().size() == 4);
  CHECK(generator_families()[0].instantiated);
}

TEST_CASE("enrichment checks") {
  const auto discrete = enriched_from_category(chain(2), 1, 2);
  CHECK(check_enrichment(discrete).ok);
  CHECK(discrete.hom(1, 0).count(0) == 0);
  const auto group = enriched_from_category(cyclic_group(1), 3, 2);
  CHECK(check_enrichment(group).ok);
  CHECK(group.hom(0, 0).count(2) == 9);
  CHECK(check_enrichment(enriched_from_category(codiscrete(2), 2, 2)).ok);

  // every single-entry corruption is caught
  const auto k = enriched_from_category(codiscrete(2), 2, 2);
  std::size_t mutants = 0;
  for (std::size_t t = 0; t < k.composition.size(); ++t)
    for (std::size_t n = 0; n < k.composition[t].size(); ++n)
      for (std::size_t e = 0; e < k.composition[t][n].size(); ++e) {
        const std::size_t a = t / 4, c = t % 2;
        for (std::size_t v = 0; v <= k.hom(a, c).count(n); ++v) {
          if (v == k.composition[t][n][e]) continue;
          ++mutants;
          CHECK_FALSE(check_enrichment(with_entry(k, t, n, e, v)).ok);
        }
      }
  CHECK(mutants > 100);
}

TEST_CASE("germ mapping complexes") {
  const auto z2 = enriched_from_category(cyclic_group(1), 2, 2);
  const auto pair = enriched_from_category(codiscrete(2), 1, 2);
  const auto index = std::vector<std::string>{"1", "2"};
  const auto stages = std::make_shared<const Poset>(Poset::powerset(index));
  const std::vector<EnrichedCat> family{pair, z2};

  const EnrichedQuotient minimal(index, family, Filter::minimal(stages));
  const EnrichedQuotient first(index, family, Filter::principal(stages, 1));
  const EnrichedQuotient improper(index, family, Filter::improper(stages));
  const EnrichedQuotient::Object x{0, 0}, y{1, 0};

  const auto full = minimal.germ_mapping_complex(x, y);
  const auto expected = product({pair.hom(0, 1), z2.hom(0, 0)}, 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(full.count(n) == expected.count(n));
    CHECK(first.germ_mapping_complex(x, y).count(n) == pair.hom(0, 1).count(n));
    CHECK(improper.germ_mapping_complex(x, y).count(n) == 1);
  }

  // the germ complex is the colimit of the stage diagram
  for (const auto* q : {&minimal, &first, &improper}) {
    const auto col = colimit(q->stage_diagram(x, y));
    const auto germ = q->germ_mapping_complex(x, y);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(col.apex.count(n) == germ.count(n));
  }

  // compose at a stage then restrict == restrict then compose
  const EnrichedQuotient::Object z{1, 0};
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto top = minimal.stage_hom(x, y, 3);
    const auto top2 = minimal.stage_hom(y, z, 3);
    const auto rf = first.restriction(x, y, 3, 1);
    const auto rg = first.restriction(y, z, 3, 1);
    const auto rh = first.restriction(x, z, 3, 1);
    for (std::size_t f = 0; f < top.count(n); ++f)
      for (std::size_t g = 0; g < top2.count(n); ++g)
        CHECK(rh.levels[n][first.compose_at(3, x, y, z, n, g, f)] ==
              first.compose(x, y, z, n, rg.levels[n][g], rf.levels[n][f]));
  }

  const auto one = std::make_shared<const Poset>(Poset::powerset({"1"}));
  CHECK_FALSE(EnrichedQuotient({"1"}, {z2}, Filter::minimal(one)).is_zero_truncated({0}));
  CHECK(EnrichedQuotient({"1"}, {pair}, Filter::minimal(one)).is_zero_truncated({0}));
  const std::vector<EnrichedCat> mixed{pair, z2};
  CHECK(EnrichedQuotient(index, mixed, Filter::principal(stages, 1)).is_zero_truncated({0, 0}));
  CHECK_FALSE(EnrichedQuotient(index, mixed, Filter::minimal(stages)).is_zero_truncated({0, 0}));
  CHECK_THROWS_AS(EnrichedQuotient(index, mixed, Filter::frechet()), Error);
}
