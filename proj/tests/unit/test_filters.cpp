#include <doctest.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "germcat/error.hpp"
#include "germcat/filters.hpp"
#include "oracles.hpp"

using namespace germcat;

namespace {

std::shared_ptr<const Poset> powerset(std::vector<std::string> atoms) {
  return std::make_shared<const Poset>(Poset::powerset(std::move(atoms)));
}

// Random poset: transitive closure of a random DAG on 0 < 1 < ... < n-1.
Poset random_poset(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) rel[i][j] = rng() % 3 == 0;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Poset(labels, [&](std::size_t x, std::size_t y) { return rel[x][y]; });
}

std::vector<std::string> labels(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("poset construction rejects non-orders") {
  CHECK_THROWS_AS(Poset(labels({"x", "y"}), [](std::size_t a, std::size_t b) { return a != b; }), Error);
  CHECK_THROWS_AS(Poset(labels({"x", "y"}), [](std::size_t, std::size_t) { return true; }), Error);
  CHECK_THROWS_AS(Poset::from_pairs(labels({"x", "y", "z"}), {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"y", "z"}}),
                  Error);
  CHECK_THROWS_AS(Poset(labels({"x", "x"}), [](std::size_t a, std::size_t b) { return a == b; }), Error);
}

TEST_CASE("powerset layout and meets") {
  const auto p = Poset::powerset({"a", "b"});
  REQUIRE(p.size() == 4);
  CHECK(p.label(0) == "{}");
  CHECK(p.label(3) == "{a,b}");
  CHECK(p.meet(1, 2) == std::optional<std::size_t>(0));
  CHECK(p.has_all_meets());
  CHECK(p.top() == std::optional<std::size_t>(3));
  CHECK(p.bottom() == std::optional<std::size_t>(0));
}

TEST_CASE("is_filter examples") {
  const auto chain = Poset::chain(2);
  const std::vector<std::string> top{"1"};
  CHECK(is_filter(chain, std::span<const std::string>(top)));

  const auto p = Poset::powerset({"a", "b"});
  const std::vector<std::string> no_lower_bound{"{a,b}", "{a}", "{b}"};
  CHECK_FALSE(is_filter(p, std::span<const std::string>(no_lower_bound)));
  const std::vector<std::string> everything{"{}", "{a}", "{b}", "{a,b}"};
  CHECK(is_filter(p, std::span<const std::string>(everything)));

  const std::vector<std::string> bogus{"{c}"};
  CHECK_THROWS_AS(is_filter(p, std::span<const std::string>(bogus)), Error);
}

TEST_CASE("is_filter agrees with the literal definition") {
  for (std::size_t atoms = 0; atoms <= 3; ++atoms) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    const auto p = Poset::powerset(names);
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << p.size()); ++s) {
      const auto subset = oracle::to_subset(s);
      CHECK(is_filter(p, std::span<const std::size_t>(subset)) == oracle::literal_is_filter(p, s));
    }
  }
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const auto p = random_poset(2 + rng() % 7, rng);
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << p.size()); ++s) {
      const auto subset = oracle::to_subset(s);
      REQUIRE(is_filter(p, std::span<const std::size_t>(subset)) == oracle::literal_is_filter(p, s));
    }
  }
  // sixteen elements: sampled subsets
  const auto big = Poset::powerset({"a", "b", "c", "d"});
  for (int round = 0; round < 3000; ++round) {
    const auto s = static_cast<oracle::Mask>(rng() & 0xffff);
    const auto subset = oracle::to_subset(s);
    REQUIRE(is_filter(big, std::span<const std::size_t>(subset)) == oracle::literal_is_filter(big, s));
  }
}

TEST_CASE("generate_filter examples") {
  const auto p = powerset({"a", "b"});
  const Subset a{1};
  CHECK(generate_filter(p, a).members() == Subset{1, 3});

  const auto q = powerset({"a", "b", "c"});
  const Subset ab_bc{3, 6};
  const auto f = generate_filter(q, ab_bc);
  CHECK(f.members() == q->up(2));
  CHECK(f.members().size() == 4);
  CHECK(f.minimum() == 2);

  const Subset top{3};
  CHECK(generate_filter(p, top).members() == Subset{3});
  CHECK_THROWS_AS(generate_filter(p, Subset{}), Error);
}

TEST_CASE("generate_filter is the least filter containing the base") {
  std::mt19937_64 rng(11);
  const auto q = powerset({"a", "b", "c", "d"});
  for (int round = 0; round < 200; ++round) {
    const auto base_mask = static_cast<oracle::Mask>(rng() & 0xffff) | 1u << (rng() % 16);
    const auto base = oracle::to_subset(base_mask);
    const auto f = generate_filter(q, base);
    CHECK(oracle::literal_is_filter(*q, oracle::to_mask(f.members())));
    CHECK(oracle::to_mask(f.members()) == oracle::smallest_filter_containing(*q, base_mask));
  }
  for (int round = 0; round < 60; ++round) {
    auto p = std::make_shared<const Poset>(random_poset(2 + rng() % 8, rng));
    const auto base_mask = static_cast<oracle::Mask>(1u << (rng() % p->size()) | 1u << (rng() % p->size()));
    const auto base = oracle::to_subset(base_mask);
    try {
      const auto f = generate_filter(p, base);
      CHECK(oracle::to_mask(f.members()) == oracle::smallest_filter_containing(*p, base_mask));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MeetUnavailable);
      CHECK_FALSE(p->has_all_meets());
    }
  }
}

TEST_CASE("explicit filters record their minimum") {
  const auto q = powerset({"a", "b", "c"});
  for (const auto& members : all_filters(*q)) {
    const auto f = Filter::make_explicit(q, members);
    std::size_t meet = members.front();
    for (auto m : members) meet = *q->meet(meet, m);
    CHECK(f.minimum() == meet);
  }
  CHECK_THROWS_AS(Filter::make_explicit(q, Subset{1, 2, 7}), Error);
}

TEST_CASE("ultrafilters") {
  const auto p = powerset({"a", "b"});
  const Subset up_a{1, 3};
  CHECK(is_ultrafilter(*p, up_a));
  const Subset top{3};
  CHECK_FALSE(is_ultrafilter(*p, top));
  CHECK_FALSE(is_ultrafilter(Filter::improper(p)));
  CHECK(all_filters(*p).size() == 4);
  CHECK_THROWS_AS(is_ultrafilter(*p, Subset{1, 2}), Error);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    const auto r = random_poset(2 + rng() % 7, rng);
    for (auto m : oracle::literal_filters(r))
      CHECK(is_ultrafilter(r, oracle::to_subset(m)) == oracle::literal_is_ultrafilter(r, m));
  }
}

TEST_CASE("definable subsets and the Frechet filter") {
  CHECK(frechet_contains(DefinableSubset::cofinite({0, 1, 2})));
  CHECK_FALSE(frechet_contains(DefinableSubset::finite({5})));
  CHECK(frechet_contains(DefinableSubset::all()));

  CHECK(definable_algebra(SetOp::Complement, DefinableSubset::finite({5})) == DefinableSubset::cofinite({5}));
  CHECK(definable_algebra(SetOp::Intersect, DefinableSubset::cofinite({1}), DefinableSubset::cofinite({2})) ==
        DefinableSubset::cofinite({1, 2}));
  CHECK(definable_algebra(SetOp::Union, DefinableSubset::finite({1, 2}), DefinableSubset::finite({2, 3})) ==
        DefinableSubset::finite({1, 2, 3}));
  CHECK(DefinableSubset::cofinite({3, 1}).to_string() == "N\\{1,3}");

  // filter axioms restricted to a window of small sets
  std::mt19937_64 rng(5);
  auto random_set = [&] {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t n = 0; n < 6; ++n)
      if (rng() % 2) xs.push_back(n);
    return rng() % 2 ? DefinableSubset::cofinite(xs) : DefinableSubset::finite(xs);
  };
  for (int round = 0; round < 500; ++round) {
    const auto a = random_set();
    const auto b = random_set();
    if (frechet_contains(a) && frechet_contains(b)) CHECK(frechet_contains(intersect(a, b)));
    if (frechet_contains(a) && a.subset_of(b)) CHECK(frechet_contains(b));
    for (std::uint64_t n = 0; n < 10; ++n) {
      CHECK(unite(a, b).contains(n) == (a.contains(n) || b.contains(n)));
      CHECK(intersect(a, b).contains(n) == (a.contains(n) && b.contains(n)));
      CHECK(a.complement().contains(n) == !a.contains(n));
    }
  }

  const auto frechet = Filter::frechet();
  CHECK(frechet.contains(DefinableSubset::cofinite({4})));
  CHECK_FALSE(frechet.contains(DefinableSubset::finite({4})));
  CHECK_THROWS_AS(frechet.minimum(), Error);
  const auto principal = Filter::principal_definable(DefinableSubset::finite({2, 3}));
  CHECK(principal.contains(DefinableSubset::finite({1, 2, 3})));
  CHECK_FALSE(principal.contains(DefinableSubset::finite({2})));
}
