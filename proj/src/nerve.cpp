#include "germcat/simplicial/nerve.hpp"

#include <functional>
#include <map>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"

namespace germcat {

std::size_t SmallCategory::compose(std::size_t g, std::size_t f) const {
  const std::size_t h = table.at(g * arrows.size() + f);
  if (h == none) fail(ErrorKind::NotComposable, arrows[g].label + " after " + arrows[f].label);
  return h;
}

std::vector<std::size_t> SmallCategory::hom(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].source == x && arrows[a].target == y) out.push_back(a);
  return out;
}

bool SmallCategory::is_groupoid() const {
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    bool invertible = false;
    for (auto g : hom(arrows[f].target, arrows[f].source))
      if (compose(g, f) == identities[arrows[f].source] && compose(f, g) == identities[arrows[f].target])
        invertible = true;
    if (!invertible) return false;
  }
  return true;
}

void validate(const SmallCategory& c) {
  const std::size_t n = c.arrows.size();
  auto bad = [](const std::string& m) { fail(ErrorKind::InvalidArgument, "category: " + m); };
  if (c.identities.size() != c.objects.size()) bad("one identity per object");
  if (c.table.size() != n * n) bad("composition table must be |arrows|^2");
  for (const auto& a : c.arrows)
    if (a.source >= c.objects.size() || a.target >= c.objects.size()) bad("arrow endpoint out of range");
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    const auto i = c.identities[x];
    if (i >= n || c.arrows[i].source != x || c.arrows[i].target != x) bad("identity of " + c.objects[x]);
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t h = c.table[g * n + f];
      const bool composable = c.arrows[f].target == c.arrows[g].source;
      if (composable != (h != SmallCategory::none)) bad("table defined exactly on composable pairs");
      if (!composable) continue;
      if (h >= n || c.arrows[h].source != c.arrows[f].source || c.arrows[h].target != c.arrows[g].target)
        bad("composite " + c.arrows[g].label + " o " + c.arrows[f].label + " has wrong endpoints");
    }
  for (std::size_t f = 0; f < n; ++f) {
    if (c.compose(c.identities[c.arrows[f].target], f) != f || c.compose(f, c.identities[c.arrows[f].source]) != f)
      bad("unit law fails for " + c.arrows[f].label);
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (c.arrows[f].target != c.arrows[g].source) continue;
      for (std::size_t h = 0; h < n; ++h)
        if (c.arrows[g].target == c.arrows[h].source && c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          bad("associativity fails");
    }
}

SmallCategory cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "Z/0");
  SmallCategory c;
  c.objects = {"*"};
  for (std::size_t k = 0; k < n; ++k) c.arrows.push_back({0, 0, std::to_string(k)});
  c.identities = {0};
  c.table.resize(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) c.table[g * n + f] = (g + f) % n;
  return c;
}

namespace {

// Thin categories: at most one arrow x -> y, present when rel(x, y).
SmallCategory thin(std::size_t k, const std::function<bool(std::size_t, std::size_t)>& rel) {
  SmallCategory c;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> at;
  for (std::size_t x = 0; x < k; ++x) c.objects.push_back(std::to_string(x));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (rel(x, y)) {
        at[{x, y}] = c.arrows.size();
        c.arrows.push_back({x, y, std::to_string(x) + "->" + std::to_string(y)});
      }
  for (std::size_t x = 0; x < k; ++x) c.identities.push_back(at.at({x, x}));
  const std::size_t n = c.arrows.size();
  c.table.assign(n * n, SmallCategory::none);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (c.arrows[f].target == c.arrows[g].source) c.table[g * n + f] = at.at({c.arrows[f].source, c.arrows[g].target});
  return c;
}

}  // namespace

SmallCategory chain(std::size_t n) {
  return thin(n, [](std::size_t x, std::size_t y) { return x <= y; });
}

SmallCategory codiscrete(std::size_t k) {
  return thin(k, [](std::size_t, std::size_t) { return true; });
}

SmallCategory idempotent_monoid() {
  SmallCategory c;
  c.objects = {"*"};
  c.arrows = {{0, 0, "1"}, {0, 0, "e"}};
  c.identities = {0};
  c.table = {0, 1, 1, 1};
  return c;
}

std::vector<std::vector<std::vector<std::size_t>>> nerve_strings(const SmallCategory& c, std::size_t dim_bound) {
  std::vector<std::vector<std::vector<std::size_t>>> levels(dim_bound + 1);
  for (std::size_t x = 0; x < c.objects.size(); ++x) levels[0].push_back({x});
  if (dim_bound == 0) return levels;
  for (std::size_t f = 0; f < c.arrows.size(); ++f) levels[1].push_back({f});
  for (std::size_t n = 2; n <= dim_bound; ++n) {
    for (const auto& s : levels[n - 1])
      for (std::size_t f = 0; f < c.arrows.size(); ++f) {
        if (c.arrows[f].source != c.arrows[s.back()].target) continue;
        auto t = s;
        t.push_back(f);
        levels[n].push_back(std::move(t));
      }
    budget::check_size(levels[n].size(), "nerve level");
  }
  return levels;
}

SimpSet nerve(const SmallCategory& c, std::size_t dim_bound) {
  validate(c);
  const auto strings = nerve_strings(c, dim_bound);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(dim_bound + 1);
  std::vector<std::size_t> sizes(dim_bound + 1);
  for (std::size_t n = 0; n <= dim_bound; ++n) {
    sizes[n] = strings[n].size();
    for (std::size_t k = 0; k < strings[n].size(); ++k) index[n][strings[n][k]] = k;
  }
  // vertex i of a string of n >= 1 arrows
  auto vertex = [&](const std::vector<std::size_t>& s, std::size_t i) {
    return i == 0 ? c.arrows[s[0]].source : c.arrows[s[i - 1]].target;
  };
  std::vector<std::vector<SimpSet::Table>> faces(dim_bound + 1), degeneracies(dim_bound + 1);
  for (std::size_t n = 0; n <= dim_bound; ++n) {
    if (n >= 1) faces[n].assign(n + 1, SimpSet::Table(sizes[n]));
    if (n < dim_bound) degeneracies[n].assign(n + 1, SimpSet::Table(sizes[n]));
    for (std::size_t k = 0; k < sizes[n]; ++k) {
      budget::tick();
      const auto& s = strings[n][k];
      if (n == 1) {
        faces[1][0][k] = c.arrows[s[0]].target;
        faces[1][1][k] = c.arrows[s[0]].source;
      } else if (n >= 2) {
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<std::size_t> t;
          if (i == 0) {
            t.assign(s.begin() + 1, s.end());
          } else if (i == n) {
            t.assign(s.begin(), s.end() - 1);
          } else {
            t.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i - 1));
            t.push_back(c.compose(s[i], s[i - 1]));
            t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1), s.end());
          }
          faces[n][i][k] = index[n - 1].at(t);
        }
      }
      if (n < dim_bound) {
        for (std::size_t i = 0; i <= n; ++i) {
          if (n == 0) {
            degeneracies[0][0][k] = index[1].at({c.identities[s[0]]});
            continue;
          }
          auto t = s;
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), c.identities[vertex(s, i)]);
          degeneracies[n][i][k] = index[n + 1].at(t);
        }
      }
    }
  }
  return SimpSet(dim_bound, c.objects, std::move(sizes), std::move(faces), std::move(degeneracies));
}

SimpMap nerve_map(const SmallCategory& from, const SmallCategory& to, const std::vector<std::size_t>& on_arrows,
                  std::size_t dim_bound) {
  auto bad = [](const std::string& m) { fail(ErrorKind::InvalidArgument, "functor: " + m); };
  if (on_arrows.size() != from.arrows.size()) bad("one image per arrow");
  std::vector<std::size_t> on_objects(from.objects.size());
  for (std::size_t x = 0; x < from.objects.size(); ++x) {
    const std::size_t i = on_arrows[from.identities[x]];
    if (i >= to.arrows.size()) bad("image out of range");
    on_objects[x] = to.arrows[i].source;
    if (to.identities[on_objects[x]] != i) bad("identities must go to identities");
  }
  for (std::size_t f = 0; f < from.arrows.size(); ++f) {
    const auto& img = to.arrows.at(on_arrows[f]);
    if (img.source != on_objects[from.arrows[f].source] || img.target != on_objects[from.arrows[f].target])
      bad("endpoints are not preserved");
  }
  for (std::size_t g = 0; g < from.arrows.size(); ++g)
    for (std::size_t f = 0; f < from.arrows.size(); ++f)
      if (from.arrows[f].target == from.arrows[g].source &&
          on_arrows[from.compose(g, f)] != to.compose(on_arrows[g], on_arrows[f]))
        bad("composition is not preserved");

  const auto source = nerve_strings(from, dim_bound);
  const auto target = nerve_strings(to, dim_bound);
  SimpMap out;
  for (std::size_t n = 0; n <= dim_bound; ++n) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < target[n].size(); ++k) index[target[n][k]] = k;
    std::vector<std::size_t> level;
    for (const auto& s : source[n]) {
      auto t = s;
      for (auto& a : t) a = n == 0 ? on_objects[a] : on_arrows[a];
      level.push_back(index.at(t));
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace germcat
