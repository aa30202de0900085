#include "germcat/simplicial/lifting.hpp"

#include <algorithm>
#include <map>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"

namespace germcat {

void validate(const GeneratingMono& g) {
  if (!is_simplicial_map(g.domain, g.codomain, g.inclusion))
    fail(ErrorKind::InvalidArgument, "generator " + g.name + ": inclusion is not a simplicial map");
  for (const auto& level : g.inclusion.levels) {
    auto sorted = level;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::InvalidArgument, "generator " + g.name + ": inclusion is not injective");
  }
}

std::vector<GeneratingMono> horn_generators(std::size_t max_n, std::size_t dim_bound) {
  std::vector<GeneratingMono> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t d = std::max(n, dim_bound);
    for (std::size_t k = 0; k <= n; ++k) {
      auto keep = [n, k](const std::vector<std::size_t>& s) {
        for (std::size_t j = 0; j <= n; ++j)
          if (j != k && std::find(s.begin(), s.end(), j) == s.end()) return true;
        return false;
      };
      out.push_back({"horn(" + std::to_string(n) + "," + std::to_string(k) + ")", n, horn(n, k, d),
                     standard_simplex(n, d), simplex_inclusion(n, d, keep)});
    }
  }
  return out;
}

namespace {

struct Search {
  const SimpSet& s;
  const SimpSet& t;
  const PartialMap* fixed;
  const std::function<bool(const SimpMap&)>& visit;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  // for degenerate simplices: x = s_i y
  std::vector<std::vector<std::optional<std::pair<std::size_t, std::size_t>>>> degenerate_as;
  std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>> by_faces;
  SimpMap f;

  Search(const SimpSet& source, const SimpSet& target, const PartialMap* fx, const std::function<bool(const SimpMap&)>& v)
      : s(source), t(target), fixed(fx), visit(v) {
    const std::size_t d = s.dim_bound();
    degenerate_as.resize(d + 1);
    by_faces.resize(d + 1);
    f.levels.resize(d + 1);
    for (std::size_t n = 0; n <= d; ++n) {
      f.levels[n].assign(s.count(n), 0);
      degenerate_as[n].resize(s.count(n));
      for (std::size_t x = 0; x < s.count(n); ++x) {
        order.emplace_back(n, x);
        for (std::size_t i = 0; i < n && !degenerate_as[n][x]; ++i) {
          const std::size_t y = s.face(n, i, x);
          if (s.degeneracy(n - 1, i, y) == x) degenerate_as[n][x] = std::make_pair(i, y);
        }
      }
      for (std::size_t z = 0; n >= 1 && z < t.count(n); ++z) by_faces[n][faces_of(t, n, z)].push_back(z);
    }
  }

  static std::vector<std::size_t> faces_of(const SimpSet& x, std::size_t n, std::size_t z) {
    std::vector<std::size_t> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = x.face(n, i, z);
    return out;
  }

  bool allowed(std::size_t n, std::size_t x, std::size_t v) const {
    if (fixed && (*fixed)[n][x] && *(*fixed)[n][x] != v) return false;
    for (std::size_t i = 0; n >= 1 && i <= n; ++i)
      if (t.face(n, i, v) != f.levels[n - 1][s.face(n, i, x)]) return false;
    return true;
  }

  bool run(std::size_t pos) {
    budget::tick();
    if (pos == order.size()) return !visit(f);
    const auto [n, x] = order[pos];
    if (const auto& dg = degenerate_as[n][x]) {
      const std::size_t v = t.degeneracy(n - 1, dg->first, f.levels[n - 1][dg->second]);
      if (!allowed(n, x, v)) return false;
      f.levels[n][x] = v;
      return run(pos + 1);
    }
    auto attempt = [&](std::size_t v) {
      if (!allowed(n, x, v)) return false;
      f.levels[n][x] = v;
      return run(pos + 1);
    };
    if (fixed && (*fixed)[n][x]) return attempt(*(*fixed)[n][x]);
    if (n == 0) {
      for (std::size_t v = 0; v < t.count(0); ++v)
        if (attempt(v)) return true;
      return false;
    }
    std::vector<std::size_t> key(n + 1);
    for (std::size_t i = 0; i <= n; ++i) key[i] = f.levels[n - 1][s.face(n, i, x)];
    const auto it = by_faces[n].find(key);
    if (it == by_faces[n].end()) return false;
    for (auto v : it->second)
      if (attempt(v)) return true;
    return false;
  }
};

}  // namespace

bool for_each_map(const SimpSet& source, const SimpSet& target, const PartialMap* fixed,
                  const std::function<bool(const SimpMap&)>& visit) {
  if (source.dim_bound() != target.dim_bound())
    fail(ErrorKind::InvalidArgument, "maps between different dimension bounds");
  Search search(source, target, fixed, visit);
  return search.run(0);
}

std::optional<SimpMap> find_extension(const GeneratingMono& gen, const SimpSet& x, const SimpMap& h) {
  PartialMap fixed(gen.codomain.dim_bound() + 1);
  for (std::size_t n = 0; n < fixed.size(); ++n) {
    fixed[n].assign(gen.codomain.count(n), std::nullopt);
    for (std::size_t a = 0; a < gen.domain.count(n); ++a) fixed[n][gen.inclusion.levels[n][a]] = h.levels[n][a];
  }
  std::optional<SimpMap> found;
  for_each_map(gen.codomain, x, &fixed, [&](const SimpMap& g) {
    found = g;
    return false;
  });
  return found;
}

RlpVerdict has_rlp(const SimpSet& x, const std::vector<GeneratingMono>& gens) {
  for (const auto& g : gens) {
    if (g.dimension > x.dim_bound())
      fail(ErrorKind::DimensionOverflow, "generator " + g.name + " exceeds dimension bound " + std::to_string(x.dim_bound()));
    if (g.codomain.dim_bound() != x.dim_bound())
      fail(ErrorKind::InvalidArgument, "generator " + g.name + " is truncated at a different bound");
  }
  RlpVerdict out;
  for (std::size_t k = 0; k < gens.size() && out.holds; ++k)
    for_each_map(gens[k].domain, x, nullptr, [&](const SimpMap& h) {
      if (find_extension(gens[k], x, h)) return true;
      out.holds = false;
      out.failing_generator = k;
      out.unfillable = h;
      return false;
    });
  return out;
}

RlpPreservation rlp_preserved_check(const SimpDiagram& d, const std::vector<GeneratingMono>& gens) {
  RlpPreservation out;
  out.stages_ok = true;
  for (const auto& o : d.objects) {
    out.stages.push_back(has_rlp(o, gens).holds);
    out.stages_ok = out.stages_ok && out.stages.back();
  }
  out.shape_filtered = has_terminal_index(d);
  out.colimit_ok = has_rlp(colimit(d).apex, gens).holds;
  out.holds = out.stages_ok && out.colimit_ok;
  return out;
}

const std::vector<GeneratorFamily>& generator_families() {
  static const std::vector<GeneratorFamily> families{
      {"horn", "Lambda^n_k -> Delta^n; RLP against all of them is the Kan condition", true},
      {"reedy", "boundary inclusions of bisimplicial representables; RLP is Reedy fibrancy", false},
      {"segal", "spine inclusions G(n) -> F(n) in the space direction; RLP is the Segal condition", false},
      {"completeness", "the point inclusion into the nerve of the free isomorphism Z; RLP is completeness", false},
  };
  return families;
}

}  // namespace germcat
