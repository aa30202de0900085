#include "germcat/simplicial/simpset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"
#include "germcat/fincat/finset.hpp"

namespace germcat {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::InvalidSimplicialSet, msg); }

std::string at(std::size_t n, std::size_t x) { return "simplex " + std::to_string(x) + " of level " + std::to_string(n); }

bool is_surjection(const std::vector<std::size_t>& s, std::size_t m) {
  if (s.empty() || s.front() != 0 || s.back() != m) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] != s[k - 1] && s[k] != s[k - 1] + 1) return false;
  return true;
}

// Monotone surjections [n] -> [m] in lexicographic order.
std::vector<std::vector<std::size_t>> surjections(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> s(n + 1, 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n + 1) {
      if (s.back() == m) out.push_back(s);
      return;
    }
    const std::size_t prev = s[k - 1];
    s[k] = prev;
    go(k + 1);
    if (prev < m) {
      s[k] = prev + 1;
      go(k + 1);
    }
  };
  if (n == 0) {
    if (m == 0) out.push_back({0});
    return out;
  }
  go(1);
  return out;
}

std::vector<std::size_t> identity_seq(std::size_t n) {
  std::vector<std::size_t> s(n + 1);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::vector<std::size_t> duplicate_entry(const std::vector<std::size_t>& s, std::size_t i) {
  std::vector<std::size_t> out(s);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
  return out;
}

std::vector<std::size_t> remove_entry(const std::vector<std::size_t>& s, std::size_t i) {
  std::vector<std::size_t> out(s);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

// ---------------------------------------------------------------- SimpSet

SimpSet::SimpSet(std::size_t dim_bound, std::vector<std::string> vertices, std::vector<std::size_t> sizes,
                 std::vector<std::vector<Table>> faces, std::vector<std::vector<Table>> degeneracies)
    : dim_bound_(dim_bound),
      vertices_(std::move(vertices)),
      sizes_(std::move(sizes)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  const std::size_t d = dim_bound_;
  if (sizes_.size() != d + 1 || faces_.size() != d + 1 || degeneracies_.size() != d + 1)
    bad("levels do not match the dimension bound");
  if (vertices_.size() != sizes_[0]) bad("one label per vertex is required");
  for (std::size_t n = 0; n <= d; ++n) {
    if (faces_[n].size() != (n == 0 ? 0 : n + 1)) bad("wrong number of face maps at level " + std::to_string(n));
    if (degeneracies_[n].size() != (n < d ? n + 1 : 0))
      bad("wrong number of degeneracy maps at level " + std::to_string(n));
    for (const auto& t : faces_[n]) {
      if (t.size() != sizes_[n]) bad("face table has the wrong length at level " + std::to_string(n));
      for (auto v : t)
        if (v >= sizes_[n - 1]) bad("face out of range at level " + std::to_string(n));
    }
    for (const auto& t : degeneracies_[n]) {
      if (t.size() != sizes_[n]) bad("degeneracy table has the wrong length at level " + std::to_string(n));
      for (auto v : t)
        if (v >= sizes_[n + 1]) bad("degeneracy out of range at level " + std::to_string(n));
    }
  }
  for (std::size_t n = 2; n <= d; ++n)
    for (std::size_t x = 0; x < sizes_[n]; ++x)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          budget::tick();
          if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
            bad("d_i d_j = d_{j-1} d_i fails at " + at(n, x));
        }
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t x = 0; x < sizes_[n]; ++x)
      for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t sx = degeneracy(n, j, x);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          budget::tick();
          const std::size_t lhs = face(n + 1, i, sx);
          std::size_t rhs;
          if (i < j)
            rhs = degeneracy(n - 1, j - 1, face(n, i, x));
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = degeneracy(n - 1, j, face(n, i - 1, x));
          if (lhs != rhs) bad("face of a degeneracy fails at " + at(n, x));
        }
        if (n + 2 <= d)
          for (std::size_t i = 0; i <= j; ++i)
            if (degeneracy(n + 1, i, sx) != degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
              bad("s_i s_j = s_{j+1} s_i fails at " + at(n, x));
      }
}

SimpSet SimpSet::from_cells(const NormalizedCells& c) {
  const std::size_t d = c.dim_bound;
  if (c.cells.size() > d + 1) bad("cells above the dimension bound");
  if (!c.cells.empty() && !c.cells[0].empty()) bad("0-cells are given as vertex labels");
  auto cells_at = [&](std::size_t m) -> std::size_t {
    if (m == 0) return c.vertices.size();
    return m < c.cells.size() ? c.cells[m].size() : 0;
  };
  for (std::size_t m = 1; m < c.cells.size(); ++m)
    for (std::size_t y = 0; y < c.cells[m].size(); ++y) {
      const auto& fs = c.cells[m][y];
      if (fs.size() != m + 1) bad("a " + std::to_string(m) + "-cell needs " + std::to_string(m + 1) + " faces");
      for (const auto& r : fs) {
        if (r.dim >= m || r.cell >= cells_at(r.dim) || r.map.size() != m || !is_surjection(r.map, r.dim))
          bad("malformed face reference in cell " + std::to_string(y) + " of dimension " + std::to_string(m));
      }
    }

  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::vector<std::vector<Key>> keys(d + 1);
  std::vector<std::map<Key, std::size_t>> index(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    for (std::size_t y = 0; y < cells_at(n); ++y) keys[n].emplace_back(n, y, identity_seq(n));
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t y = 0; y < cells_at(m); ++y)
        for (auto& s : surjections(n, m)) keys[n].emplace_back(m, y, std::move(s));
    for (std::size_t k = 0; k < keys[n].size(); ++k) index[n][keys[n][k]] = k;
  }

  std::vector<std::size_t> sizes(d + 1);
  std::vector<std::vector<SimpSet::Table>> faces(d + 1), degeneracies(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    sizes[n] = keys[n].size();
    if (n >= 1) {
      faces[n].assign(n + 1, Table(sizes[n]));
      for (std::size_t k = 0; k < sizes[n]; ++k) {
        const auto& [m, y, s] = keys[n][k];
        for (std::size_t i = 0; i <= n; ++i) {
          budget::tick();
          auto t = remove_entry(s, i);
          const bool still_onto = (i > 0 && s[i - 1] == s[i]) || (i < n && s[i + 1] == s[i]);
          Key face_key;
          if (still_onto) {
            face_key = Key{m, y, std::move(t)};
          } else {
            const std::size_t j = s[i];
            for (auto& v : t)
              if (v > j) --v;
            const auto& r = c.cells[m][y][j];
            std::vector<std::size_t> composite(t.size());
            for (std::size_t q = 0; q < t.size(); ++q) composite[q] = r.map[t[q]];
            face_key = Key{r.dim, r.cell, std::move(composite)};
          }
          faces[n][i][k] = index[n - 1].at(face_key);
        }
      }
    }
    if (n < d) {
      degeneracies[n].assign(n + 1, Table(sizes[n]));
      for (std::size_t k = 0; k < sizes[n]; ++k) {
        const auto& [m, y, s] = keys[n][k];
        for (std::size_t i = 0; i <= n; ++i) degeneracies[n][i][k] = index[n + 1].at(Key{m, y, duplicate_entry(s, i)});
      }
    }
  }
  return SimpSet(d, c.vertices, std::move(sizes), std::move(faces), std::move(degeneracies));
}

bool SimpSet::is_degenerate(std::size_t n, std::size_t x) const {
  for (std::size_t i = 0; i < n; ++i)
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  return false;
}

std::vector<std::size_t> SimpSet::nondegenerate(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < count(n); ++x)
    if (!is_degenerate(n, x)) out.push_back(x);
  return out;
}

CellRef SimpSet::decompose(std::size_t n, std::size_t x) const {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t y = face(n, i, x);
    if (degeneracy(n - 1, i, y) != x) continue;
    auto r = decompose(n - 1, y);
    r.map = duplicate_entry(r.map, i);
    return r;
  }
  const auto nd = nondegenerate(n);
  const auto pos = static_cast<std::size_t>(std::find(nd.begin(), nd.end(), x) - nd.begin());
  return CellRef{n, pos, identity_seq(n)};
}

NormalizedCells SimpSet::to_cells() const {
  NormalizedCells out;
  out.dim_bound = dim_bound_;
  out.vertices = vertices_;
  const std::size_t top = dimension();
  out.cells.resize(top >= 1 ? top + 1 : 0);
  for (std::size_t m = 1; m <= top; ++m)
    for (auto x : nondegenerate(m)) {
      std::vector<CellRef> fs;
      for (std::size_t i = 0; i <= m; ++i) fs.push_back(decompose(m - 1, face(m, i, x)));
      out.cells[m].push_back(std::move(fs));
    }
  return out;
}

std::size_t SimpSet::dimension() const {
  std::size_t top = 0;
  for (std::size_t n = 1; n <= dim_bound_; ++n)
    if (!nondegenerate(n).empty()) top = n;
  return top;
}

// ---------------------------------------------------------------- maps

bool is_simplicial_map(const SimpSet& s, const SimpSet& t, const SimpMap& f) {
  const std::size_t d = s.dim_bound();
  if (t.dim_bound() != d || f.levels.size() != d + 1) return false;
  for (std::size_t n = 0; n <= d; ++n) {
    if (f.levels[n].size() != s.count(n)) return false;
    for (auto v : f.levels[n])
      if (v >= t.count(n)) return false;
  }
  for (std::size_t n = 0; n <= d; ++n)
    for (std::size_t x = 0; x < s.count(n); ++x) {
      for (std::size_t i = 0; n >= 1 && i <= n; ++i)
        if (f.levels[n - 1][s.face(n, i, x)] != t.face(n, i, f.levels[n][x])) return false;
      for (std::size_t i = 0; n < d && i <= n; ++i)
        if (f.levels[n + 1][s.degeneracy(n, i, x)] != t.degeneracy(n, i, f.levels[n][x])) return false;
    }
  return true;
}

SimpMap identity_map(const SimpSet& x) {
  SimpMap f;
  for (std::size_t n = 0; n <= x.dim_bound(); ++n) {
    f.levels.emplace_back(x.count(n));
    std::iota(f.levels.back().begin(), f.levels.back().end(), 0);
  }
  return f;
}

SimpMap compose(const SimpMap& g, const SimpMap& f) {
  SimpMap out{f.levels};
  for (std::size_t n = 0; n < out.levels.size(); ++n)
    for (auto& v : out.levels[n]) v = g.levels.at(n).at(v);
  return out;
}

// ---------------------------------------------------------------- builders

SimpSet discrete_simpset(std::vector<std::string> vertices, std::size_t d) {
  const std::size_t k = vertices.size();
  SimpSet::Table id(k);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<SimpSet::Table>> faces(d + 1), degeneracies(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    if (n >= 1) faces[n].assign(n + 1, id);
    if (n < d) degeneracies[n].assign(n + 1, id);
  }
  return SimpSet(d, std::move(vertices), std::vector<std::size_t>(d + 1, k), std::move(faces), std::move(degeneracies));
}

SimpSet empty_simpset(std::size_t d) { return discrete_simpset({}, d); }

SimpSet point(std::size_t d) { return discrete_simpset({"*"}, d); }

namespace {

struct SequenceLevels {
  std::vector<std::vector<std::vector<std::size_t>>> seqs;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
};

SequenceLevels sequences(std::size_t n, std::size_t d, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  SequenceLevels out;
  out.seqs.resize(d + 1);
  out.index.resize(d + 1);
  for (std::size_t l = 0; l <= d; ++l) {
    std::vector<std::size_t> s(l + 1, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pos, std::size_t lo) {
      if (pos == l + 1) {
        if (keep(s)) {
          out.index[l][s] = out.seqs[l].size();
          out.seqs[l].push_back(s);
        }
        return;
      }
      for (std::size_t v = lo; v <= n; ++v) {
        s[pos] = v;
        go(pos + 1, v);
      }
    };
    go(0, 0);
  }
  return out;
}

}  // namespace

SimpSet simplex_subcomplex(std::size_t n, std::size_t d, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  const auto lv = sequences(n, d, keep);
  std::vector<std::string> vertices;
  for (const auto& s : lv.seqs[0]) vertices.push_back(std::to_string(s[0]));
  std::vector<std::size_t> sizes(d + 1);
  std::vector<std::vector<SimpSet::Table>> faces(d + 1), degeneracies(d + 1);
  for (std::size_t l = 0; l <= d; ++l) {
    sizes[l] = lv.seqs[l].size();
    if (l >= 1) {
      faces[l].assign(l + 1, SimpSet::Table(sizes[l]));
      for (std::size_t k = 0; k < sizes[l]; ++k)
        for (std::size_t i = 0; i <= l; ++i) {
          auto it = lv.index[l - 1].find(remove_entry(lv.seqs[l][k], i));
          if (it == lv.index[l - 1].end()) fail(ErrorKind::InvalidArgument, "subcomplex is not closed under faces");
          faces[l][i][k] = it->second;
        }
    }
    if (l < d) {
      degeneracies[l].assign(l + 1, SimpSet::Table(sizes[l]));
      for (std::size_t k = 0; k < sizes[l]; ++k)
        for (std::size_t i = 0; i <= l; ++i) {
          auto it = lv.index[l + 1].find(duplicate_entry(lv.seqs[l][k], i));
          if (it == lv.index[l + 1].end()) fail(ErrorKind::InvalidArgument, "subcomplex is not closed under degeneracies");
          degeneracies[l][i][k] = it->second;
        }
    }
  }
  return SimpSet(d, std::move(vertices), std::move(sizes), std::move(faces), std::move(degeneracies));
}

SimpMap simplex_inclusion(std::size_t n, std::size_t d, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  const auto sub = sequences(n, d, keep);
  const auto all = sequences(n, d, [](const std::vector<std::size_t>&) { return true; });
  SimpMap f;
  for (std::size_t l = 0; l <= d; ++l) {
    f.levels.emplace_back();
    for (const auto& s : sub.seqs[l]) f.levels.back().push_back(all.index[l].at(s));
  }
  return f;
}

namespace {

std::size_t distinct_values(const std::vector<std::size_t>& s) {
  std::vector<std::size_t> t(s);
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t.size();
}

bool misses_some_face_other_than(const std::vector<std::size_t>& s, std::size_t n, std::size_t k) {
  // the simplex lies in d_j Delta^n for some j != k
  for (std::size_t j = 0; j <= n; ++j)
    if (j != k && std::find(s.begin(), s.end(), j) == s.end()) return true;
  return false;
}

}  // namespace

SimpSet standard_simplex(std::size_t n, std::size_t d) {
  return simplex_subcomplex(n, d, [](const std::vector<std::size_t>&) { return true; });
}

SimpSet horn(std::size_t n, std::size_t k, std::size_t d) {
  if (k > n || n == 0) fail(ErrorKind::InvalidArgument, "horn index out of range");
  return simplex_subcomplex(n, d, [n, k](const std::vector<std::size_t>& s) { return misses_some_face_other_than(s, n, k); });
}

SimpSet boundary(std::size_t n, std::size_t d) {
  return simplex_subcomplex(n, d, [n](const std::vector<std::size_t>& s) { return distinct_values(s) < n + 1; });
}

SimpSet product(const std::vector<SimpSet>& factors, std::size_t d) {
  if (factors.empty()) return point(d);
  for (const auto& f : factors)
    if (f.dim_bound() != d) fail(ErrorKind::InvalidArgument, "product factors have different dimension bounds");
  const std::size_t k = factors.size();
  std::vector<std::size_t> sizes(d + 1, 1);
  for (std::size_t n = 0; n <= d; ++n)
    for (const auto& f : factors) {
      sizes[n] *= f.count(n);
      budget::check_size(sizes[n], "product level");
    }
  auto split = [&](std::size_t n, std::size_t x) {
    std::vector<std::size_t> parts(k);
    for (std::size_t j = k; j-- > 0;) {
      parts[j] = x % factors[j].count(n);
      x /= factors[j].count(n);
    }
    return parts;
  };
  auto join = [&](std::size_t n, const std::vector<std::size_t>& parts) {
    std::size_t x = 0;
    for (std::size_t j = 0; j < k; ++j) x = x * factors[j].count(n) + parts[j];
    return x;
  };
  std::vector<std::string> vertices;
  for (std::size_t x = 0; x < sizes[0]; ++x) {
    const auto parts = split(0, x);
    if (k == 1) {
      vertices.push_back(factors[0].vertices()[parts[0]]);
      continue;
    }
    std::string s = "(";
    for (std::size_t j = 0; j < k; ++j) s += (j ? "," : "") + factors[j].vertices()[parts[j]];
    vertices.push_back(s + ")");
  }
  std::vector<std::vector<SimpSet::Table>> faces(d + 1), degeneracies(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    if (n >= 1) faces[n].assign(n + 1, SimpSet::Table(sizes[n]));
    if (n < d) degeneracies[n].assign(n + 1, SimpSet::Table(sizes[n]));
    for (std::size_t x = 0; x < sizes[n]; ++x) {
      budget::tick();
      const auto parts = split(n, x);
      std::vector<std::size_t> image(k);
      for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
        for (std::size_t j = 0; j < k; ++j) image[j] = factors[j].face(n, i, parts[j]);
        faces[n][i][x] = join(n - 1, image);
      }
      for (std::size_t i = 0; n < d && i <= n; ++i) {
        for (std::size_t j = 0; j < k; ++j) image[j] = factors[j].degeneracy(n, i, parts[j]);
        degeneracies[n][i][x] = join(n + 1, image);
      }
    }
  }
  return SimpSet(d, std::move(vertices), std::move(sizes), std::move(faces), std::move(degeneracies));
}

SimpMap product_projection(const std::vector<SimpSet>& factors, const std::vector<std::size_t>& keep) {
  const std::size_t d = factors.empty() ? 0 : factors[0].dim_bound();
  SimpMap f;
  for (std::size_t n = 0; n <= d; ++n) {
    std::size_t total = 1;
    for (const auto& s : factors) total *= s.count(n);
    std::vector<std::size_t> level(total);
    for (std::size_t x = 0; x < total; ++x) {
      std::vector<std::size_t> parts(factors.size());
      std::size_t rest = x;
      for (std::size_t j = factors.size(); j-- > 0;) {
        parts[j] = rest % factors[j].count(n);
        rest /= factors[j].count(n);
      }
      std::size_t y = 0;
      for (auto j : keep) y = y * factors.at(j).count(n) + parts[j];
      level[x] = y;
    }
    f.levels.push_back(std::move(level));
  }
  return f;
}

SimpSet disjoint_union(const SimpSet& a, const SimpSet& b) {
  const std::size_t d = a.dim_bound();
  if (b.dim_bound() != d) fail(ErrorKind::InvalidArgument, "disjoint union of different dimension bounds");
  std::vector<std::string> vertices;
  for (const auto& v : a.vertices()) vertices.push_back("0:" + v);
  for (const auto& v : b.vertices()) vertices.push_back("1:" + v);
  std::vector<std::size_t> sizes(d + 1);
  std::vector<std::vector<SimpSet::Table>> faces(d + 1), degeneracies(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    sizes[n] = a.count(n) + b.count(n);
    auto merge = [&](const SimpSet::Table& ta, const SimpSet::Table& tb, std::size_t offset) {
      SimpSet::Table t(ta);
      for (auto v : tb) t.push_back(v + offset);
      return t;
    };
    for (std::size_t i = 0; n >= 1 && i <= n; ++i)
      faces[n].push_back(merge(a.face_tables()[n][i], b.face_tables()[n][i], a.count(n - 1)));
    for (std::size_t i = 0; n < d && i <= n; ++i)
      degeneracies[n].push_back(merge(a.degeneracy_tables()[n][i], b.degeneracy_tables()[n][i], a.count(n + 1)));
  }
  return SimpSet(d, std::move(vertices), std::move(sizes), std::move(faces), std::move(degeneracies));
}

// ---------------------------------------------------------------- colimits

void validate(const SimpDiagram& d) {
  if (d.objects.empty()) return;
  const std::size_t bound = d.objects[0].dim_bound();
  for (const auto& o : d.objects)
    if (o.dim_bound() != bound) fail(ErrorKind::IllFormedDiagram, "diagram objects have different dimension bounds");
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arr = d.arrows[a];
    if (arr.from >= d.objects.size() || arr.to >= d.objects.size())
      fail(ErrorKind::IllFormedDiagram, "arrow " + std::to_string(a) + " has an endpoint out of range");
    if (!is_simplicial_map(d.objects[arr.from], d.objects[arr.to], arr.map))
      fail(ErrorKind::IllFormedDiagram, "arrow " + std::to_string(a) + " is not a simplicial map");
  }
}

SimpCocone colimit(const SimpDiagram& d) {
  validate(d);
  if (d.objects.empty()) return {empty_simpset(0), {}};
  const std::size_t bound = d.objects[0].dim_bound();
  const std::size_t k = d.objects.size();
  const FinSetCat set;
  std::vector<std::size_t> sizes(bound + 1);
  std::vector<std::string> vertices;
  std::vector<SimpMap> legs(k);
  for (std::size_t n = 0; n <= bound; ++n) {
    Diagram<FinSetCat> level;
    for (const auto& o : d.objects)
      level.objects.push_back(n == 0 ? FinObj("", make_unique_labels(o.vertices())) : FinObj::standard(o.count(n)));
    for (const auto& a : d.arrows)
      level.arrows.push_back({a.from, a.to, FinMap(level.objects[a.from], level.objects[a.to], a.map.levels[n])});
    const auto col = set.colimit(level);
    sizes[n] = col.apex.size();
    if (n == 0) vertices = col.apex.elements;
    for (std::size_t j = 0; j < k; ++j) legs[j].levels.push_back(col.legs[j].assignment());
  }
  // a representative (object, simplex) for every simplex of the colimit
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rep(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) {
    rep[n].assign(sizes[n], {0, 0});
    std::vector<bool> seen(sizes[n], false);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t x = 0; x < d.objects[j].count(n); ++x) {
        const std::size_t q = legs[j].levels[n][x];
        if (!seen[q]) {
          seen[q] = true;
          rep[n][q] = {j, x};
        }
      }
  }
  std::vector<std::vector<SimpSet::Table>> faces(bound + 1), degeneracies(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      SimpSet::Table t(sizes[n]);
      for (std::size_t q = 0; q < sizes[n]; ++q) {
        const auto [j, x] = rep[n][q];
        t[q] = legs[j].levels[n - 1][d.objects[j].face(n, i, x)];
      }
      faces[n].push_back(std::move(t));
    }
    for (std::size_t i = 0; n < bound && i <= n; ++i) {
      SimpSet::Table t(sizes[n]);
      for (std::size_t q = 0; q < sizes[n]; ++q) {
        const auto [j, x] = rep[n][q];
        t[q] = legs[j].levels[n + 1][d.objects[j].degeneracy(n, i, x)];
      }
      degeneracies[n].push_back(std::move(t));
    }
  }
  return {SimpSet(bound, std::move(vertices), std::move(sizes), std::move(faces), std::move(degeneracies)),
          std::move(legs)};
}

bool has_terminal_index(const SimpDiagram& d) {
  const std::size_t k = d.objects.size();
  if (k == 0) return false;
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) reach[j][j] = true;
  for (const auto& a : d.arrows) reach[a.from][a.to] = true;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;
  for (std::size_t t = 0; t < k; ++t) {
    bool all = true;
    for (std::size_t j = 0; j < k && all; ++j) all = reach[j][t];
    if (all) return true;
  }
  return false;
}

Components pi0(const SimpSet& x) {
  UnionFind uf(x.count(0));
  if (x.dim_bound() >= 1)
    for (std::size_t e = 0; e < x.count(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));
  Components out;
  out.component_of.resize(x.count(0));
  std::vector<std::size_t> number(x.count(0), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < x.count(0); ++v) {
    const std::size_t r = uf.find(v);
    if (number[r] == static_cast<std::size_t>(-1)) number[r] = out.count++;
    out.component_of[v] = number[r];
  }
  return out;
}

Pi0Comparison pi0_commutes_check(const SimpDiagram& d) {
  validate(d);
  Pi0Comparison out;
  const auto col = colimit(d);
  const auto whole = pi0(col.apex);
  out.of_colimit = whole.count;

  std::vector<Components> parts;
  for (const auto& o : d.objects) parts.push_back(pi0(o));
  const FinSetCat set;
  Diagram<FinSetCat> sets;
  for (const auto& p : parts) sets.objects.push_back(FinObj::standard(p.count));
  for (const auto& a : d.arrows) {
    const auto& from = d.objects[a.from];
    std::vector<std::size_t> induced(parts[a.from].count);
    for (std::size_t v = 0; v < from.count(0); ++v)
      induced[parts[a.from].component_of[v]] = parts[a.to].component_of[a.map.levels[0][v]];
    sets.arrows.push_back({a.from, a.to, FinMap(sets.objects[a.from], sets.objects[a.to], std::move(induced))});
  }
  const auto small = set.colimit(sets);
  out.colimit_of = small.apex.size();

  // colim pi0(X_j) -> pi0(colim X_j), induced by the colimit legs
  std::vector<std::optional<std::size_t>> comparison(small.apex.size());
  bool function = true;
  for (std::size_t j = 0; j < d.objects.size(); ++j)
    for (std::size_t v = 0; v < d.objects[j].count(0); ++v) {
      const std::size_t from = small.legs[j](parts[j].component_of[v]);
      const std::size_t to = whole.component_of[col.legs[j].levels[0][v]];
      if (comparison[from] && *comparison[from] != to) function = false;
      comparison[from] = to;
    }
  std::vector<bool> hit(whole.count, false);
  bool injective = true;
  for (const auto& c : comparison) {
    if (!c) {
      function = false;
      continue;
    }
    if (hit[*c]) injective = false;
    hit[*c] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  out.bijective = function && injective && surjective;
  return out;
}

}  // namespace germcat
