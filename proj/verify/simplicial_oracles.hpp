#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "germcat/simplicial/simpset.hpp"

// Independent checks for the simplicial layer: horn filling by enumerating
// compatible face tuples rather than simplicial maps, and components by
// depth-first search.
namespace germcat::oracle {

/// Every compatible tuple (y_j)_{j != k} of (n-1)-simplices has a filler z
/// with d_j z = y_j.
inline bool horn_fillable(const SimpSet& x, std::size_t n, std::size_t k) {
  std::vector<std::size_t> faces;  // positions j != k
  for (std::size_t j = 0; j <= n; ++j)
    if (j != k) faces.push_back(j);
  std::vector<std::size_t> y(n + 1, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t p) -> bool {
    if (p == faces.size()) {
      for (std::size_t z = 0; z < x.count(n); ++z) {
        bool ok = true;
        for (auto j : faces) ok = ok && x.face(n, j, z) == y[j];
        if (ok) return true;
      }
      return false;
    }
    const std::size_t j = faces[p];
    for (std::size_t v = 0; v < x.count(n - 1); ++v) {
      y[j] = v;
      bool ok = true;
      // d_i y_j = d_{j-1} y_i for i < j
      for (std::size_t q = 0; q < p && ok && n >= 2; ++q) {
        const std::size_t i = faces[q];
        ok = x.face(n - 1, i, y[j]) == x.face(n - 1, j - 1, y[i]);
      }
      if (ok && !go(p + 1)) return false;
    }
    return true;
  };
  return go(0);
}

inline bool kan_up_to(const SimpSet& x, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!horn_fillable(x, n, k)) return false;
  return true;
}

/// Component of each vertex, numbered in order of first discovery, and the
/// number of components.
inline std::pair<std::vector<std::size_t>, std::size_t> component_labels(const SimpSet& x) {
  const std::size_t v = x.count(0);
  std::vector<std::vector<std::size_t>> adjacent(v);
  if (x.dim_bound() >= 1)
    for (std::size_t e = 0; e < x.count(1); ++e) {
      adjacent[x.face(1, 0, e)].push_back(x.face(1, 1, e));
      adjacent[x.face(1, 1, e)].push_back(x.face(1, 0, e));
    }
  const std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(v, unseen);
  std::size_t count = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (label[s] != unseen) continue;
    std::vector<std::size_t> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : adjacent[u])
        if (label[w] == unseen) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return {label, count};
}

inline std::size_t component_count(const SimpSet& x) { return component_labels(x).second; }

}  // namespace germcat::oracle
