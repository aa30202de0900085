#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace germcat {

/// A simplex written as a degeneracy of a nondegenerate cell: `map` is the
/// monotone surjection [n] -> [dim] (one entry per vertex of the n-simplex).
struct CellRef {
  std::size_t dim = 0;
  std::size_t cell = 0;
  std::vector<std::size_t> map;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// Nondegenerate cells only. cells[m] lists the m-cells for m >= 1, each as
/// its m + 1 faces d_0, ..., d_m; 0-cells are the vertex labels.
struct NormalizedCells {
  std::size_t dim_bound = 0;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::vector<CellRef>>> cells;
  friend bool operator==(const NormalizedCells&, const NormalizedCells&) = default;
};

/// A finite simplicial set truncated at `dim_bound`. Every level is stored in
/// full, degenerate simplices included, with explicit face and degeneracy
/// tables; the simplicial identities are audited on construction.
class SimpSet {
 public:
  using Table = std::vector<std::size_t>;

  SimpSet() = default;
  /// faces[n][i] maps level n to level n-1 (n >= 1, i <= n); degeneracies[n][i]
  /// maps level n to level n+1 (n < dim_bound, i <= n). Throws
  /// InvalidSimplicialSet when a table is out of range or an identity fails.
  SimpSet(std::size_t dim_bound, std::vector<std::string> vertices, std::vector<std::size_t> sizes,
          std::vector<std::vector<Table>> faces, std::vector<std::vector<Table>> degeneracies);

  /// Materializes every degenerate simplex from the nondegenerate cells.
  /// Nondegenerate simplices come first at each level, in input order.
  static SimpSet from_cells(const NormalizedCells& cells);

  std::size_t dim_bound() const noexcept { return dim_bound_; }
  std::size_t count(std::size_t n) const { return sizes_.at(n); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t face(std::size_t n, std::size_t i, std::size_t x) const { return faces_[n][i][x]; }
  std::size_t degeneracy(std::size_t n, std::size_t i, std::size_t x) const { return degeneracies_[n][i][x]; }
  const std::vector<std::vector<Table>>& face_tables() const noexcept { return faces_; }
  const std::vector<std::vector<Table>>& degeneracy_tables() const noexcept { return degeneracies_; }

  bool is_degenerate(std::size_t n, std::size_t x) const;
  std::vector<std::size_t> nondegenerate(std::size_t n) const;
  /// The unique (nondegenerate cell, surjection) presentation of a simplex.
  /// `cell` indexes nondegenerate(dim).
  CellRef decompose(std::size_t n, std::size_t x) const;
  NormalizedCells to_cells() const;
  /// Highest level holding a nondegenerate simplex; 0 for empty sets.
  std::size_t dimension() const;
  bool empty() const { return sizes_.empty() || sizes_[0] == 0; }

  friend bool operator==(const SimpSet&, const SimpSet&) = default;

 private:
  std::size_t dim_bound_ = 0;
  std::vector<std::string> vertices_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<Table>> faces_;
  std::vector<std::vector<Table>> degeneracies_;
};

/// A level-wise map; levels[n][x] is the image of the n-simplex x.
struct SimpMap {
  std::vector<std::vector<std::size_t>> levels;
  friend bool operator==(const SimpMap&, const SimpMap&) = default;
};

/// Commutes with every face and degeneracy, and every value is in range.
bool is_simplicial_map(const SimpSet& source, const SimpSet& target, const SimpMap& f);
SimpMap identity_map(const SimpSet& x);
SimpMap compose(const SimpMap& g, const SimpMap& f);

// Builders ---------------------------------------------------------------------

SimpSet empty_simpset(std::size_t dim_bound);
/// Delta^0.
SimpSet point(std::size_t dim_bound);
/// Only degenerate simplices above level 0.
SimpSet discrete_simpset(std::vector<std::string> vertices, std::size_t dim_bound);
/// Simplices of Delta^n as nondecreasing vertex sequences, keeping those that
/// satisfy `keep` (which must be closed under faces).
SimpSet simplex_subcomplex(std::size_t n, std::size_t dim_bound,
                           const std::function<bool(const std::vector<std::size_t>&)>& keep);
SimpSet standard_simplex(std::size_t n, std::size_t dim_bound);
/// The horn Lambda^n_k: every face of Delta^n except the k-th.
SimpSet horn(std::size_t n, std::size_t k, std::size_t dim_bound);
SimpSet boundary(std::size_t n, std::size_t dim_bound);
/// The inclusion of simplex_subcomplex(n, dim_bound, keep) into Delta^n.
SimpMap simplex_inclusion(std::size_t n, std::size_t dim_bound,
                          const std::function<bool(const std::vector<std::size_t>&)>& keep);

/// Level-wise product; the first factor varies slowest. The empty product is
/// the point.
SimpSet product(const std::vector<SimpSet>& factors, std::size_t dim_bound);
/// Projection of product(factors) onto the factors listed in `keep`, which is
/// itself a product in that order.
SimpMap product_projection(const std::vector<SimpSet>& factors, const std::vector<std::size_t>& keep);
SimpSet disjoint_union(const SimpSet& a, const SimpSet& b);

// Colimits and components --------------------------------------------------------

struct SimpArrow {
  std::size_t from;
  std::size_t to;
  SimpMap map;
};

struct SimpDiagram {
  std::vector<SimpSet> objects;
  std::vector<SimpArrow> arrows;
};

struct SimpCocone {
  SimpSet apex;
  std::vector<SimpMap> legs;
};

/// Throws IllFormedDiagram when an arrow is not a simplicial map between its
/// endpoints or the dimension bounds differ.
void validate(const SimpDiagram& d);
/// Level-wise colimit of finite sets.
SimpCocone colimit(const SimpDiagram& d);
/// Some object is reachable along arrows from every object: the diagram has a
/// cocone vertex, as every stage diagram of a finite filter does.
bool has_terminal_index(const SimpDiagram& d);

struct Components {
  std::vector<std::size_t> component_of;  // vertex -> component, numbered by least vertex
  std::size_t count = 0;
};

/// Connected components under the zigzag closure of 1-simplices.
Components pi0(const SimpSet& x);

struct Pi0Comparison {
  std::size_t of_colimit = 0;     // |pi0(colim X)|
  std::size_t colimit_of = 0;     // |colim pi0(X)|
  bool bijective = false;         // the canonical comparison map
};

/// Compares pi0 of the level-wise colimit with the colimit of the pi0 sets.
Pi0Comparison pi0_commutes_check(const SimpDiagram& d);

}  // namespace germcat
