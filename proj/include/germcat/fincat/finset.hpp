#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germcat/fincat/category.hpp"

namespace germcat {

/// A finite set of distinct opaque element labels. `label` is a display name
/// only: two objects are equal when their element lists are.
struct FinObj {
  std::string label;
  std::vector<std::string> elements;

  FinObj() = default;
  /// Throws InvalidArgument on duplicate elements.
  FinObj(std::string label, std::vector<std::string> elements);

  /// {"0", ..., "n-1"}.
  static FinObj standard(std::size_t n);
  static FinObj standard(std::size_t n, std::string label);

  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }
  std::optional<std::size_t> find(std::string_view element) const;
  /// Throws UnknownElement.
  std::size_t index_of(std::string_view element) const;

  friend bool operator==(const FinObj& a, const FinObj& b) { return a.elements == b.elements; }
};

/// A total function between finite sets, stored as element indices.
class FinMap {
 public:
  /// The empty map between empty sets.
  FinMap() = default;
  /// Throws InvalidArgument unless every value indexes the target.
  FinMap(FinObj source, FinObj target, std::vector<std::size_t> assignment);
  static FinMap from_labels(FinObj source, FinObj target,
                            const std::map<std::string, std::string>& assignment);

  const FinObj& source() const noexcept { return source_; }
  const FinObj& target() const noexcept { return target_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.assignment_ == b.assignment_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  FinObj source_;
  FinObj target_;
  std::vector<std::size_t> assignment_;
};

/// The category of finite sets: finitely complete and cocomplete, with
/// subobject classifier {0,1} and dependent products.
class FinSetCat {
 public:
  using Object = FinObj;
  using Morphism = FinMap;

  std::vector<FinMap> hom(const FinObj& x, const FinObj& y) const;
  FinMap identity(const FinObj& x) const;
  /// g after f. Throws NotComposable.
  FinMap compose(const FinMap& g, const FinMap& f) const;
  const FinObj& source(const FinMap& f) const { return f.source(); }
  const FinObj& target(const FinMap& f) const { return f.target(); }
  bool equal(const FinMap& a, const FinMap& b) const { return a == b; }

  /// Tuples in lexicographic order (first object most significant) that are
  /// compatible with every arrow. Throws IllFormedDiagram.
  Cone<FinSetCat> limit(const Diagram<FinSetCat>& d) const;
  /// The unique map into `lim.apex` through which `competitor` factors.
  FinMap factor(const Cone<FinSetCat>& lim, const Diagram<FinSetCat>& d,
                const Cone<FinSetCat>& competitor) const;
  /// Disjoint union modulo the equivalence generated by the arrows.
  Cocone<FinSetCat> colimit(const Diagram<FinSetCat>& d) const;
  FinMap cofactor(const Cocone<FinSetCat>& colim, const Diagram<FinSetCat>& d,
                  const Cocone<FinSetCat>& competitor) const;

  FinObj terminal() const;
  FinObj initial() const;
  FinMap to_terminal(const FinObj& x) const;
  FinObj omega() const;
  /// 1 -> Omega picking "1".
  FinMap truth() const;

  bool is_mono(const FinMap& f) const { return f.is_injective(); }
  bool is_iso(const FinMap& f) const { return f.is_bijective(); }
  std::optional<FinMap> inverse(const FinMap& f) const;
  bool isomorphic(const FinObj& x, const FinObj& y) const { return x.size() == y.size(); }

  /// One inclusion per subset, subsets ordered by bitmask.
  std::vector<FinMap> subobjects(const FinObj& x) const;
  /// Characteristic map of a mono. Throws NotMono.
  FinMap classify(const FinMap& mono) const;
  /// f_*(p) for f : X -> Y, p : Z -> X. The fiber over w is the set of sections
  /// of p over f^{-1}(w).
  FinMap dependent_product(const FinMap& f, const FinMap& p) const;
  /// Sub(1) = {0, 1}, initial first.
  std::vector<FinObj> subterminal_objects() const { return {initial(), terminal()}; }
};

/// Makes labels pairwise distinct by suffixing "#k" on collisions.
std::vector<std::string> make_unique_labels(std::vector<std::string> labels);

}  // namespace germcat
