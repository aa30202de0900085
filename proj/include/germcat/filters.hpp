#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace germcat {

/// Sorted, duplicate-free list of poset element indices.
using Subset = std::vector<std::size_t>;

/// A finite partially ordered set with opaque labels. The order axioms are
/// checked exhaustively on construction; meets are derived from the order.
class Poset {
 public:
  Poset(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);

  /// `pairs` lists every (x, y) with x <= y, reflexive pairs included.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Subsets of `atoms` under inclusion. Element index == bitmask over atoms,
  /// labels look like "{}", "{a}", "{a,b}".
  static Poset powerset(std::vector<std::string> atoms);

  /// 0 < 1 < ... < n-1, labelled "0".."n-1".
  static Poset chain(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownElement.
  std::size_t index_of(std::string_view label) const;
  Subset indices_of(std::span<const std::string> labels) const;

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }
  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  bool has_all_meets() const noexcept;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> bottom() const;

  /// Atoms when built by powerset(), empty otherwise.
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  bool is_powerset() const noexcept { return is_powerset_; }

  /// Upward closure of a single element (principal filter).
  Subset up(std::size_t x) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::optional<std::size_t>> meet_;
  std::vector<std::string> atoms_;
  bool is_powerset_ = false;
};

/// A subset of the naturals that is either finite or cofinite.
class DefinableSubset {
 public:
  /// The empty set.
  DefinableSubset() = default;

  static DefinableSubset finite(std::vector<std::uint64_t> members);
  static DefinableSubset cofinite(std::vector<std::uint64_t> missing);
  static DefinableSubset all() { return cofinite({}); }
  static DefinableSubset none() { return {}; }

  /// When `is_cofinite()`, the exceptions are the missing naturals; otherwise the members.
  const std::vector<std::uint64_t>& exceptions() const noexcept { return exceptions_; }
  bool is_cofinite() const noexcept { return cofinite_; }
  bool is_finite() const noexcept { return !cofinite_; }

  bool contains(std::uint64_t n) const;
  bool subset_of(const DefinableSubset& other) const;

  DefinableSubset complement() const;
  friend DefinableSubset unite(const DefinableSubset& a, const DefinableSubset& b);
  friend DefinableSubset intersect(const DefinableSubset& a, const DefinableSubset& b);

  /// "{1,2}" for finite sets, "N\{1,2}" for cofinite ones.
  std::string to_string() const;

  friend bool operator==(const DefinableSubset&, const DefinableSubset&) = default;

 private:
  DefinableSubset(std::vector<std::uint64_t> exceptions, bool cofinite);

  std::vector<std::uint64_t> exceptions_;
  bool cofinite_ = false;
};

enum class SetOp { Union, Intersect, Complement };

/// The finite-or-cofinite Boolean algebra. `b` is required unless `op` is Complement.
DefinableSubset definable_algebra(SetOp op, const DefinableSubset& a,
                                  const std::optional<DefinableSubset>& b = std::nullopt);

/// Membership in the Frechet filter of cofinite sets.
bool frechet_contains(const DefinableSubset& s);

/// A filter, either an explicit subset of a finite poset, the Frechet filter on
/// P(N), or the principal filter of a definable subset of N.
class Filter {
 public:
  enum class Kind { Explicit, Frechet, PrincipalDefinable };

  /// Throws NotAFilter unless `members` is nonempty, upward closed and downward directed.
  static Filter make_explicit(std::shared_ptr<const Poset> poset, Subset members);
  static Filter principal(std::shared_ptr<const Poset> poset, std::size_t generator);
  /// The filter {top}. Throws InvalidPoset if the poset has no top.
  static Filter minimal(std::shared_ptr<const Poset> poset);
  /// The whole poset.
  static Filter improper(std::shared_ptr<const Poset> poset);
  static Filter frechet();
  static Filter principal_definable(DefinableSubset generator);

  Kind kind() const noexcept { return kind_; }
  bool is_explicit() const noexcept { return kind_ == Kind::Explicit; }

  const Poset& poset() const;
  const std::shared_ptr<const Poset>& poset_ptr() const;
  const Subset& members() const;
  /// The least member. Every finite filter has one.
  std::size_t minimum() const;
  const DefinableSubset& generator() const;

  bool contains(std::size_t element) const;
  bool contains(const DefinableSubset& s) const;
  bool is_proper() const;

 private:
  Filter() = default;

  Kind kind_ = Kind::Explicit;
  std::shared_ptr<const Poset> poset_;
  Subset members_;
  std::vector<std::uint8_t> member_mask_;
  std::size_t minimum_ = 0;
  DefinableSubset generator_;
};

/// Nonempty, upward closed and downward directed. Throws UnknownElement on a bad label.
bool is_filter(const Poset& p, std::span<const std::size_t> subset);
bool is_filter(const Poset& p, std::span<const std::string> labels);

/// Smallest filter containing `base`: closes under binary meets, then upward.
/// Throws EmptyBase, or MeetUnavailable when a needed meet does not exist.
Filter generate_filter(std::shared_ptr<const Poset> p, std::span<const std::size_t> base);

/// Every filter of a finite poset. Finite filters are principal, so these are
/// the distinct up-sets of single elements, in order of their generator.
std::vector<Subset> all_filters(const Poset& p);

/// Maximal among proper filters. Throws NotAFilter.
bool is_ultrafilter(const Poset& p, std::span<const std::size_t> subset);
bool is_ultrafilter(const Filter& f);

}  // namespace germcat
