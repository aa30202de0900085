#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germcat/filterprod/sequence.hpp"
#include "germcat/filters.hpp"

namespace germcat {

/// A filter product: either a finite index set with an explicit filter on its
/// powerset, or N with the Frechet filter (or a principal definable one).
struct FilterProductSpec {
  std::optional<std::vector<std::string>> finite_index;  // empty optional means N
  Filter filter;

  /// Throws InvalidArgument unless the filter lives on Poset::powerset(index).
  static FilterProductSpec finite(std::vector<std::string> index, Filter filter);
  /// Throws InvalidArgument unless the filter is over N.
  static FilterProductSpec nat(Filter filter);
  bool is_nat() const noexcept { return !finite_index; }
};

/// A locus over a finite index is a bitmask (bit i is index i).
struct FiniteLocus {
  bool holds = false;
  std::size_t locus = 0;
};

struct NatLocus {
  bool holds = false;
  DefinableSubset locus;
};

/// {i : f_i = g_i} and whether it belongs to the filter.
FiniteLocus los_equiv_check(const FilterProductSpec& spec, const std::vector<FinMap>& f, const std::vector<FinMap>& g);
/// {i : f_i invertible} and whether it belongs to the filter.
FiniteLocus los_iso_check(const FilterProductSpec& spec, const std::vector<FinMap>& f);

/// Throws AgreementNotDefinable when the set is not finite or cofinite.
NatLocus los_equiv_check(const FilterProductSpec& spec, const SeqMap& f, const SeqMap& g);
NatLocus los_iso_check(const FilterProductSpec& spec, const SeqMap& f);

struct SeqCone {
  SeqObj apex;
  SeqMap left;   // to f's source
  SeqMap right;  // to g's source
};

/// Index-wise pullback of f and g (common target). Components out of N are
/// supported only when the other side is the identity. Throws
/// AgreementNotDefinable when the pullback does not settle into patch+tail
/// form.
SeqCone seq_pullback(const SeqMap& f, const SeqMap& g);

/// The constant maps 1 -> N and the successor N -> N.
SeqMap diagonal_map();
SeqMap numeral_map(std::uint64_t m);
SeqMap zero_map();
SeqMap successor_map();
/// The unique map out of the empty sequence.
SeqMap from_empty(const SeqObj& target);

struct NnoCertificate {
  std::uint64_t bound = 0;
  std::vector<DefinableSubset> separations;  // where the diagonal meets numeral m
  std::vector<bool> separated;               // separation not in the filter
  std::vector<SeqObj> pullbacks;             // P^m
  std::vector<bool> empty_beyond;            // P^m_n empty for all n > m
  std::vector<DefinableSubset> vanishing;    // iso locus of the empty sequence -> P^m
  std::vector<bool> germ_empty;
  std::string conclusion;

  bool passes() const;
};

/// Over N with the Frechet filter: the diagonal 1 -> N differs from each
/// numeral m <= M, and the pullback of the two is germ-empty.
NnoCertificate nno_witness(std::uint64_t bound);

/// The unique h : N -> target with h o zero = point and h o succ = step o h,
/// built index by index. target components must be finite sets.
SeqMap nat_recursion_germ(const SeqObj& target, const SeqMap& point, const SeqMap& step);

}  // namespace germcat
