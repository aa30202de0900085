#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "germcat/fincat/finset.hpp"
#include "germcat/fincat/nno.hpp"

// Sequences of finite sets and the symbolic natural numbers, given by finitely
// many patched indices and a tail that holds everywhere else.
namespace germcat {

struct NatObj {
  friend bool operator==(NatObj, NatObj) { return true; }
};

using Component = std::variant<FinObj, NatObj>;

/// A finite set -> N, by values.
struct ToNat {
  FinObj source;
  std::vector<std::uint64_t> values;
  friend bool operator==(const ToNat&, const ToNat&) = default;
};

/// N -> a finite set, an eventually periodic sequence of element indices.
struct FromNat {
  FinObj target;
  EventuallyPeriodic sequence;
  friend bool operator==(const FromNat& a, const FromNat& b) {
    return a.target == b.target && a.sequence.canonical() == b.sequence.canonical();
  }
};

/// N -> N, n -> n + shift. Shift 0 is the identity, 1 the successor.
struct NatShift {
  std::uint64_t shift = 0;
  friend bool operator==(const NatShift&, const NatShift&) = default;
};

using ComponentMap = std::variant<FinMap, ToNat, FromNat, NatShift>;

Component source_of(const ComponentMap& f);
Component target_of(const ComponentMap& f);
bool is_invertible(const ComponentMap& f);
/// g o f. Throws NotComposable on mismatched endpoints.
ComponentMap compose(const ComponentMap& g, const ComponentMap& f);
ComponentMap identity_component(const Component& x);
std::string describe(const Component& x);

/// The one-element set {*}.
FinObj one();

struct SeqObj {
  std::map<std::uint64_t, Component> patches;
  Component tail;

  const Component& at(std::uint64_t n) const;
  /// Drops patches equal to the tail.
  SeqObj canonical() const;
  std::uint64_t horizon() const;  // one past the last patch

  static SeqObj constant(Component c) { return {{}, std::move(c)}; }
  friend bool operator==(const SeqObj& a, const SeqObj& b);
};

namespace tail {
struct Constant {
  ComponentMap map;
  friend bool operator==(const Constant&, const Constant&) = default;
};
/// 1 -> N, constant m.
struct Numeral {
  std::uint64_t m = 0;
  friend bool operator==(const Numeral&, const Numeral&) = default;
};
/// 1 -> N, n -> n at index n.
struct Diagonal {
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};
/// N -> N, the successor.
struct Successor {
  friend bool operator==(const Successor&, const Successor&) = default;
};
/// 1 -> N, the zero point.
struct ZeroPoint {
  friend bool operator==(const ZeroPoint&, const ZeroPoint&) = default;
};
/// Component cycle[n % p] at index n. Can describe sets outside the
/// finite-or-cofinite algebra; checks then fail with AgreementNotDefinable.
struct Cyclic {
  std::vector<ComponentMap> cycle;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
}  // namespace tail

using TailRule = std::variant<tail::Constant, tail::Numeral, tail::Diagonal, tail::Successor, tail::ZeroPoint, tail::Cyclic>;

/// The component a tail rule produces at index n.
ComponentMap rule_at(const TailRule& rule, std::uint64_t n);
std::uint64_t period(const TailRule& rule);

class SeqMap {
 public:
  SeqMap() = default;
  /// Throws InvalidArgument unless every component, patched or produced by the
  /// rule, runs between the matching components of source and target.
  SeqMap(SeqObj source, SeqObj target, std::map<std::uint64_t, ComponentMap> patches, TailRule rule);

  const SeqObj& source() const noexcept { return source_; }
  const SeqObj& target() const noexcept { return target_; }
  const std::map<std::uint64_t, ComponentMap>& patches() const noexcept { return patches_; }
  const TailRule& rule() const noexcept { return rule_; }

  ComponentMap at(std::uint64_t n) const;
  /// Past this index components depend only on the rule.
  std::uint64_t horizon() const;
  /// Naturals mentioned by the rule or by patches; past all of them a
  /// diagonal component differs from every constant one.
  std::uint64_t numeral_bound() const;

  friend bool operator==(const SeqMap&, const SeqMap&) = default;

 private:
  SeqObj source_;
  SeqObj target_;
  std::map<std::uint64_t, ComponentMap> patches_;
  TailRule rule_;
};

/// Index-wise composite g o f.
SeqMap compose(const SeqMap& g, const SeqMap& f);
SeqMap identity_seq(const SeqObj& x);

}  // namespace germcat
