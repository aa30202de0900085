#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "germcat/filterprod/sequence.hpp"
#include "germcat/filters.hpp"
#include "germcat/fincat/finset.hpp"
#include "germcat/simplicial/enriched.hpp"
#include "germcat/simplicial/nerve.hpp"
#include "germcat/simplicial/simpset.hpp"

// JSON literals for the values a request can mention. Every parser takes the
// JSON pointer of the value it reads and throws SchemaError at the offending
// field. Literals that have a short written form (named filters, simplicial
// builders) keep it, so that writing a parsed literal reproduces its input.
namespace germcat::io {

using Json = nlohmann::json;

/// Appends one RFC 6901 reference token.
std::string pointer_join(const std::string& base, const std::string& token);
std::string pointer_join(const std::string& base, std::size_t index);
[[noreturn]] void schema_fail(const std::string& pointer, const std::string& what);

/// Object with only the listed keys, all of `required` present.
void check_keys(const Json& j, const std::string& ptr, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {});
const Json& field(const Json& j, const std::string& ptr, const char* key);
std::uint64_t parse_natural(const Json& j, const std::string& ptr);
std::string parse_label(const Json& j, const std::string& ptr);
std::vector<std::string> parse_labels(const Json& j, const std::string& ptr);
std::vector<std::uint64_t> parse_naturals(const Json& j, const std::string& ptr);

// Posets and filters -------------------------------------------------------------

/// {"powerset": [atoms]} | {"chain": n} | {"elements": [..], "leq": [[x, y], ..]}.
/// Reflexive pairs may be left out of "leq" and are never written.
Poset parse_poset(const Json& j, const std::string& ptr);
Json to_json(const Poset& p);

struct FilterLit {
  enum class Form { Minimal, Improper, Frechet, Principal, Members, GeneratedBy, PrincipalDefinable };
  Form form = Form::Minimal;
  std::vector<std::string> elements;  // Principal (one), Members, GeneratedBy
  DefinableSubset definable;          // PrincipalDefinable
  std::string pointer;                // where it was read, for late label errors

  bool over_naturals() const { return form == Form::Frechet || form == Form::PrincipalDefinable; }
  friend bool operator==(const FilterLit& a, const FilterLit& b) {
    return a.form == b.form && a.elements == b.elements && a.definable == b.definable;
  }
};

/// "minimal" | "improper" | "frechet" | {"principal": x} | {"members": [..]}
/// | {"generated_by": [..]} | {"principal_definable": subset}.
FilterLit parse_filter(const Json& j, const std::string& ptr);
Json to_json(const FilterLit& f);
/// `poset` is null for filters on P(N).
Filter make_filter(const FilterLit& f, const std::shared_ptr<const Poset>& poset);

/// {"finite": [..]} | {"cofinite": [..]} (the missing naturals).
DefinableSubset parse_definable(const Json& j, const std::string& ptr);
Json to_json(const DefinableSubset& s);

// Finite sets and sequences ------------------------------------------------------

/// n (the set {0..n-1}) or a list of distinct labels.
FinObj parse_set(const Json& j, const std::string& ptr);
Json to_json(const FinObj& x);
/// {"source": set, "target": set, "map": [indices]}.
FinMap parse_finmap(const Json& j, const std::string& ptr);
Json to_json(const FinMap& f);

/// A set literal or "N".
Component parse_component(const Json& j, const std::string& ptr);
Json to_json(const Component& c);
/// A FinMap literal | {"to_nat": {"source", "values"}} |
/// {"from_nat": {"target", "preperiod", "cycle"}} | {"shift": k}.
ComponentMap parse_component_map(const Json& j, const std::string& ptr);
Json to_json(const ComponentMap& f);
/// {"patches": {"n": component}, "tail": component}; "patches" may be omitted.
SeqObj parse_seqobj(const Json& j, const std::string& ptr);
Json to_json(const SeqObj& x);
/// {"constant": map} | {"numeral": m} | "diagonal" | "successor" | "zero" | {"cyclic": [maps]}.
TailRule parse_tail_rule(const Json& j, const std::string& ptr);
Json to_json(const TailRule& r);
/// {"source", "target", "patches"?, "tail"}.
SeqMap parse_seqmap(const Json& j, const std::string& ptr);
Json to_json(const SeqMap& f);

// Simplicial data ----------------------------------------------------------------

struct CategoryLit {
  enum class Form { Cyclic, Chain, Codiscrete, Idempotent };
  Form form = Form::Cyclic;
  std::size_t n = 1;
  friend bool operator==(const CategoryLit&, const CategoryLit&) = default;
};

/// {"cyclic": n} | {"chain": n} | {"codiscrete": k} | "idempotent".
CategoryLit parse_category(const Json& j, const std::string& ptr);
Json to_json(const CategoryLit& c);
SmallCategory make_category(const CategoryLit& c);

struct SimpSetLit {
  enum class Form { Cells, Nerve, Simplex, Horn, Boundary };
  Form form = Form::Cells;
  std::size_t dim_bound = 0;
  NormalizedCells cells;  // Cells
  CategoryLit category;   // Nerve
  std::size_t n = 0;      // Simplex, Horn, Boundary
  std::size_t k = 0;      // Horn
  friend bool operator==(const SimpSetLit&, const SimpSetLit&) = default;
};

/// {"dim_bound": D} plus one of
///   "cells": {"0": [labels], "m": [[face, ..], ..]}  (faces are cell indices
///            one level down, or {"dim", "cell", "map"} for degenerate faces)
///   "nerve": category | "simplex": n | "horn": [n, k] | "boundary": n.
SimpSetLit parse_simpset(const Json& j, const std::string& ptr);
Json to_json(const SimpSetLit& s);
SimpSet make_simpset(const SimpSetLit& s, const std::string& ptr);

/// A cell reference: a cell index (a nondegenerate simplex of the stated
/// level) or {"dim", "cell", "map"}.
CellRef parse_cell_ref(const Json& j, const std::string& ptr, std::size_t level);
Json to_json(const CellRef& r, std::size_t level);

/// A map given on nondegenerate cells: images[m][c] is the image of the c-th
/// nondegenerate m-simplex of `source`, as a simplex of `target` at level m.
using CellImages = std::vector<std::vector<CellRef>>;

/// The simplicial map determined by its values on nondegenerate cells. Throws
/// SchemaError at `ptr` when the images do not fit or do not commute with faces.
SimpMap map_from_cells(const SimpSet& source, const SimpSet& target, const CellImages& images, const std::string& ptr);

struct DiagramLit {
  struct ArrowLit {
    std::size_t from = 0;
    std::size_t to = 0;
    CellImages images;
    friend bool operator==(const ArrowLit&, const ArrowLit&) = default;
  };
  std::vector<SimpSetLit> objects;
  std::vector<ArrowLit> arrows;
  friend bool operator==(const DiagramLit&, const DiagramLit&) = default;
};

/// {"objects": [simpset], "arrows": [{"from", "to", "map": {"m": [refs]}}]}.
DiagramLit parse_diagram(const Json& j, const std::string& ptr);
Json to_json(const DiagramLit& d);
SimpDiagram make_diagram(const DiagramLit& d, const std::string& ptr);

struct EnrichedLit {
  CategoryLit category;
  std::size_t group_order = 1;
  friend bool operator==(const EnrichedLit&, const EnrichedLit&) = default;
};

/// {"category": category, "group_order": n}: hom(x, y) = C(x, y) x N(Z/n).
EnrichedLit parse_enriched(const Json& j, const std::string& ptr);
Json to_json(const EnrichedLit& e);

}  // namespace germcat::io
