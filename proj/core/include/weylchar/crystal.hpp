#pragma once

// Tensor products of vector-representation crystals, one tensor power per
// component, with Kashiwara operators computed by the bracketing rule.
//
// Bracketing convention for operator (i, k) on word k: letter i opens a
// bracket, letter i+1 closes one, and an opener matches the nearest
// unmatched closer to its right. What survives reads ")))(((" from left to
// right. Raising turns the rightmost unmatched i+1 into i; lowering turns the
// leftmost unmatched i into i+1. A word is annihilated by every raising
// operator exactly when each prefix of each component word has partition
// content, which is the form the singularity test uses.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "weylchar/shapes.hpp"
#include "weylchar/tableaux.hpp"

namespace weylchar {

// r letter sequences; letters are 0-based.
struct CrystalWord {
  std::vector<std::vector<int>> letters;

  int r() const noexcept { return static_cast<int>(letters.size()); }
  friend bool operator==(const CrystalWord&, const CrystalWord&) = default;
  friend auto operator<=>(const CrystalWord&, const CrystalWord&) = default;
};

// The operator acting on letters i and i+1 of component k. Valid when
// 0 <= i < m_k - 1.
struct OperatorIndex {
  int i = 0;
  int comp = 0;
  friend bool operator==(const OperatorIndex&, const OperatorIndex&) = default;
};

// Every valid operator for the bound, component-major.
std::vector<OperatorIndex> operator_indices(const ShapeBound& bound);

MultiComposition word_weight(const CrystalWord& w, const ShapeBound& bound);

// Return nullopt when the operator annihilates the word. Throw InputError
// for an operator index outside the bound or a word with the wrong number
// of components.
std::optional<CrystalWord> raise(const CrystalWord& w, const OperatorIndex& op, const ShapeBound& bound);
std::optional<CrystalWord> lower(const CrystalWord& w, const OperatorIndex& op, const ShapeBound& bound);

// Every prefix of every component word has weakly decreasing letter counts.
bool is_singular_word(const CrystalWord& w);

// is_singular_word(reading(t)).
bool is_singular(const Tableau& t);

struct CrystalComponent {
  MultiPartition highest_weight;
  std::vector<std::size_t> members;  // vertex indices, ascending
  std::size_t size() const noexcept { return members.size(); }
};

struct CrystalEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  OperatorIndex op;  // to = lower(from, op)
};

// The crystal graph on all semistandard tableaux of a shape. Edges come
// only from operators applied within an equivalence class.
struct CrystalGraph {
  ShapeBound bound;
  std::vector<Tableau> vertices;
  std::vector<CrystalEdge> edges;
  std::vector<CrystalComponent> components;
};

// Components are sorted by highest weight in canonical order, ties broken by
// the smallest reading word they contain. Throws ConsistencyError when a
// component does not hold exactly one singular vertex or an operator leaves
// the set of readings of its class.
CrystalGraph crystal_graph(const SkewShape& shape, const ShapeBound& bound);

struct ComponentSummary {
  MultiPartition highest_weight;
  std::size_t size = 0;
};

std::vector<ComponentSummary> crystal_components(const SkewShape& shape, const ShapeBound& bound);

}  // namespace weylchar
