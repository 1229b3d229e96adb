#pragma once

// Partitions, multipartitions, multicompositions and the orders on them.
//
// All indices are 0-based in this API: row i, column j, component k. The
// JSON layer (serialize.hpp) is the only place that converts to the 1-based
// convention used in files and on the command line.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace weylchar {

// A weakly decreasing sequence of positive integers. Trailing zeros passed
// to the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  // Part i, or 0 past the last stored part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  bool contains(const Partition& inner) const noexcept;
  Partition conjugate() const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n with at most max_length parts (no bound when
// max_length < 0), in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n, int max_length = -1);

// All partitions mu contained in p with |mu| = size, lexicographically
// decreasing.
std::vector<Partition> subpartitions(const Partition& p, int size);

// The row bounds m = (m_1, ..., m_r).
class ShapeBound {
 public:
  ShapeBound() = default;
  explicit ShapeBound(std::vector<int> m);

  // m_k = n for every component, the stable default.
  static ShapeBound uniform(int r, int n);

  int r() const noexcept { return static_cast<int>(m_.size()); }
  int operator[](std::size_t k) const { return m_[k]; }
  const std::vector<int>& values() const noexcept { return m_; }
  int total() const noexcept;

  // m_k >= n for every k; throws InputError otherwise. Multiplicities and
  // characters are only defined by this engine in that regime.
  void require_stable(int n) const;
  bool is_stable(int n) const noexcept;

  friend bool operator==(const ShapeBound&, const ShapeBound&) = default;
  friend auto operator<=>(const ShapeBound&, const ShapeBound&) = default;

 private:
  std::vector<int> m_;
};

class MultiPartition;

// r rows of nonnegative integers; row k has exactly m_k entries.
class MultiComposition {
 public:
  MultiComposition() = default;
  explicit MultiComposition(std::vector<std::vector<int>> rows);

  static MultiComposition zero(const ShapeBound& bound);
  // Pads each component of mp with zeros to length m_k; throws InputError
  // when a component has more than m_k parts.
  static MultiComposition from_partition(const MultiPartition& mp, const ShapeBound& bound);

  int r() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const std::vector<int>& row(std::size_t k) const { return rows_[k]; }
  int at(std::size_t i, std::size_t k) const { return rows_[k][i]; }
  ShapeBound bound() const;

  // Nonzero only for one component; returns that component or -1 when zero
  // everywhere, -2 when spread over several components.
  int concentrated_component() const noexcept;

  // Interprets each row as a partition; throws InputError when some row is
  // not weakly decreasing.
  MultiPartition to_partition() const;
  bool is_dominant() const noexcept;

  friend bool operator==(const MultiComposition& a, const MultiComposition& b) noexcept { return a.rows_ == b.rows_; }
  friend std::strong_ordering operator<=>(const MultiComposition& a, const MultiComposition& b) noexcept {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

// An r-tuple of partitions.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);

  static MultiPartition empty(int r);
  // (empty, ..., p, ..., empty) with p in component k.
  static MultiPartition concentrated(int r, int k, Partition p);

  int r() const noexcept { return static_cast<int>(components_.size()); }
  int size() const noexcept { return n_; }
  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& component(std::size_t k) const { return components_[k]; }

  std::vector<int> zeta() const;
  bool fits(const ShapeBound& bound) const noexcept;
  bool contains(const MultiPartition& inner) const noexcept;
  // Component k holding the whole diagram, -1 for the empty multipartition,
  // -2 when several components are nonempty.
  int concentrated_component() const noexcept;
  std::string str() const;

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) noexcept {
    return a.components_ == b.components_;
  }
  friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) noexcept {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  int n_ = 0;
};

// Component sizes (|mu^(1)|, ..., |mu^(r)|).
std::vector<int> zeta(const MultiComposition& mu);

// Prefix-sum dominance of equal-length integer sequences. Throws InputError
// on length mismatch.
bool zeta_succeq(std::span<const int> a, std::span<const int> b);

// Dominance order through the concatenated coordinate sequence
// (component 1 rows, then component 2 rows, ...). Both compositions must
// share the same row lengths and total size, else InputError.
bool dominance_ge(const MultiComposition& la, const MultiComposition& mu);
bool dominance_ge(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound);

// The canonical total order on multipartitions of equal size and r:
// descending in zeta (lexicographic), then descending lexicographic on the
// components. It is a linear extension of dominance (larger first).
bool canonical_before(const MultiPartition& a, const MultiPartition& b);

// Every r-partition of n whose k-th component has at most m_k parts, in the
// canonical order.
std::vector<MultiPartition> enumerate_multipartitions(int n, const ShapeBound& bound);

// A composition p = (r_1, ..., r_g) of r grouping consecutive components.
class Grouping {
 public:
  explicit Grouping(std::vector<int> sizes);
  int groups() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const noexcept;
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  // First component of group g (0-based offset p_g).
  int offset(int g) const;

 private:
  std::vector<int> sizes_;
};

std::vector<int> zeta_p(const MultiPartition& la, const Grouping& p);
std::vector<MultiPartition> split_p(const MultiPartition& la, const Grouping& p);
std::vector<MultiComposition> split_p(const MultiComposition& mu, const Grouping& p);
std::vector<ShapeBound> split_p(const ShapeBound& bound, const Grouping& p);

// A box (row, col, comp) of a diagram, 0-based.
struct Cell {
  int row = 0;
  int col = 0;
  int comp = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// The total order on cells: x is greater than y when x lies in a later
// component, or the same component and a later column, or the same column
// and an earlier row.
std::strong_ordering cell_order_cmp(const Cell& x, const Cell& y) noexcept;

struct CellGreater {
  bool operator()(const Cell& x, const Cell& y) const noexcept { return cell_order_cmp(x, y) > 0; }
};

// outer minus inner, componentwise. inner may be empty.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(MultiPartition outer);
  SkewShape(MultiPartition outer, MultiPartition inner);

  const MultiPartition& outer() const noexcept { return outer_; }
  const MultiPartition& inner() const noexcept { return inner_; }
  int r() const noexcept { return outer_.r(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool straight() const noexcept { return inner_.size() == 0; }
  bool contains(const Cell& c) const noexcept;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  MultiPartition outer_;
  MultiPartition inner_;
};

// The cells of the skew shape, largest first under cell_order_cmp.
std::vector<Cell> skew_cells(const SkewShape& s);

// Integer compositions of total into exactly length nonnegative parts, in
// lexicographically decreasing order.
std::vector<std::vector<int>> compositions(int total, int length);

// All multicompositions of size n with row lengths taken from bound.
std::vector<MultiComposition> enumerate_multicompositions(int n, const ShapeBound& bound);

}  // namespace weylchar

template <>
struct std::hash<weylchar::Partition> {
  std::size_t operator()(const weylchar::Partition& p) const noexcept;
};

template <>
struct std::hash<weylchar::MultiPartition> {
  std::size_t operator()(const weylchar::MultiPartition& p) const noexcept;
};
