#pragma once

// Semistandard tableaux on (skew) multipartition diagrams.
//
// An entry is a pair (letter, comp): a letter of the comp-th alphabet. The
// entries are totally ordered by component first, then letter. A filling is
// semistandard when every entry's component is at least its cell's
// component, rows weakly increase and columns strictly increase.

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "weylchar/integer.hpp"
#include "weylchar/shapes.hpp"

namespace weylchar {

struct Entry {
  int letter = 0;  // 0-based index into the comp-th alphabet
  int comp = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) noexcept {
    if (a.comp != b.comp) return a.comp <=> b.comp;
    return a.letter <=> b.letter;
  }
};

inline bool entry_le(const Entry& a, const Entry& b) noexcept { return a <= b; }

struct CrystalWord;

// A filling of a skew shape. Entries are stored in the cell order of
// skew_cells(shape), largest cell first; the cell list is shared between
// all tableaux enumerated on the same shape.
class Tableau {
 public:
  Tableau(SkewShape shape, std::vector<Entry> entries);
  Tableau(std::shared_ptr<const std::vector<Cell>> cells, std::shared_ptr<const SkewShape> shape,
          std::vector<Entry> entries);

  const SkewShape& shape() const noexcept { return *shape_; }
  const std::vector<Cell>& cells() const noexcept { return *cells_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Position of the cell in cells(), or nullopt when outside the shape.
  std::optional<std::size_t> index_of(const Cell& c) const noexcept;
  const Entry& at(const Cell& c) const;

  friend bool operator==(const Tableau& a, const Tableau& b) noexcept {
    return *a.shape_ == *b.shape_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const SkewShape> shape_;
  std::shared_ptr<const std::vector<Cell>> cells_;
  std::vector<Entry> entries_;
};

bool is_semistandard(const Tableau& t);

// Entry counts: slot (i, k) counts the cells holding (i, k). Throws
// InputError when a letter does not fit the bound.
MultiComposition weight_of(const Tableau& t, const ShapeBound& bound);

// Calls visit(entries) for every semistandard filling of the shape with
// letters limited by bound, and, when weight is given, with exactly that
// weight. Entries are in skew_cells order. Fillings are produced in
// lexicographic order of that entry sequence. Returning false from visit
// stops the enumeration.
void for_each_tableau(const SkewShape& shape, const ShapeBound& bound, const MultiComposition* weight,
                      const std::function<bool(std::span<const Entry>)>& visit);

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const MultiComposition& weight);
std::vector<Tableau> enumerate_all_tableaux(const SkewShape& shape, const ShapeBound& bound);
Count count_tableaux(const SkewShape& shape, const MultiComposition& weight);

// The cells holding entries of each component; two tableaux are equivalent
// when their keys agree.
struct EquivClassKey {
  std::vector<std::vector<Cell>> cells_by_comp;
  friend bool operator==(const EquivClassKey&, const EquivClassKey&) = default;
};

EquivClassKey equiv_key(const Tableau& t);

// Groups indices of ts by class, classes in order of first appearance.
// Throws InputError when the tableaux do not share one shape.
std::vector<std::vector<std::size_t>> partition_classes(std::span<const Tableau> ts);

// For each alphabet c, the letters of the cells holding entries (., c),
// read in decreasing cell order. Throws InputError when t is not
// semistandard.
CrystalWord reading(const Tableau& t);

}  // namespace weylchar
