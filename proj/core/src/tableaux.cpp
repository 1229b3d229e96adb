#include "weylchar/tableaux.hpp"

#include <algorithm>
#include <map>

#include "weylchar/crystal.hpp"
#include "weylchar/errors.hpp"

namespace weylchar {

Tableau::Tableau(SkewShape shape, std::vector<Entry> entries)
    : shape_(std::make_shared<const SkewShape>(std::move(shape))),
      cells_(std::make_shared<const std::vector<Cell>>(skew_cells(*shape_))),
      entries_(std::move(entries)) {
  if (entries_.size() != cells_->size())
    throw InputError("tableau has " + std::to_string(entries_.size()) + " entries for " +
                     std::to_string(cells_->size()) + " cells");
  for (const auto& e : entries_)
    if (e.letter < 0 || e.comp < 0 || e.comp >= shape_->r()) throw InputError("tableau entry out of range");
}

Tableau::Tableau(std::shared_ptr<const std::vector<Cell>> cells, std::shared_ptr<const SkewShape> shape,
                 std::vector<Entry> entries)
    : shape_(std::move(shape)), cells_(std::move(cells)), entries_(std::move(entries)) {}

std::optional<std::size_t> Tableau::index_of(const Cell& c) const noexcept {
  auto it = std::lower_bound(cells_->begin(), cells_->end(), c, CellGreater{});
  if (it == cells_->end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_->begin());
}

const Entry& Tableau::at(const Cell& c) const {
  auto idx = index_of(c);
  if (!idx) throw InputError("cell outside tableau shape");
  return entries_[*idx];
}

bool is_semistandard(const Tableau& t) {
  const auto& cells = t.cells();
  const auto& entries = t.entries();
  for (std::size_t p = 0; p < cells.size(); ++p) {
    const Cell& x = cells[p];
    const Entry& e = entries[p];
    if (e.comp < x.comp) return false;
    if (auto right = t.index_of(Cell{x.row, x.col + 1, x.comp}); right && !(e <= entries[*right])) return false;
    if (auto below = t.index_of(Cell{x.row + 1, x.col, x.comp}); below && !(e < entries[*below])) return false;
  }
  return true;
}

MultiComposition weight_of(const Tableau& t, const ShapeBound& bound) {
  if (bound.r() != t.shape().r()) throw InputError("weight_of: bound has wrong component count");
  std::vector<std::vector<int>> rows;
  for (int m : bound.values()) rows.emplace_back(static_cast<std::size_t>(m), 0);
  for (const auto& e : t.entries()) {
    if (e.letter >= bound[static_cast<std::size_t>(e.comp)])
      throw InputError("tableau letter exceeds the row bound of its alphabet");
    ++rows[static_cast<std::size_t>(e.comp)][static_cast<std::size_t>(e.letter)];
  }
  return MultiComposition(std::move(rows));
}

namespace {

struct FillPlan {
  std::vector<Cell> cells;
  std::vector<int> right;  // earlier position of the right neighbour, or -1
  std::vector<int> above;  // earlier position of the upper neighbour, or -1
};

FillPlan make_plan(const SkewShape& shape) {
  FillPlan plan;
  plan.cells = skew_cells(shape);
  auto pos = [&](const Cell& c) -> int {
    if (!shape.contains(c)) return -1;
    auto it = std::lower_bound(plan.cells.begin(), plan.cells.end(), c, CellGreater{});
    return static_cast<int>(it - plan.cells.begin());
  };
  for (const auto& c : plan.cells) {
    plan.right.push_back(pos(Cell{c.row, c.col + 1, c.comp}));
    plan.above.push_back(c.row > 0 ? pos(Cell{c.row - 1, c.col, c.comp}) : -1);
  }
  return plan;
}

class Filler {
 public:
  Filler(const FillPlan& plan, const ShapeBound& bound, const MultiComposition* weight,
         const std::function<bool(std::span<const Entry>)>& visit)
      : plan_(plan), bound_(bound), visit_(visit), entries_(plan.cells.size()) {
    if (weight) {
      remaining_ = weight->rows();
      use_weight_ = true;
    }
  }

  void run() { fill(0); }

 private:
  bool fill(std::size_t p) {
    if (p == plan_.cells.size()) return visit_(std::span<const Entry>(entries_));
    const Cell& cell = plan_.cells[p];
    Entry lo{0, cell.comp};
    if (int a = plan_.above[p]; a >= 0) {
      Entry up = entries_[static_cast<std::size_t>(a)];
      Entry next{up.letter + 1, up.comp};
      if (next > lo) lo = next;
    }
    const int r = bound_.r();
    int max_comp = r - 1;
    std::optional<Entry> hi;
    if (int rt = plan_.right[p]; rt >= 0) {
      hi = entries_[static_cast<std::size_t>(rt)];
      max_comp = hi->comp;
    }
    for (int c = lo.comp; c <= max_comp; ++c) {
      int first = c == lo.comp ? lo.letter : 0;
      int last = bound_[static_cast<std::size_t>(c)] - 1;
      if (hi && c == hi->comp) last = std::min(last, hi->letter);
      for (int a = first; a <= last; ++a) {
        if (use_weight_) {
          int& left = remaining_[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
          if (left == 0) continue;
          --left;
          entries_[p] = Entry{a, c};
          bool go_on = fill(p + 1);
          ++left;
          if (!go_on) return false;
        } else {
          entries_[p] = Entry{a, c};
          if (!fill(p + 1)) return false;
        }
      }
    }
    return true;
  }

  const FillPlan& plan_;
  const ShapeBound& bound_;
  const std::function<bool(std::span<const Entry>)>& visit_;
  std::vector<Entry> entries_;
  std::vector<std::vector<int>> remaining_;
  bool use_weight_ = false;
};

}  // namespace

void for_each_tableau(const SkewShape& shape, const ShapeBound& bound, const MultiComposition* weight,
                      const std::function<bool(std::span<const Entry>)>& visit) {
  if (bound.r() != shape.r()) throw InputError("tableau bound has wrong component count");
  if (weight) {
    if (weight->size() != shape.size())
      throw InputError("weight size " + std::to_string(weight->size()) + " differs from shape size " +
                       std::to_string(shape.size()));
    if (!(weight->bound() == bound)) throw InputError("weight row lengths differ from the bound");
  }
  FillPlan plan = make_plan(shape);
  Filler(plan, bound, weight, visit).run();
}

namespace {
std::vector<Tableau> collect(const SkewShape& shape, const ShapeBound& bound, const MultiComposition* weight) {
  auto shared_shape = std::make_shared<const SkewShape>(shape);
  auto cells = std::make_shared<const std::vector<Cell>>(skew_cells(shape));
  std::vector<Tableau> out;
  for_each_tableau(shape, bound, weight, [&](std::span<const Entry> es) {
    out.emplace_back(cells, shared_shape, std::vector<Entry>(es.begin(), es.end()));
    return true;
  });
  return out;
}
}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const MultiComposition& weight) {
  return collect(shape, weight.bound(), &weight);
}

std::vector<Tableau> enumerate_all_tableaux(const SkewShape& shape, const ShapeBound& bound) {
  return collect(shape, bound, nullptr);
}

Count count_tableaux(const SkewShape& shape, const MultiComposition& weight) {
  Count n = 0;
  for_each_tableau(shape, weight.bound(), &weight, [&](std::span<const Entry>) {
    n = checked_add(n, 1);
    return true;
  });
  return n;
}

EquivClassKey equiv_key(const Tableau& t) {
  EquivClassKey key;
  key.cells_by_comp.resize(static_cast<std::size_t>(t.shape().r()));
  for (std::size_t p = 0; p < t.size(); ++p)
    key.cells_by_comp[static_cast<std::size_t>(t.entries()[p].comp)].push_back(t.cells()[p]);
  return key;
}

std::vector<std::vector<std::size_t>> partition_classes(std::span<const Tableau> ts) {
  // On a fixed shape the class key is determined by the component of the
  // entry in every cell position.
  std::vector<std::vector<std::size_t>> classes;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i].shape() == ts.front().shape())) throw InputError("partition_classes: tableaux of different shapes");
    std::vector<int> comps;
    comps.reserve(ts[i].size());
    for (const auto& e : ts[i].entries()) comps.push_back(e.comp);
    auto [it, fresh] = index.try_emplace(std::move(comps), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

CrystalWord reading(const Tableau& t) {
  if (!is_semistandard(t)) throw InputError("reading: tableau is not semistandard");
  CrystalWord w;
  w.letters.resize(static_cast<std::size_t>(t.shape().r()));
  for (const auto& e : t.entries()) w.letters[static_cast<std::size_t>(e.comp)].push_back(e.letter);
  return w;
}

}  // namespace weylchar
