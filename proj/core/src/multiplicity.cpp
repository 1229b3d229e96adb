#include "weylchar/multiplicity.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "weylchar/crystal.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/memo.hpp"
#include "weylchar/parallel.hpp"
#include "weylchar/tableaux.hpp"

namespace weylchar {

// --------------------------------------------------------- skew singular

namespace {

MemoCache<std::string, Count>& skew_cache() {
  static MemoCache<std::string, Count> cache;
  return cache;
}

std::string skew_key(const SkewShape& shape, int comp, const Partition& weight) {
  return shape.outer().str() + "/" + shape.inner().str() + "#" + std::to_string(comp) + ":" + weight.str();
}

// Fills the cells in decreasing cell order; that order is also the reading
// order, so the lattice condition is checked on every prefix as it grows.
class LatticeFiller {
 public:
  LatticeFiller(const SkewShape& shape, const Partition& weight) : content_(weight.parts()) {
    cells_ = skew_cells(shape);
    auto pos = [&](const Cell& c) -> int {
      if (!shape.contains(c)) return -1;
      auto it = std::lower_bound(cells_.begin(), cells_.end(), c, CellGreater{});
      return static_cast<int>(it - cells_.begin());
    };
    for (const auto& c : cells_) {
      right_.push_back(pos(Cell{c.row, c.col + 1, c.comp}));
      above_.push_back(c.row > 0 ? pos(Cell{c.row - 1, c.col, c.comp}) : -1);
    }
    letters_.assign(cells_.size(), 0);
    used_.assign(content_.size(), 0);
  }

  Count count() { return fill(0); }

 private:
  Count fill(std::size_t p) {
    if (p == cells_.size()) return 1;
    int lo = above_[p] >= 0 ? letters_[static_cast<std::size_t>(above_[p])] + 1 : 0;
    int hi = right_[p] >= 0 ? letters_[static_cast<std::size_t>(right_[p])] : static_cast<int>(content_.size()) - 1;
    Count total = 0;
    for (int x = lo; x <= hi; ++x) {
      auto xs = static_cast<std::size_t>(x);
      if (used_[xs] == content_[xs]) continue;
      if (x > 0 && used_[xs] + 1 > used_[xs - 1]) continue;
      ++used_[xs];
      letters_[p] = x;
      total = checked_add(total, fill(p + 1));
      --used_[xs];
    }
    return total;
  }

  std::vector<int> content_;
  std::vector<Cell> cells_;
  std::vector<int> right_, above_;
  std::vector<int> letters_;
  std::vector<int> used_;
};

}  // namespace

Count skew_singular_count(const SkewShape& shape, int comp, const Partition& weight) {
  if (comp < 0 || comp >= shape.r()) throw InputError("skew_singular_count: component out of range");
  if (shape.size() != weight.size()) return 0;
  for (int k = comp + 1; k < shape.r(); ++k)
    if (shape.outer().component(static_cast<std::size_t>(k)).size() !=
        shape.inner().component(static_cast<std::size_t>(k)).size())
      return 0;
  return skew_cache().get_or_compute(skew_key(shape, comp, weight),
                                     [&] { return LatticeFiller(shape, weight).count(); });
}

Count skew_singular_count(const SkewShape& shape, const MultiComposition& weight) {
  if (weight.r() != shape.r()) throw InputError("skew_singular_count: component count mismatch");
  int comp = weight.concentrated_component();
  if (comp == -2) throw InputError("skew_singular_count: weight is not concentrated in one component");
  if (comp == -1) return shape.size() == 0 ? 1 : 0;
  const auto& row = weight.row(static_cast<std::size_t>(comp));
  if (!std::is_sorted(row.begin(), row.end(), std::greater<>()))
    throw InputError("skew_singular_count: weight is not a partition");
  return skew_singular_count(shape, comp, Partition(row));
}

// ------------------------------------------------------------------ chains

std::vector<Chain> enumerate_chains(const MultiPartition& la, const MultiPartition& mu) {
  std::vector<Chain> out;
  const int r = la.r();
  if (mu.r() != r || la.size() != mu.size()) return out;
  const auto layer = mu.zeta();

  std::vector<MultiPartition> steps(static_cast<std::size_t>(r) + 1);
  steps[static_cast<std::size_t>(r)] = la;

  std::function<void(int)> descend = [&](int k) {
    const MultiPartition& cur = steps[static_cast<std::size_t>(k)];
    if (k == 0) {
      if (cur.size() == 0) out.push_back(Chain{steps});
      return;
    }
    const int target = cur.size() - layer[static_cast<std::size_t>(k - 1)];
    if (target < 0) return;
    // steps[k-1] keeps components 0..k-2 (as subpartitions) and empties the rest.
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    std::function<void(int, int)> pick = [&](int j, int left) {
      if (j == k - 1) {
        if (left == 0) {
          steps[static_cast<std::size_t>(k - 1)] = MultiPartition(comps);
          descend(k - 1);
        }
        return;
      }
      const Partition& outer = cur.component(static_cast<std::size_t>(j));
      int room = 0;
      for (int l = j + 1; l < k - 1; ++l) room += cur.component(static_cast<std::size_t>(l)).size();
      for (int s = std::min(left, outer.size()); s >= 0; --s) {
        if (s + room < left) break;
        for (auto& sub : subpartitions(outer, s)) {
          comps[static_cast<std::size_t>(j)] = std::move(sub);
          pick(j + 1, left - s);
        }
      }
      comps[static_cast<std::size_t>(j)] = Partition();
    };
    pick(0, target);
  };
  descend(r);
  return out;
}

// -------------------------------------------------------------------- beta

BetaMethod parse_beta_method(const std::string& name) {
  if (name == "singular") return BetaMethod::singular;
  if (name == "chain") return BetaMethod::chain;
  if (name == "solve") return BetaMethod::solve;
  throw InputError("unknown beta method: " + name);
}

std::string to_string(BetaMethod m) {
  switch (m) {
    case BetaMethod::singular: return "singular";
    case BetaMethod::chain: return "chain";
    case BetaMethod::solve: return "solve";
  }
  return "?";
}

namespace {
void check_pair(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  if (la.r() != bound.r() || mu.r() != bound.r()) throw InputError("shapes and bound have different component counts");
  if (la.size() != mu.size())
    throw InputError("beta: |la| = " + std::to_string(la.size()) + " differs from |mu| = " + std::to_string(mu.size()));
  bound.require_stable(la.size());
  if (!la.fits(bound) || !mu.fits(bound)) throw InputError("shape does not fit the row bounds");
}
}  // namespace

Count beta_singular(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  check_pair(la, mu, bound);
  Count n = 0;
  for (const auto& t : enumerate_tableaux(SkewShape(la), MultiComposition::from_partition(mu, bound)))
    if (is_singular(t)) n = checked_add(n, 1);
  return n;
}

Count beta_chain(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  check_pair(la, mu, bound);
  Count total = 0;
  for (const auto& chain : enumerate_chains(la, mu)) {
    Count term = 1;
    for (int k = 1; k <= la.r() && term != 0; ++k) {
      SkewShape layer(chain.steps[static_cast<std::size_t>(k)], chain.steps[static_cast<std::size_t>(k - 1)]);
      term = checked_mul(term, skew_singular_count(layer, k - 1, mu.component(static_cast<std::size_t>(k - 1))));
    }
    total = checked_add(total, term);
  }
  return total;
}

Count kostka_product(const MultiPartition& nu, const MultiComposition& mu) {
  if (nu.r() != mu.r()) throw InputError("kostka_product: component count mismatch");
  if (nu.zeta() != zeta(mu)) return 0;
  Count p = 1;
  for (int k = 0; k < nu.r() && p != 0; ++k)
    p = checked_mul(p, kostka(nu.component(static_cast<std::size_t>(k)), mu.row(static_cast<std::size_t>(k))));
  return p;
}

std::vector<Count> beta_solve_row(const MultiPartition& la, const ShapeBound& bound) {
  check_pair(la, la, bound);
  const auto order = enumerate_multipartitions(la.size(), bound);
  const SkewShape shape(la);
  std::vector<Count> row(order.size(), 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const auto weight = MultiComposition::from_partition(order[p], bound);
    Count value = count_tableaux(shape, weight);
    for (std::size_t q = 0; q < p; ++q)
      if (row[q] != 0) value = checked_sub(value, checked_mul(row[q], kostka_product(order[q], weight)));
    if (value < 0)
      throw ConsistencyError("beta_solve: negative multiplicity for " + la.str() + ", " + order[p].str());
    row[p] = value;
  }
  return row;
}

Count beta_solve(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  check_pair(la, mu, bound);
  const auto order = enumerate_multipartitions(la.size(), bound);
  const auto row = beta_solve_row(la, bound);
  auto it = std::find(order.begin(), order.end(), mu);
  return row[static_cast<std::size_t>(it - order.begin())];
}

Count beta(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound, BetaMethod method) {
  switch (method) {
    case BetaMethod::singular: return beta_singular(la, mu, bound);
    case BetaMethod::chain: return beta_chain(la, mu, bound);
    case BetaMethod::solve: return beta_solve(la, mu, bound);
  }
  throw InputError("unknown beta method");
}

// ------------------------------------------------------------------ matrix

std::size_t BetaMatrix::index_of(const MultiPartition& mp) const {
  auto it = std::find(order.begin(), order.end(), mp);
  if (it == order.end()) throw InputError("multipartition " + mp.str() + " is not in the matrix index");
  return static_cast<std::size_t>(it - order.begin());
}

BetaMatrix build_beta_matrix(int n, const ShapeBound& bound, BetaMethod method, unsigned jobs) {
  bound.require_stable(n);
  BetaMatrix b;
  b.n = n;
  b.bound = bound;
  b.order = enumerate_multipartitions(n, bound);
  const std::size_t dim = b.order.size();
  b.values = Matrix<Count>(dim, dim);
  parallel_for(dim, jobs, [&](std::size_t i) {
    if (method == BetaMethod::solve) {
      auto row = beta_solve_row(b.order[i], bound);
      for (std::size_t j = 0; j < dim; ++j) b.values(i, j) = row[j];
      return;
    }
    for (std::size_t j = 0; j < dim; ++j) b.values(i, j) = beta(b.order[i], b.order[j], bound, method);
  });
  if (!is_upper_unitriangular(b.values)) throw ConsistencyError("beta matrix is not unitriangular");
  return b;
}

BetaMatrix invert_beta_matrix(const BetaMatrix& b) {
  BetaMatrix inv = b;
  inv.values = invert_unitriangular(b.values);
  return inv;
}

const StableBasis& stable_basis(int n, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<StableBasis>> table;
  {
    std::lock_guard lock(mutex);
    auto it = table.find({n, r});
    if (it != table.end()) return *it->second;
  }
  auto basis = std::make_unique<StableBasis>();
  basis->beta = build_beta_matrix(n, ShapeBound::uniform(r, n));
  basis->inverse = invert_beta_matrix(basis->beta);
  for (std::size_t i = 0; i < basis->beta.order.size(); ++i) basis->index.emplace(basis->beta.order[i], i);
  std::lock_guard lock(mutex);
  auto [it, fresh] = table.emplace(std::make_pair(n, r), std::move(basis));
  return *it->second;
}

// ------------------------------------------------------- grouping factor

FactorCheck bp_factor_check(const MultiPartition& la, const MultiPartition& mu, const Grouping& p,
                            const ShapeBound& bound) {
  if (zeta_p(la, p) != zeta_p(mu, p)) throw InputError("bp_factor_check: grouped sizes of la and mu differ");
  FactorCheck check;
  check.beta = beta_chain(la, mu, bound);
  const auto la_parts = split_p(la, p);
  const auto mu_parts = split_p(mu, p);
  const auto bounds = split_p(bound, p);
  check.product = 1;
  for (std::size_t g = 0; g < la_parts.size(); ++g)
    check.product = checked_mul(check.product, beta_chain(la_parts[g], mu_parts[g], bounds[g]));
  check.equal = check.beta == check.product;
  return check;
}

}  // namespace weylchar
