#include "weylchar/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylchar/errors.hpp"

namespace weylchar {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}

void subpartitions_rec(const Partition& outer, std::size_t row, int remaining, int cap, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (row >= outer.parts().size()) return;
  // The rows below can hold at most sum_{l>row} min(cap, outer_l) boxes.
  int hi = std::min({cap, outer[row], remaining});
  for (int p = hi; p >= 1; --p) {
    int room = 0;
    for (std::size_t l = row + 1; l < outer.parts().size(); ++l) room += std::min(p, outer[l]);
    if (p + room < remaining) break;
    cur.push_back(p);
    subpartitions_rec(outer, row + 1, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(remaining - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive: " + str());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must weakly decrease: " + str());
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition(std::vector<int>{n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.parts_.size(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_of(int n, int max_length) {
  if (n < 0) throw InputError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_length, cur, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& p, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > p.size()) return out;
  std::vector<int> cur;
  subpartitions_rec(p, 0, size, p.empty() ? 0 : p[0], cur, out);
  return out;
}

// --------------------------------------------------------------- ShapeBound

ShapeBound::ShapeBound(std::vector<int> m) : m_(std::move(m)) {
  if (m_.empty()) throw InputError("shape bound needs at least one component");
  for (int v : m_)
    if (v < 1) throw InputError("shape bound entries must be positive");
}

ShapeBound ShapeBound::uniform(int r, int n) {
  if (r < 1) throw InputError("r must be at least 1");
  return ShapeBound(std::vector<int>(static_cast<std::size_t>(r), std::max(n, 1)));
}

int ShapeBound::total() const noexcept { return std::accumulate(m_.begin(), m_.end(), 0); }

bool ShapeBound::is_stable(int n) const noexcept {
  return std::all_of(m_.begin(), m_.end(), [n](int v) { return v >= n; });
}

void ShapeBound::require_stable(int n) const {
  if (!is_stable(n))
    throw InputError("row bounds m_k must be at least n = " + std::to_string(n) + " for every component");
}

// --------------------------------------------------------- MultiComposition

MultiComposition::MultiComposition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InputError("multicomposition needs at least one component");
  for (const auto& row : rows_) {
    if (row.empty()) throw InputError("multicomposition rows must have length m_k >= 1");
    for (int v : row) {
      if (v < 0) throw InputError("multicomposition entries must be nonnegative");
      n_ += v;
    }
  }
}

MultiComposition MultiComposition::zero(const ShapeBound& bound) {
  std::vector<std::vector<int>> rows;
  for (int m : bound.values()) rows.emplace_back(static_cast<std::size_t>(m), 0);
  return MultiComposition(std::move(rows));
}

MultiComposition MultiComposition::from_partition(const MultiPartition& mp, const ShapeBound& bound) {
  if (mp.r() != bound.r()) throw InputError("component count of shape and bound differ");
  std::vector<std::vector<int>> rows;
  for (int k = 0; k < mp.r(); ++k) {
    const auto& p = mp.component(static_cast<std::size_t>(k));
    if (p.length() > bound[static_cast<std::size_t>(k)])
      throw InputError("component " + std::to_string(k + 1) + " has more than m_k parts");
    std::vector<int> row(static_cast<std::size_t>(bound[static_cast<std::size_t>(k)]), 0);
    std::copy(p.parts().begin(), p.parts().end(), row.begin());
    rows.push_back(std::move(row));
  }
  return MultiComposition(std::move(rows));
}

ShapeBound MultiComposition::bound() const {
  std::vector<int> m;
  for (const auto& row : rows_) m.push_back(static_cast<int>(row.size()));
  return ShapeBound(std::move(m));
}

int MultiComposition::concentrated_component() const noexcept {
  int found = -1;
  for (int k = 0; k < r(); ++k) {
    bool nonzero = std::any_of(rows_[static_cast<std::size_t>(k)].begin(), rows_[static_cast<std::size_t>(k)].end(),
                               [](int v) { return v != 0; });
    if (!nonzero) continue;
    if (found != -1) return -2;
    found = k;
  }
  return found;
}

bool MultiComposition::is_dominant() const noexcept {
  for (const auto& row : rows_)
    if (!std::is_sorted(row.begin(), row.end(), std::greater<>())) return false;
  return true;
}

MultiPartition MultiComposition::to_partition() const {
  std::vector<Partition> comps;
  for (const auto& row : rows_) comps.emplace_back(row);
  return MultiPartition(std::move(comps));
}

// ----------------------------------------------------------- MultiPartition

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("multipartition needs at least one component");
  for (const auto& p : components_) n_ += p.size();
}

MultiPartition MultiPartition::empty(int r) {
  if (r < 1) throw InputError("r must be at least 1");
  return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(r)));
}

MultiPartition MultiPartition::concentrated(int r, int k, Partition p) {
  if (k < 0 || k >= r) throw InputError("component index out of range");
  std::vector<Partition> comps(static_cast<std::size_t>(r));
  comps[static_cast<std::size_t>(k)] = std::move(p);
  return MultiPartition(std::move(comps));
}

std::vector<int> MultiPartition::zeta() const {
  std::vector<int> z;
  for (const auto& p : components_) z.push_back(p.size());
  return z;
}

bool MultiPartition::fits(const ShapeBound& bound) const noexcept {
  if (bound.r() != r()) return false;
  for (int k = 0; k < r(); ++k)
    if (components_[static_cast<std::size_t>(k)].length() > bound[static_cast<std::size_t>(k)]) return false;
  return true;
}

bool MultiPartition::contains(const MultiPartition& inner) const noexcept {
  if (inner.r() != r()) return false;
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (!components_[k].contains(inner.components_[k])) return false;
  return true;
}

int MultiPartition::concentrated_component() const noexcept {
  int found = -1;
  for (int k = 0; k < r(); ++k) {
    if (components_[static_cast<std::size_t>(k)].empty()) continue;
    if (found != -1) return -2;
    found = k;
  }
  return found;
}

std::string MultiPartition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += ",";
    s += components_[k].empty() ? std::string("()") : components_[k].str();
  }
  return s + ")";
}

// ------------------------------------------------------------------ orders

std::vector<int> zeta(const MultiComposition& mu) {
  std::vector<int> z;
  for (const auto& row : mu.rows()) z.push_back(std::accumulate(row.begin(), row.end(), 0));
  return z;
}

bool zeta_succeq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InputError("zeta_succeq: length mismatch");
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

bool dominance_ge(const MultiComposition& la, const MultiComposition& mu) {
  if (la.size() != mu.size()) throw InputError("dominance_ge: total sizes differ");
  if (la.r() != mu.r()) throw InputError("dominance_ge: component counts differ");
  long sa = 0, sb = 0;
  for (int k = 0; k < la.r(); ++k) {
    const auto& ra = la.row(static_cast<std::size_t>(k));
    const auto& rb = mu.row(static_cast<std::size_t>(k));
    if (ra.size() != rb.size()) throw InputError("dominance_ge: row lengths differ");
    for (std::size_t i = 0; i < ra.size(); ++i) {
      sa += ra[i];
      sb += rb[i];
      if (sa < sb) return false;
    }
  }
  return true;
}

bool dominance_ge(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  if (la.size() != mu.size()) throw InputError("dominance_ge: total sizes differ");
  return dominance_ge(MultiComposition::from_partition(la, bound), MultiComposition::from_partition(mu, bound));
}

bool canonical_before(const MultiPartition& a, const MultiPartition& b) {
  auto za = a.zeta(), zb = b.zeta();
  if (za != zb) return za > zb;
  return a > b;
}

std::vector<MultiPartition> enumerate_multipartitions(int n, const ShapeBound& bound) {
  if (n < 0) throw InputError("enumerate_multipartitions: negative size");
  const int r = bound.r();
  std::vector<MultiPartition> out;
  for (const auto& z : compositions(n, r)) {
    // Cartesian product of bounded partitions of each z_k.
    std::vector<std::vector<Partition>> choices;
    for (int k = 0; k < r; ++k)
      choices.push_back(partitions_of(z[static_cast<std::size_t>(k)], bound[static_cast<std::size_t>(k)]));
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) continue;
    for (;;) {
      std::vector<Partition> comps;
      for (int k = 0; k < r; ++k) comps.push_back(choices[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]]);
      out.emplace_back(std::move(comps));
      int k = r - 1;
      while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == choices[static_cast<std::size_t>(k)].size()) {
        idx[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  std::sort(out.begin(), out.end(), canonical_before);
  return out;
}

// ----------------------------------------------------------------- Grouping

Grouping::Grouping(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InputError("grouping needs at least one group");
  for (int s : sizes_)
    if (s < 1) throw InputError("grouping sizes must be positive");
}

int Grouping::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

int Grouping::offset(int g) const {
  return std::accumulate(sizes_.begin(), sizes_.begin() + g, 0);
}

namespace {
void check_grouping(int r, const Grouping& p) {
  if (p.total() != r) throw InputError("grouping does not sum to r = " + std::to_string(r));
}
}  // namespace

std::vector<int> zeta_p(const MultiPartition& la, const Grouping& p) {
  check_grouping(la.r(), p);
  auto z = la.zeta();
  std::vector<int> out;
  for (int g = 0; g < p.groups(); ++g) {
    int off = p.offset(g);
    out.push_back(std::accumulate(z.begin() + off, z.begin() + off + p.sizes()[static_cast<std::size_t>(g)], 0));
  }
  return out;
}

std::vector<MultiPartition> split_p(const MultiPartition& la, const Grouping& p) {
  check_grouping(la.r(), p);
  std::vector<MultiPartition> out;
  for (int g = 0; g < p.groups(); ++g) {
    auto first = la.components().begin() + p.offset(g);
    out.emplace_back(std::vector<Partition>(first, first + p.sizes()[static_cast<std::size_t>(g)]));
  }
  return out;
}

std::vector<MultiComposition> split_p(const MultiComposition& mu, const Grouping& p) {
  check_grouping(mu.r(), p);
  std::vector<MultiComposition> out;
  for (int g = 0; g < p.groups(); ++g) {
    auto first = mu.rows().begin() + p.offset(g);
    out.emplace_back(std::vector<std::vector<int>>(first, first + p.sizes()[static_cast<std::size_t>(g)]));
  }
  return out;
}

std::vector<ShapeBound> split_p(const ShapeBound& bound, const Grouping& p) {
  check_grouping(bound.r(), p);
  std::vector<ShapeBound> out;
  for (int g = 0; g < p.groups(); ++g) {
    auto first = bound.values().begin() + p.offset(g);
    out.emplace_back(std::vector<int>(first, first + p.sizes()[static_cast<std::size_t>(g)]));
  }
  return out;
}

// -------------------------------------------------------------------- cells

std::strong_ordering cell_order_cmp(const Cell& x, const Cell& y) noexcept {
  if (x.comp != y.comp) return x.comp <=> y.comp;
  if (x.col != y.col) return x.col <=> y.col;
  return y.row <=> x.row;
}

SkewShape::SkewShape(MultiPartition outer) : outer_(std::move(outer)), inner_(MultiPartition::empty(outer_.r())) {}

SkewShape::SkewShape(MultiPartition outer, MultiPartition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw InputError("skew shape: inner " + inner_.str() + " not contained in outer " + outer_.str());
}

bool SkewShape::contains(const Cell& c) const noexcept {
  if (c.comp < 0 || c.comp >= r() || c.row < 0 || c.col < 0) return false;
  const auto& o = outer_.component(static_cast<std::size_t>(c.comp));
  const auto& in = inner_.component(static_cast<std::size_t>(c.comp));
  auto row = static_cast<std::size_t>(c.row);
  return c.col < o[row] && c.col >= in[row];
}

std::vector<Cell> skew_cells(const SkewShape& s) {
  std::vector<Cell> cells;
  for (int k = s.r() - 1; k >= 0; --k) {
    const auto& o = s.outer().component(static_cast<std::size_t>(k));
    const auto& in = s.inner().component(static_cast<std::size_t>(k));
    int width = o.empty() ? 0 : o[0];
    for (int j = width - 1; j >= 0; --j)
      for (int i = 0; i < o.length(); ++i) {
        auto row = static_cast<std::size_t>(i);
        if (j < o[row] && j >= in[row]) cells.push_back(Cell{i, j, k});
      }
  }
  return cells;
}

std::vector<std::vector<int>> compositions(int total, int length) {
  std::vector<std::vector<int>> out;
  if (length <= 0 || total < 0) {
    if (length == 0 && total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  compositions_rec(total, length, cur, out);
  return out;
}

std::vector<MultiComposition> enumerate_multicompositions(int n, const ShapeBound& bound) {
  std::vector<MultiComposition> out;
  const auto& m = bound.values();
  for (const auto& z : compositions(n, bound.r())) {
    std::vector<std::vector<std::vector<int>>> per;
    for (std::size_t k = 0; k < m.size(); ++k) per.push_back(compositions(z[k], m[k]));
    std::vector<std::size_t> idx(m.size(), 0);
    for (;;) {
      std::vector<std::vector<int>> rows;
      for (std::size_t k = 0; k < m.size(); ++k) rows.push_back(per[k][idx[k]]);
      out.emplace_back(std::move(rows));
      std::size_t k = m.size();
      while (k > 0 && ++idx[k - 1] == per[k - 1].size()) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace weylchar

std::size_t std::hash<weylchar::Partition>::operator()(const weylchar::Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) h = weylchar::hash_combine(h, static_cast<std::size_t>(v));
  return h;
}

std::size_t std::hash<weylchar::MultiPartition>::operator()(const weylchar::MultiPartition& p) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& c : p.components())
    h = weylchar::hash_combine(h, std::hash<weylchar::Partition>{}(c) + 0x51);
  return h;
}
