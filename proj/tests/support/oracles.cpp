#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace weylchar::oracle {

std::vector<Box> boxes_of(const MultiPartition& outer, const MultiPartition& inner) {
  std::vector<Box> out;
  for (int k = 0; k < outer.r(); ++k) {
    const auto& o = outer.component(static_cast<std::size_t>(k));
    const auto& in = inner.component(static_cast<std::size_t>(k));
    for (int i = 0; i < o.length(); ++i)
      for (int j = in[static_cast<std::size_t>(i)]; j < o[static_cast<std::size_t>(i)]; ++j) out.push_back(Box{i, j, k});
  }
  return out;
}

namespace {
bool less_eq(const Label& a, const Label& b) {
  return a.alphabet < b.alphabet || (a.alphabet == b.alphabet && a.letter <= b.letter);
}

bool semistandard(const std::vector<Box>& boxes, const Filling& f) {
  for (std::size_t p = 0; p < boxes.size(); ++p) {
    if (f[p].alphabet < boxes[p].comp) return false;
    for (std::size_t q = 0; q < boxes.size(); ++q) {
      if (boxes[q].comp != boxes[p].comp) continue;
      if (boxes[q].row == boxes[p].row && boxes[q].col == boxes[p].col + 1 && !less_eq(f[p], f[q])) return false;
      if (boxes[q].col == boxes[p].col && boxes[q].row == boxes[p].row + 1 &&
          !(less_eq(f[p], f[q]) && !less_eq(f[q], f[p])))
        return false;
    }
  }
  return true;
}
}  // namespace

std::vector<Filling> semistandard_fillings(const MultiPartition& outer, const MultiPartition& inner,
                                           const ShapeBound& bound) {
  const auto boxes = boxes_of(outer, inner);
  std::vector<Label> labels;
  for (int c = 0; c < bound.r(); ++c)
    for (int a = 0; a < bound[static_cast<std::size_t>(c)]; ++a) labels.push_back(Label{a, c});
  std::vector<Filling> out;
  Filling cur(boxes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == boxes.size()) {
      if (semistandard(boxes, cur)) out.push_back(cur);
      return;
    }
    for (const auto& l : labels) {
      cur[p] = l;
      rec(p + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> content(const Filling& f, const ShapeBound& bound) {
  std::vector<std::vector<int>> rows;
  for (int m : bound.values()) rows.emplace_back(static_cast<std::size_t>(m), 0);
  for (const auto& l : f) ++rows[static_cast<std::size_t>(l.alphabet)][static_cast<std::size_t>(l.letter)];
  return rows;
}

std::vector<std::vector<int>> reading_word(const std::vector<Box>& boxes, const Filling& f, int r) {
  std::vector<std::size_t> idx(boxes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const Box& a = boxes[x];
    const Box& b = boxes[y];
    if (a.comp != b.comp) return a.comp > b.comp;
    if (a.col != b.col) return a.col > b.col;
    return a.row < b.row;
  });
  std::vector<std::vector<int>> w(static_cast<std::size_t>(r));
  for (std::size_t p : idx) w[static_cast<std::size_t>(f[p].alphabet)].push_back(f[p].letter);
  return w;
}

int epsilon(const std::vector<int>& word, int i) {
  int best = 0, run = 0;
  for (int a : word) {
    if (a == i + 1) ++run;
    if (a == i) --run;
    best = std::max(best, run);
  }
  return best;
}

bool highest_weight(const std::vector<std::vector<int>>& word, const ShapeBound& bound) {
  for (std::size_t k = 0; k < word.size(); ++k)
    for (int i = 0; i + 1 < bound[k]; ++i)
      if (epsilon(word[k], i) > 0) return false;
  return true;
}

long long beta(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound) {
  const auto boxes = boxes_of(la, MultiPartition::empty(la.r()));
  const auto target = MultiComposition::from_partition(mu, bound).rows();
  long long n = 0;
  for (const auto& f : semistandard_fillings(la, MultiPartition::empty(la.r()), bound))
    if (content(f, bound) == target && highest_weight(reading_word(boxes, f, la.r()), bound)) ++n;
  return n;
}

long long tableau_count(const MultiPartition& la, const std::vector<std::vector<int>>& weight, const ShapeBound& bound) {
  long long n = 0;
  for (const auto& f : semistandard_fillings(la, MultiPartition::empty(la.r()), bound))
    if (content(f, bound) == weight) ++n;
  return n;
}

long long kostka(const Partition& nu, const std::vector<int>& weight) {
  const MultiPartition shape({nu});
  const int m = std::max<int>(1, static_cast<int>(weight.size()));
  std::vector<int> w = weight;
  w.resize(static_cast<std::size_t>(m), 0);
  return tableau_count(shape, {w}, ShapeBound({m}));
}

long long lr(const Partition& nu, const Partition& la, const Partition& mu) {
  if (!nu.contains(la) || nu.size() != la.size() + mu.size()) return 0;
  const int m = std::max(1, mu.length());
  const MultiPartition outer({nu}), inner({la});
  const auto boxes = boxes_of(outer, inner);
  long long n = 0;
  for (const auto& f : semistandard_fillings(outer, inner, ShapeBound({m}))) {
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (const auto& l : f) ++counts[static_cast<std::size_t>(l.letter)];
    std::vector<int> want = mu.parts();
    want.resize(static_cast<std::size_t>(m), 0);
    if (counts != want) continue;
    // Boxes are row-major, so reversing within each row gives the row word.
    std::vector<int> word;
    for (int i = 0; i < nu.length(); ++i)
      for (std::size_t p = boxes.size(); p-- > 0;)
        if (boxes[p].row == i) word.push_back(f[p].letter);
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    bool lattice = true;
    for (int a : word) {
      ++seen[static_cast<std::size_t>(a)];
      if (a > 0 && seen[static_cast<std::size_t>(a)] > seen[static_cast<std::size_t>(a - 1)]) lattice = false;
    }
    if (lattice) ++n;
  }
  return n;
}

bool dominates(const MultiPartition& la, const MultiPartition& mu) {
  // Pad every component to the size of the diagram so the sequences align.
  const int n = std::max(la.size(), mu.size());
  long long a = 0, b = 0;
  for (int k = 0; k < la.r(); ++k)
    for (int i = 0; i < std::max(n, 1); ++i) {
      a += la.component(static_cast<std::size_t>(k))[static_cast<std::size_t>(i)];
      b += mu.component(static_cast<std::size_t>(k))[static_cast<std::size_t>(i)];
      if (a < b) return false;
    }
  return true;
}

}  // namespace weylchar::oracle
