#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "weylchar/errors.hpp"
#include "weylchar/memo.hpp"
#include "weylchar/multiplicity.hpp"

namespace weylchar {

namespace {

void append_parts(std::string& key, const std::vector<int>& parts) {
  for (int p : parts) {
    key += std::to_string(p);
    key += ',';
  }
  key += '|';
}

MemoCache<std::string, Count>& kostka_cache() {
  static MemoCache<std::string, Count> cache;
  return cache;
}

MemoCache<std::string, Count>& lr_cache() {
  static MemoCache<std::string, Count> cache;
  return cache;
}

// weight is sorted decreasingly with zeros removed; this is the memo key
// content since Kostka numbers are symmetric in the weight.
Count kostka_sorted(const std::vector<int>& nu, const std::vector<int>& weight, std::size_t len) {
  if (len == 0) return nu.empty() ? 1 : 0;
  if (nu.size() > len) return 0;
  std::string key;
  append_parts(key, nu);
  append_parts(key, std::vector<int>(weight.begin(), weight.begin() + static_cast<long>(len)));
  return kostka_cache().get_or_compute(key, [&] {
    // Strip a horizontal strip of size weight[len-1] holding the largest letter.
    const int strip = weight[len - 1];
    Count total = 0;
    std::vector<int> inner(nu.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == nu.size()) {
        if (left != 0) return;
        std::vector<int> trimmed = inner;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total = checked_add(total, kostka_sorted(trimmed, weight, len - 1));
        return;
      }
      int floor_i = i + 1 < nu.size() ? nu[i + 1] : 0;
      for (int v = nu[i]; v >= floor_i; --v) {
        int removed = nu[i] - v;
        if (removed > left) break;
        inner[i] = v;
        rec(i + 1, left - removed);
      }
    };
    rec(0, strip);
    return total;
  });
}

class RowReadingLattice {
 public:
  RowReadingLattice(const Partition& nu, const Partition& la, const Partition& mu) : mu_(mu.parts()) {
    for (int i = 0; i < nu.length(); ++i)
      for (int j = nu[static_cast<std::size_t>(i)] - 1; j >= la[static_cast<std::size_t>(i)]; --j) cells_.push_back({i, j});
    for (std::size_t p = 0; p < cells_.size(); ++p) {
      auto [i, j] = cells_[p];
      int right = -1, above = -1;
      if (p > 0 && cells_[p - 1].first == i && cells_[p - 1].second == j + 1) right = static_cast<int>(p - 1);
      if (i > 0 && j >= la[static_cast<std::size_t>(i - 1)]) {
        for (std::size_t q = 0; q < p; ++q)
          if (cells_[q].first == i - 1 && cells_[q].second == j) above = static_cast<int>(q);
      }
      right_.push_back(right);
      above_.push_back(above);
    }
    filled_.assign(cells_.size(), 0);
    counts_.assign(mu_.size(), 0);
  }

  Count count() { return fill(0); }

 private:
  Count fill(std::size_t p) {
    if (p == cells_.size()) return 1;
    int lo = above_[p] >= 0 ? filled_[static_cast<std::size_t>(above_[p])] + 1 : 0;
    int hi = right_[p] >= 0 ? filled_[static_cast<std::size_t>(right_[p])] : static_cast<int>(mu_.size()) - 1;
    Count total = 0;
    for (int x = lo; x <= hi; ++x) {
      auto xs = static_cast<std::size_t>(x);
      if (counts_[xs] == mu_[xs]) continue;
      if (x > 0 && counts_[xs] + 1 > counts_[xs - 1]) continue;
      ++counts_[xs];
      filled_[p] = x;
      total = checked_add(total, fill(p + 1));
      --counts_[xs];
    }
    return total;
  }

  std::vector<int> mu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> right_, above_;
  std::vector<int> filled_;
  std::vector<int> counts_;
};

}  // namespace

Count kostka(const Partition& nu, std::span<const int> weight) {
  std::vector<int> w;
  int total = 0;
  for (int v : weight) {
    if (v < 0) throw InputError("kostka: negative weight entry");
    total += v;
    if (v > 0) w.push_back(v);
  }
  if (total != nu.size()) throw InputError("kostka: shape size and weight size differ");
  std::sort(w.begin(), w.end(), std::greater<>());
  return kostka_sorted(nu.parts(), w, w.size());
}

Count lr_coeff(const Partition& nu, const Partition& la, const Partition& mu) {
  if (nu.size() != la.size() + mu.size() || !nu.contains(la) || !nu.contains(mu)) return 0;
  std::string key;
  append_parts(key, nu.parts());
  append_parts(key, la.parts());
  append_parts(key, mu.parts());
  return lr_cache().get_or_compute(key, [&] { return RowReadingLattice(nu, la, mu).count(); });
}

std::map<Partition, Count> lr_product(const Partition& a, const Partition& b) {
  std::map<Partition, Count> out;
  for (const auto& nu : partitions_of(a.size() + b.size())) {
    if (!nu.contains(a) || !nu.contains(b)) continue;
    if (Count c = lr_coeff(nu, a, b); c != 0) out.emplace(nu, c);
  }
  return out;
}

}  // namespace weylchar
