#include "weylchar/crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "weylchar/errors.hpp"

namespace weylchar {

std::vector<OperatorIndex> operator_indices(const ShapeBound& bound) {
  std::vector<OperatorIndex> ops;
  for (int k = 0; k < bound.r(); ++k)
    for (int i = 0; i + 1 < bound[static_cast<std::size_t>(k)]; ++i) ops.push_back(OperatorIndex{i, k});
  return ops;
}

MultiComposition word_weight(const CrystalWord& w, const ShapeBound& bound) {
  if (w.r() != bound.r()) throw InputError("word_weight: component count mismatch");
  std::vector<std::vector<int>> rows;
  for (int m : bound.values()) rows.emplace_back(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    for (int a : w.letters[k]) {
      if (a < 0 || a >= bound[k]) throw InputError("word letter outside its alphabet");
      ++rows[k][static_cast<std::size_t>(a)];
    }
  return MultiComposition(std::move(rows));
}

namespace {

void check_op(const CrystalWord& w, const OperatorIndex& op, const ShapeBound& bound) {
  if (w.r() != bound.r()) throw InputError("crystal word has wrong component count");
  if (op.comp < 0 || op.comp >= bound.r() || op.i < 0 || op.i + 1 >= bound[static_cast<std::size_t>(op.comp)])
    throw InputError("invalid crystal operator index");
}

// Positions of the unmatched closers (letter i+1) and openers (letter i).
struct Unmatched {
  std::vector<std::size_t> closers;
  std::vector<std::size_t> openers;
};

Unmatched bracket(const std::vector<int>& word, int i) {
  Unmatched u;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] == i) {
      u.openers.push_back(p);
    } else if (word[p] == i + 1) {
      if (!u.openers.empty())
        u.openers.pop_back();
      else
        u.closers.push_back(p);
    }
  }
  return u;
}

}  // namespace

std::optional<CrystalWord> raise(const CrystalWord& w, const OperatorIndex& op, const ShapeBound& bound) {
  check_op(w, op, bound);
  const auto& word = w.letters[static_cast<std::size_t>(op.comp)];
  Unmatched u = bracket(word, op.i);
  if (u.closers.empty()) return std::nullopt;
  CrystalWord out = w;
  out.letters[static_cast<std::size_t>(op.comp)][u.closers.back()] = op.i;
  return out;
}

std::optional<CrystalWord> lower(const CrystalWord& w, const OperatorIndex& op, const ShapeBound& bound) {
  check_op(w, op, bound);
  const auto& word = w.letters[static_cast<std::size_t>(op.comp)];
  Unmatched u = bracket(word, op.i);
  if (u.openers.empty()) return std::nullopt;
  CrystalWord out = w;
  out.letters[static_cast<std::size_t>(op.comp)][u.openers.front()] = op.i + 1;
  return out;
}

bool is_singular_word(const CrystalWord& w) {
  for (const auto& word : w.letters) {
    std::vector<int> counts;
    for (int a : word) {
      if (a < 0) return false;
      if (static_cast<std::size_t>(a) >= counts.size()) counts.resize(static_cast<std::size_t>(a) + 1, 0);
      ++counts[static_cast<std::size_t>(a)];
      if (a > 0 && counts[static_cast<std::size_t>(a)] > counts[static_cast<std::size_t>(a - 1)]) return false;
    }
  }
  return true;
}

bool is_singular(const Tableau& t) { return is_singular_word(reading(t)); }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CrystalGraph crystal_graph(const SkewShape& shape, const ShapeBound& bound) {
  CrystalGraph g;
  g.bound = bound;
  g.vertices = enumerate_all_tableaux(shape, bound);
  const auto ops = operator_indices(bound);

  std::vector<CrystalWord> words;
  words.reserve(g.vertices.size());
  for (const auto& t : g.vertices) words.push_back(reading(t));

  DisjointSets sets(g.vertices.size());
  for (const auto& cls : partition_classes(g.vertices)) {
    std::map<CrystalWord, std::size_t> by_word;
    for (std::size_t v : cls) {
      auto [it, fresh] = by_word.emplace(words[v], v);
      if (!fresh) throw ConsistencyError("reading is not injective on an equivalence class");
    }
    for (std::size_t v : cls)
      for (const auto& op : ops) {
        auto image = lower(words[v], op, bound);
        if (!image) continue;
        auto it = by_word.find(*image);
        if (it == by_word.end()) throw ConsistencyError("lowering operator left the readings of its class");
        g.edges.push_back(CrystalEdge{v, it->second, op});
        sets.unite(v, it->second);
      }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) groups[sets.find(v)].push_back(v);

  for (auto& [root, members] : groups) {
    std::optional<std::size_t> top;
    for (std::size_t v : members)
      if (is_singular_word(words[v])) {
        if (top) throw ConsistencyError("crystal component with more than one singular vertex");
        top = v;
      }
    if (!top) throw ConsistencyError("crystal component without a singular vertex");
    g.components.push_back(CrystalComponent{word_weight(words[*top], bound).to_partition(), std::move(members)});
  }

  auto smallest_word = [&](const CrystalComponent& c) {
    const CrystalWord* best = &words[c.members.front()];
    for (std::size_t v : c.members)
      if (words[v] < *best) best = &words[v];
    return *best;
  };
  std::vector<std::pair<CrystalWord, CrystalComponent>> keyed;
  for (auto& c : g.components) keyed.emplace_back(smallest_word(c), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const auto& ha = a.second.highest_weight;
    const auto& hb = b.second.highest_weight;
    if (ha != hb) return canonical_before(ha, hb);
    return a.first < b.first;
  });
  g.components.clear();
  for (auto& [w, c] : keyed) g.components.push_back(std::move(c));
  return g;
}

std::vector<ComponentSummary> crystal_components(const SkewShape& shape, const ShapeBound& bound) {
  std::vector<ComponentSummary> out;
  for (const auto& c : crystal_graph(shape, bound).components) out.push_back(ComponentSummary{c.highest_weight, c.size()});
  return out;
}

}  // namespace weylchar
