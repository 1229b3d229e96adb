#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "weylchar/shapes.hpp"
#include "weylchar/tableaux.hpp"

namespace weylchar::fixtures {

// rows[k][i][j] = (a, c), 1-based as written in diagrams.
using Rows = std::vector<std::vector<std::vector<std::pair<int, int>>>>;

inline Tableau tableau_from_rows(const Rows& rows) {
  std::vector<Partition> comps;
  std::map<std::tuple<int, int, int>, Entry> at;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<int> lengths;
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      lengths.push_back(static_cast<int>(rows[k][i].size()));
      for (std::size_t j = 0; j < rows[k][i].size(); ++j)
        at[{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}] =
            Entry{rows[k][i][j].first - 1, rows[k][i][j].second - 1};
    }
    comps.emplace_back(lengths);
  }
  SkewShape shape{MultiPartition(comps)};
  std::vector<Entry> entries;
  for (const auto& c : skew_cells(shape)) entries.push_back(at.at({c.row, c.col, c.comp}));
  return Tableau(shape, entries);
}

inline MultiPartition mp(std::vector<std::vector<int>> comps) {
  std::vector<Partition> ps;
  for (auto& c : comps) ps.emplace_back(std::move(c));
  return MultiPartition(std::move(ps));
}

// Shape ((3,2),(3,1),(1,1)), weight ((2,1),(2,2),(3,1)).
inline Tableau reading_example() {
  return tableau_from_rows({{{{1, 1}, {1, 1}, {1, 2}}, {{2, 1}, {1, 3}}},
                            {{{1, 2}, {2, 2}, {1, 3}}, {{2, 2}}},
                            {{{1, 3}}, {{2, 3}}}});
}

// Same reading as reading_example(), different class.
inline Tableau reading_collision() {
  return tableau_from_rows({{{{1, 1}, {1, 1}, {1, 3}}, {{2, 1}, {1, 2}}},
                            {{{1, 2}, {2, 2}, {1, 3}}, {{2, 2}}},
                            {{{1, 3}}, {{2, 3}}}});
}

// Four tableaux of shape ((2,2),(2,1)) with T1 ~ T2, T2 !~ T3, T3 ~ T4.
inline std::vector<Tableau> equivalence_examples() {
  return {tableau_from_rows({{{{1, 1}, {1, 1}}, {{1, 2}, {2, 2}}}, {{{1, 2}, {2, 2}}, {{3, 2}}}}),
          tableau_from_rows({{{{1, 1}, {2, 1}}, {{1, 2}, {3, 2}}}, {{{2, 2}, {2, 2}}, {{4, 2}}}}),
          tableau_from_rows({{{{1, 1}, {1, 2}}, {{2, 1}, {3, 2}}}, {{{2, 2}, {2, 2}}, {{4, 2}}}}),
          tableau_from_rows({{{{1, 1}, {2, 2}}, {{3, 1}, {3, 2}}}, {{{1, 2}, {1, 2}}, {{2, 2}}}})};
}

}  // namespace weylchar::fixtures
