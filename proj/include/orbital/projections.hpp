#pragma once

// Tableau projections T^[i,j]: removal of the largest box and the jeu de
// taquin slide out of the corner, each followed by relabeling.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

inline StandardTableau remove_largest(const StandardTableau& t) {
  if (t.size() < 2) throw error(errc::too_small, "need at least two boxes");
  auto rows = t.rows();
  auto r = static_cast<std::size_t>(t.row_of(t.size()) - 1);
  rows[r].pop_back();
  return StandardTableau(std::move(rows));
}

/// Result of a slide together with every intermediate frame; a 0 entry marks
/// the hole.
struct SlideTrace {
  StandardTableau result;
  std::vector<StandardTableau::Rows> frames;
};

inline SlideTrace strip_first_traced(const StandardTableau& t) {
  if (t.size() < 2) throw error(errc::too_small, "need at least two boxes");
  auto rows = t.rows();
  std::vector<StandardTableau::Rows> frames{rows};
  std::size_t r = 0, c = 0;
  rows[0][0] = 0;
  frames.push_back(rows);
  for (;;) {
    bool has_right = c + 1 < rows[r].size();
    bool has_below = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_below) break;
    if (has_right && (!has_below || rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
    rows[r][c] = 0;
    frames.push_back(rows);
  }
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
  frames.push_back(rows);
  for (auto& row : rows)
    for (int& v : row) --v;
  return SlideTrace{StandardTableau(std::move(rows)), std::move(frames)};
}

inline StandardTableau strip_first(const StandardTableau& t) { return strip_first_traced(t).result; }

/// T^[i,j]: drop entries > j, then slide out entries < i, relabeling to 1..j-i+1.
inline StandardTableau project(const StandardTableau& t, int i, int j) {
  if (i < 1 || j < i || j > t.size())
    throw error(errc::bad_range, "[" + std::to_string(i) + "," + std::to_string(j) + "] not within 1.." +
                                     std::to_string(t.size()));
  StandardTableau cur = t;
  for (int k = t.size(); k > j; --k) cur = remove_largest(cur);
  for (int k = 1; k < i; ++k) cur = strip_first(cur);
  return cur;
}

inline Partition projected_shape(const StandardTableau& t, int i, int j) { return project(t, i, j).shape(); }

}  // namespace orbital
