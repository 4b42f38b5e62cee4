#pragma once

// Robinson-Schensted row insertion and recovery of a permutation whose
// recording tableau is a given standard tableau.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

/// A bijection of {1..N} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw error(errc::bad_permutation, "not a bijection of 1.." + std::to_string(images_.size()));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(im));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

namespace detail {

// Schensted row insertion of v into rows; returns the 0-based row where a box
// was added.
inline std::size_t row_insert(StandardTableau::Rows& rows, int v) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.emplace_back(1, v);
      return r;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return r;
    }
    std::swap(*it, v);
  }
}

}  // namespace detail

struct RsPair {
  StandardTableau insertion;  // A(w)
  StandardTableau recording;  // B(w)
};

inline RsPair rs_pair(const Permutation& w) {
  StandardTableau::Rows p, q;
  for (int i = 1; i <= w.size(); ++i) {
    std::size_t r = detail::row_insert(p, w(i));
    if (r == q.size()) q.emplace_back();
    q[r].push_back(i);
  }
  return RsPair{StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

/// Reverse bumping: the unique w with rs_pair(w) == (p, q).
inline Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape()) throw error(errc::size_mismatch, "insertion and recording shapes differ");
  StandardTableau::Rows rows = p.rows();
  int n = p.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::size_t r = static_cast<std::size_t>(q.row_of(k) - 1);
    int v = rows[r].back();
    rows[r].pop_back();
    while (r > 0) {
      --r;
      auto& row = rows[r];
      // Largest entry smaller than v gets bumped up.
      auto it = std::lower_bound(row.begin(), row.end(), v);
      --it;
      std::swap(*it, v);
    }
    images[static_cast<std::size_t>(k - 1)] = v;
    if (!rows.empty() && rows.back().empty()) rows.pop_back();
  }
  return Permutation(std::move(images));
}

/// Lexicographically smallest w with rs_pair(w).recording == t, found by a
/// depth-first search over prefixes (a prefix fixes the recording tableau on
/// its positions, so mismatching prefixes are pruned).
inline Permutation find_word_for_tableau(const StandardTableau& t, int bound = 8) {
  int n = t.size();
  if (n > bound)
    throw error(errc::bound_exceeded, "tableau has " + std::to_string(n) + " boxes, bound is " + std::to_string(bound));
  std::vector<int> word;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, const StandardTableau::Rows& p) -> bool {
    int k = static_cast<int>(word.size()) + 1;
    if (k > n) return true;
    std::size_t want = static_cast<std::size_t>(t.row_of(k) - 1);
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      StandardTableau::Rows next = p;
      if (detail::row_insert(next, v) != want) continue;
      used[static_cast<std::size_t>(v)] = 1;
      word.push_back(v);
      if (self(self, next)) return true;
      word.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  rec(rec, StandardTableau::Rows{});
  return Permutation(std::move(word));
}

}  // namespace orbital
