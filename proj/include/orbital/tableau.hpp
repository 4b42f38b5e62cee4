#pragma once

// Partitions, standard Young tableaux, tau-invariants, Richardson tableaux and
// their chains. Boxes, rows and columns are 1-indexed throughout.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"

namespace orbital {

/// A weakly decreasing sequence of positive integers. Trailing zeros given at
/// construction are dropped.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0)
        throw error(errc::bad_partition, "parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw error(errc::bad_partition, "parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  // 1-based; parts past the end read as 0.
  int part(int k) const noexcept {
    return (k >= 1 && k <= length()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// lambda'_k = number of parts of lambda that are >= k.
inline Partition dual_partition(const Partition& lambda) {
  std::vector<int> dual(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts())
    for (int k = 0; k < p; ++k) ++dual[static_cast<std::size_t>(k)];
  return Partition(std::move(dual));
}

inline bool dominance_le(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw error(errc::size_mismatch, "dominance order compares partitions of equal size");
  int len = std::max(mu.length(), lambda.length());
  int sm = 0, sl = 0;
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

/// Dimension of an orbital variety whose tableau has shape lambda:
/// (N^2 - sum of squared dual parts) / 2.
inline int variety_dim(const Partition& lambda, int n) {
  if (lambda.size() != n) throw error(errc::size_mismatch, "partition does not have N boxes");
  int sq = 0;
  Partition dual = dual_partition(lambda);
  for (int c : dual.parts()) sq += c * c;
  return (n * n - sq) / 2;
}

class StandardTableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  explicit StandardTableau(Rows rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    n_ = 0;
    for (const auto& r : rows_) n_ += static_cast<int>(r.size());
    if (n_ == 0) throw error(errc::empty_tableau, "tableau has no boxes");

    std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v >= 1 && v <= n_ && seen[static_cast<std::size_t>(v)]++)
          throw error(errc::duplicate_entry, "entry " + std::to_string(v) + " appears twice");
      }
    for (const auto& r : rows_)
      for (int v : r)
        if (v < 1 || v > n_)
          throw error(errc::entry_out_of_range,
                      "entry " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      const auto& r = rows_[ri];
      for (std::size_t c = 1; c < r.size(); ++c)
        if (r[c] <= r[c - 1])
          throw error(errc::row_not_increasing, "row " + std::to_string(ri + 1));
    }
    for (std::size_t ri = 1; ri < rows_.size(); ++ri)
      if (rows_[ri].size() > rows_[ri - 1].size())
        throw error(errc::ragged_shape, "row " + std::to_string(ri + 1) + " is longer than the row above");
    for (std::size_t ri = 1; ri < rows_.size(); ++ri)
      for (std::size_t c = 0; c < rows_[ri].size(); ++c)
        if (rows_[ri][c] <= rows_[ri - 1][c])
          throw error(errc::column_not_increasing, "column " + std::to_string(c + 1));

    row_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
    col_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t ri = 0; ri < rows_.size(); ++ri)
      for (std::size_t c = 0; c < rows_[ri].size(); ++c) {
        row_of_[static_cast<std::size_t>(rows_[ri][c])] = static_cast<int>(ri) + 1;
        col_of_[static_cast<std::size_t>(rows_[ri][c])] = static_cast<int>(c) + 1;
      }
  }

  const Rows& rows() const noexcept { return rows_; }
  int size() const noexcept { return n_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }

  int row_of(int entry) const { return row_of_.at(static_cast<std::size_t>(entry)); }
  int col_of(int entry) const { return col_of_.at(static_cast<std::size_t>(entry)); }

  Partition shape() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Rows rows_;
  int n_ = 0;
  std::vector<int> row_of_;
  std::vector<int> col_of_;
};

inline StandardTableau validate_syt(StandardTableau::Rows rows) { return StandardTableau(std::move(rows)); }

/// A set of simple roots alpha_i, 1 <= i <= N-1, stored as sorted indices.
class TauSet {
 public:
  TauSet() = default;

  TauSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
    if (n < 1) throw error(errc::bad_tau, "N must be positive");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int i : indices_)
      if (i < 1 || i > n - 1)
        throw error(errc::bad_tau, "index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  /// True when every alpha_lo..alpha_hi lies in the set.
  bool contains_run(int lo, int hi) const {
    for (int k = lo; k <= hi; ++k)
      if (!contains(k)) return false;
    return true;
  }

  /// Maximal intervals [lo, hi] of consecutive indices.
  std::vector<std::pair<int, int>> runs() const {
    std::vector<std::pair<int, int>> out;
    for (int i : indices_) {
      if (!out.empty() && out.back().second + 1 == i)
        out.back().second = i;
      else
        out.emplace_back(i, i);
    }
    return out;
  }

  /// Every subset of {1..N-1}, ordered lexicographically by sorted index list.
  static std::vector<TauSet> all_subsets(int n) {
    std::vector<TauSet> out;
    int m = n - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) idx.push_back(i + 1);
      out.emplace_back(n, std::move(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < indices_.size(); ++k) os << (k ? "," : "") << indices_[k];
    os << '}';
    return os.str();
  }

  friend bool operator==(const TauSet&, const TauSet&) = default;
  friend auto operator<=>(const TauSet& a, const TauSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

 private:
  int n_ = 1;
  std::vector<int> indices_;
};

/// A consecutive interval {lo, ..., hi} of box labels.
struct Chain {
  int lo = 1;
  int hi = 1;

  int length() const noexcept { return hi - lo + 1; }
  bool contains(int k) const noexcept { return lo <= k && k <= hi; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// {i : box i lies in a strictly higher row than box i+1}.
inline TauSet tau_invariant(const StandardTableau& t) {
  std::vector<int> idx;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i) < t.row_of(i + 1)) idx.push_back(i);
  return TauSet(t.size(), std::move(idx));
}

/// Greedy top-heavy placement: box k goes to the topmost row that keeps the
/// tableau standard and realizes exactly the tau-relation between k-1 and k.
inline StandardTableau richardson_tableau(const TauSet& tau, int n) {
  if (tau.n() != n) throw error(errc::size_mismatch, "tau-set was built for a different N");
  StandardTableau::Rows rows;
  int prev_row = 0;  // 0-based row of box k-1
  for (int k = 1; k <= n; ++k) {
    bool below = k > 1 && tau.contains(k - 1);
    std::size_t r = below ? static_cast<std::size_t>(prev_row) + 1 : 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.emplace_back();
        break;
      }
      if (r == 0 || rows[r].size() < rows[r - 1].size()) break;
    }
    rows[r].push_back(k);
    prev_row = static_cast<int>(r);
  }
  return StandardTableau(std::move(rows));
}

inline bool is_richardson(const StandardTableau& t) {
  return richardson_tableau(tau_invariant(t), t.size()) == t;
}

/// The chains of a Richardson tableau: each starts at a first-row entry and
/// runs up to the next first-row entry.
inline std::vector<Chain> chains(const StandardTableau& tr) {
  if (!is_richardson(tr)) throw error(errc::not_richardson, "chains are defined for Richardson tableaux");
  const auto& first = tr.rows().front();
  std::vector<Chain> out;
  out.reserve(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    int hi = (k + 1 < first.size()) ? first[k + 1] - 1 : tr.size();
    out.push_back(Chain{first[k], hi});
  }
  return out;
}

/// Boxed text rendering. Zero entries render as empty boxes.
inline std::string render(const StandardTableau::Rows& rows) {
  int width = 1;
  for (const auto& r : rows)
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  auto rule = [&](std::size_t cells) {
    std::string s = "+";
    for (std::size_t c = 0; c < cells; ++c) s += std::string(static_cast<std::size_t>(width) + 2, '-') + "+";
    return s + "\n";
  };
  std::string out;
  std::size_t prev = 0;
  for (const auto& r : rows) {
    out += rule(std::max(prev, r.size()));
    out += "|";
    for (int v : r) {
      std::string cell = v ? std::to_string(v) : "";
      out += " " + std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell + " |";
    }
    out += "\n";
    prev = r.size();
  }
  if (!rows.empty()) out += rule(prev);
  return out;
}

inline std::string render(const StandardTableau& t) { return render(t.rows()); }

inline std::string rows_to_string(const StandardTableau::Rows& rows) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? "," : "") << rows[r][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

inline std::string to_string(const StandardTableau& t) { return rows_to_string(t.rows()); }

/// Every standard tableau with n boxes, in lexicographic order of rows.
inline std::vector<StandardTableau> all_standard_tableaux(int n) {
  std::vector<StandardTableau> out;
  StandardTableau::Rows rows;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      if (r == rows.size()) {
        rows.emplace_back(1, k);
        self(self, k + 1);
        rows.pop_back();
        break;
      }
      if (r == 0 || rows[r].size() < rows[r - 1].size()) {
        rows[r].push_back(k);
        self(self, k + 1);
        rows[r].pop_back();
      }
    }
  };
  if (n >= 1) rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbital
