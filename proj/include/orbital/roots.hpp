#pragma once

// Positive roots alpha(i,j) = alpha_i + ... + alpha_j of type A_{N-1} and
// integer weight vectors over the simple roots.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

/// Integer coefficients over alpha_1..alpha_{N-1}; coeffs[0] is alpha_1.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(int n) : coeffs_(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0) {}
  explicit WeightVector(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The positive root alpha(lo, hi) for the ambient rank n.
  static WeightVector root(int n, int lo, int hi) {
    if (lo < 1 || hi < lo || hi > n - 1)
      throw error(errc::bad_range, "root alpha(" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    WeightVector w(n);
    for (int k = lo; k <= hi; ++k) w.coeffs_[static_cast<std::size_t>(k - 1)] = 1;
    return w;
  }

  const std::vector<long>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  long operator[](std::size_t k) const { return coeffs_.at(k); }

  // 1-based accessor matching alpha_i.
  long coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  void add(int i, long v) { coeffs_.at(static_cast<std::size_t>(i - 1)) += v; }

  WeightVector& operator+=(const WeightVector& o) {
    if (o.size() != size()) throw error(errc::size_mismatch, "weight vectors of different rank");
    for (std::size_t k = 0; k < size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.coeffs_ <=> b.coeffs_; }

  /// Linear form in the simple roots, e.g. "α4 + 2α5 + α6".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      long c = coeffs_[k];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      long a = c < 0 ? -c : c;
      if (a != 1) os << a;
      os << "α" << (k + 1);
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  std::vector<long> coeffs_;
};

/// A positive root alpha(lo, hi).
struct Root {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// R+(tau): the positive roots that are sums of simple roots in tau, ordered by (lo, hi).
inline std::vector<Root> positive_roots(const TauSet& tau) {
  std::vector<Root> out;
  for (auto [lo, hi] : tau.runs())
    for (int a = lo; a <= hi; ++a)
      for (int b = a; b <= hi; ++b) out.push_back(Root{a, b});
  std::sort(out.begin(), out.end());
  return out;
}

inline int num_positive_roots(int n) { return n * (n - 1) / 2; }

}  // namespace orbital
