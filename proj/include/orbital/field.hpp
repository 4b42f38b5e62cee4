#pragma once

// Exact scalar fields (prime fields and the rationals) and dense matrices over
// them: products, powers, rank and inverses.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"

namespace orbital {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultPrime = 2147483647;    // 2^31 - 1
inline constexpr std::uint64_t kSecondaryPrime = 2147483629;  // 2^31 - 19

/// Z/pZ for a prime p < 2^32, values stored reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw error(errc::bad_range, "prime must lie in [2, 2^32)");
  }

  std::uint64_t prime() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type add(value_type a, value_type b) const noexcept { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const noexcept { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const noexcept { return a ? p_ - a : 0; }
  value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type pow(value_type a, std::uint64_t e) const noexcept {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  value_type inv(value_type a) const {
    if (a == 0) throw error(errc::not_invertible, "division by zero in prime field");
    return pow(a, p_ - 2);
  }

  value_type from_integer(const Integer& z) const {
    Integer r = z % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type from_int(long long z) const {
    long long r = z % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p_) : r);
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<value_type>(0, p_ - 1)(rng);
  }

  template <class Rng>
  value_type random_nonzero(Rng& rng) const {
    return std::uniform_int_distribution<value_type>(1, p_ - 1)(rng);
  }

  /// Representative in (-p/2, p/2], for readable output.
  long long signed_value(value_type a) const noexcept {
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_) : static_cast<long long>(a);
  }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw error(errc::not_invertible, "division by zero");
    return 1 / a;
  }
  value_type from_integer(const Integer& z) const { return value_type(z); }
  value_type from_int(long long z) const { return value_type(z); }
};

/// Dense row-major matrix over a field. Windows and entries are 1-based.
template <class Field>
class FieldMatrix {
 public:
  using value_type = typename Field::value_type;

  FieldMatrix(Field field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field_.zero()) {}

  static FieldMatrix identity(Field field, int n) {
    FieldMatrix m(std::move(field), n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  const Field& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  value_type& at(int r, int c) { return data_[index(r, c)]; }
  const value_type& at(int r, int c) const { return data_[index(r, c)]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  bool is_strictly_upper() const {
    for (int r = 1; r <= rows_; ++r)
      for (int c = 1; c <= std::min(r, cols_); ++c)
        if (!field_.is_zero(at(r, c))) return false;
    return true;
  }

  /// Rows and columns lo..hi (the projection pi_{lo,hi}).
  FieldMatrix window(int lo, int hi) const {
    if (lo < 1 || hi < lo || hi > rows_ || hi > cols_) throw error(errc::bad_range, "matrix window");
    int k = hi - lo + 1;
    FieldMatrix out(field_, k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) out.at(r + 1, c + 1) = at(lo + r, lo + c);
    return out;
  }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) throw error(errc::size_mismatch, "matrix product dimensions");
    const Field& f = a.field_;
    FieldMatrix out(f, a.rows_, b.cols_);
    for (int r = 1; r <= a.rows_; ++r)
      for (int k = 1; k <= a.cols_; ++k) {
        const auto& x = a.at(r, k);
        if (f.is_zero(x)) continue;
        for (int c = 1; c <= b.cols_; ++c) out.at(r, c) = f.add(out.at(r, c), f.mul(x, b.at(k, c)));
      }
    return out;
  }

  FieldMatrix power(int k) const {
    if (rows_ != cols_) throw error(errc::not_square, "power of a non-square matrix");
    FieldMatrix out = identity(field_, rows_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  int rank() const {
    FieldMatrix m = *this;
    const Field& f = field_;
    int rank = 0;
    for (int c = 1; c <= cols_ && rank < rows_; ++c) {
      int piv = 0;
      for (int r = rank + 1; r <= rows_; ++r)
        if (!f.is_zero(m.at(r, c))) {
          piv = r;
          break;
        }
      if (!piv) continue;
      ++rank;
      if (piv != rank)
        for (int cc = 1; cc <= cols_; ++cc) std::swap(m.at(piv, cc), m.at(rank, cc));
      auto inv = f.inv(m.at(rank, c));
      for (int r = rank + 1; r <= rows_; ++r) {
        if (f.is_zero(m.at(r, c))) continue;
        auto factor = f.mul(m.at(r, c), inv);
        for (int cc = c; cc <= cols_; ++cc) m.at(r, cc) = f.sub(m.at(r, cc), f.mul(factor, m.at(rank, cc)));
      }
    }
    return rank;
  }

  value_type determinant() const {
    if (rows_ != cols_) throw error(errc::not_square, "determinant of a non-square matrix");
    FieldMatrix m = *this;
    const Field& f = field_;
    value_type det = f.one();
    for (int c = 1; c <= cols_; ++c) {
      int piv = 0;
      for (int r = c; r <= rows_; ++r)
        if (!f.is_zero(m.at(r, c))) {
          piv = r;
          break;
        }
      if (!piv) return f.zero();
      if (piv != c) {
        for (int cc = 1; cc <= cols_; ++cc) std::swap(m.at(piv, cc), m.at(c, cc));
        det = f.neg(det);
      }
      det = f.mul(det, m.at(c, c));
      auto inv = f.inv(m.at(c, c));
      for (int r = c + 1; r <= rows_; ++r) {
        if (f.is_zero(m.at(r, c))) continue;
        auto factor = f.mul(m.at(r, c), inv);
        for (int cc = c; cc <= cols_; ++cc) m.at(r, cc) = f.sub(m.at(r, cc), f.mul(factor, m.at(c, cc)));
      }
    }
    return det;
  }

  /// Inverse of an upper-triangular matrix with nonzero diagonal.
  FieldMatrix upper_triangular_inverse() const {
    if (rows_ != cols_) throw error(errc::not_square, "inverse of a non-square matrix");
    const Field& f = field_;
    int n = rows_;
    FieldMatrix inv(f, n, n);
    for (int c = 1; c <= n; ++c) {
      // Solve U * col = e_c by back substitution.
      for (int r = n; r >= 1; --r) {
        auto s = (r == c) ? f.one() : f.zero();
        for (int k = r + 1; k <= n; ++k) s = f.sub(s, f.mul(at(r, k), inv.at(k, c)));
        inv.at(r, c) = f.mul(s, f.inv(at(r, r)));
      }
    }
    return inv;
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw error(errc::bad_range, "matrix index");
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c - 1);
  }

  Field field_;
  int rows_;
  int cols_;
  std::vector<value_type> data_;
};

using ModMatrix = FieldMatrix<PrimeField>;

}  // namespace orbital
