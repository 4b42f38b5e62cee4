#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients in the coordinates x_{ij} (1 <= i < j <= N) and a
// distinguished variable t, plus polynomial matrices and their determinants.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/field.hpp"
#include "orbital/roots.hpp"

namespace orbital {

using VarId = std::uint32_t;

/// The variable t sorts after every x_{ij}.
inline constexpr VarId t_var = 0xFFFFFFFFu;

constexpr VarId x_var(int i, int j) noexcept {
  return (static_cast<VarId>(i) << 16) | static_cast<VarId>(j);
}
constexpr bool is_t(VarId v) noexcept { return v == t_var; }
constexpr int var_row(VarId v) noexcept { return static_cast<int>(v >> 16); }
constexpr int var_col(VarId v) noexcept { return static_cast<int>(v & 0xFFFFu); }

inline std::string var_name(VarId v) {
  if (is_t(v)) return "t";
  int i = var_row(v), j = var_col(v);
  if (i < 10 && j < 10) return "x_{" + std::to_string(i) + std::to_string(j) + "}";
  return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

/// Key used in polynomial JSON: "i,j" or "t".
inline std::string var_key(VarId v) {
  return is_t(v) ? "t" : std::to_string(var_row(v)) + "," + std::to_string(var_col(v));
}

class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;

  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<Factor> merged;
    for (const auto& [v, e] : factors_) {
      if (!merged.empty() && merged.back().first == v)
        merged.back().second += e;
      else
        merged.emplace_back(v, e);
    }
    std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
    factors_ = std::move(merged);
  }

  static Monomial of(VarId v, int e = 1) { return Monomial({{v, e}}); }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_constant() const noexcept { return factors_.empty(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  int exponent(VarId v) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  Monomial without(VarId v) const {
    Monomial m;
    for (const auto& f : factors_)
      if (f.first != v) m.factors_.push_back(f);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        m.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        m.factors_.push_back(*j++);
      } else {
        m.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += ' ';
      s += var_name(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, largest first; x_{12} > x_{13} > ... > t.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
      if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
      if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return k < fa.size() && k == fb.size();
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, Integer(c));
  }
  explicit MultiPoly(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static MultiPoly variable(VarId v) { return term(Monomial::of(v), 1); }
  static MultiPoly x(int i, int j) { return variable(x_var(i, j)); }
  static MultiPoly t() { return variable(t_var); }
  static MultiPoly term(Monomial m, const Integer& c) {
    MultiPoly p;
    p.add_term(std::move(m), c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest total degree (t counted); -1 for the zero polynomial.
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& kv : terms_) d = std::max(d, kv.first.degree());
    return d;
  }

  int degree_in(VarId v) const noexcept {
    int d = 0;
    for (const auto& kv : terms_) d = std::max(d, kv.first.exponent(v));
    return d;
  }

  bool is_homogeneous() const noexcept {
    int d = -1;
    for (const auto& kv : terms_) {
      if (d >= 0 && kv.first.degree() != d) return false;
      d = kv.first.degree();
    }
    return true;
  }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& kv : terms_)
      for (const auto& f : kv.first.factors()) vs.insert(f.first);
    return vs;
  }

  /// Sum of the terms with v^e exactly, with v^e divided out.
  MultiPoly coefficient(VarId v, int e) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) == e) out.terms_.emplace(m.without(v), c);
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& kv : out.terms_) kv.second = -kv.second;
    return out;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Pretty form in graded lexicographic order, e.g. "x_{16} t^4 - x_{12} x_{26} t^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Integer a = c < 0 ? Integer(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      if (m.is_constant())
        os << a;
      else {
        if (a != 1) os << a << ' ';
        os << m.to_string();
      }
      first = false;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

/// True when p == q or p == -q.
inline bool equal_up_to_sign(const MultiPoly& p, const MultiPoly& q) { return p == q || p == -q; }

inline MultiPoly t_coefficient(const MultiPoly& p, int k) { return p.coefficient(t_var, k); }

/// Evaluation with values supplied by a callback.
template <class Field, class Lookup>
typename Field::value_type poly_eval_with(const MultiPoly& p, const Field& field, Lookup&& value_of) {
  auto sum = field.zero();
  for (const auto& [m, c] : p.terms()) {
    auto prod = field.from_integer(c);
    for (const auto& [v, e] : m.factors()) {
      auto x = value_of(v);
      for (int k = 0; k < e; ++k) prod = field.mul(prod, x);
    }
    sum = field.add(sum, prod);
  }
  return sum;
}

template <class Field>
typename Field::value_type poly_eval(const MultiPoly& p, const Field& field,
                                     const std::map<VarId, typename Field::value_type>& assignment) {
  return poly_eval_with(p, field, [&](VarId v) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw error(errc::missing_variable, var_name(v) + " has no value");
    return it->second;
  });
}

/// Evaluates at a strictly upper-triangular point: x_{ij} reads entry (i, j)
/// of x and t reads t_value.
template <class Field>
typename Field::value_type poly_eval_at(const MultiPoly& p, const FieldMatrix<Field>& x,
                                        typename Field::value_type t_value = {}) {
  return poly_eval_with(p, x.field(), [&](VarId v) {
    if (is_t(v)) return t_value;
    return x.at(var_row(v), var_col(v));
  });
}

/// Weight of p over alpha_1..alpha_{n-1}, with wt(x_{ij}) = alpha(i, j-1).
inline WeightVector weight_of(const MultiPoly& p, int n) {
  if (p.is_zero()) throw error(errc::zero_polynomial, "the zero polynomial has no weight");
  std::optional<WeightVector> common;
  for (const auto& [m, c] : p.terms()) {
    WeightVector w(n);
    for (const auto& [v, e] : m.factors()) {
      if (is_t(v)) throw error(errc::contains_t, "weight is defined on polynomials in x only");
      if (var_col(v) > n) throw error(errc::bad_range, var_name(v) + " exceeds rank");
      for (int k = var_row(v); k < var_col(v); ++k) w.add(k, e);
    }
    if (common && *common != w)
      throw error(errc::not_homogeneous_weight, m.to_string() + " has weight " + w.to_string() + ", expected " +
                                                    common->to_string());
    common = std::move(w);
  }
  return *common;
}

/// Rectangular matrix of polynomials; entries are 1-based.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static PolyMatrix identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  MultiPoly& at(int r, int c) { return data_[index(r, c)]; }
  const MultiPoly& at(int r, int c) const { return data_[index(r, c)]; }

  /// The nr x nc block whose top-left entry is (r0, c0).
  PolyMatrix block(int r0, int c0, int nr, int nc) const {
    if (r0 < 1 || c0 < 1 || nr < 0 || nc < 0 || r0 + nr - 1 > rows_ || c0 + nc - 1 > cols_)
      throw error(errc::bad_range, "block outside matrix");
    PolyMatrix out(nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) out.at(r + 1, c + 1) = at(r0 + r, c0 + c);
    return out;
  }

  /// The k x k block in the top right corner.
  PolyMatrix top_right(int k) const { return block(1, cols_ - k + 1, k, k); }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw error(errc::size_mismatch, "matrix product dimensions");
    PolyMatrix out(a.rows_, b.cols_);
    for (int r = 1; r <= a.rows_; ++r)
      for (int k = 1; k <= a.cols_; ++k) {
        const auto& x = a.at(r, k);
        if (x.is_zero()) continue;
        for (int c = 1; c <= b.cols_; ++c)
          if (!b.at(k, c).is_zero()) out.at(r, c) += x * b.at(k, c);
      }
    return out;
  }

  PolyMatrix power(int k) const {
    if (!is_square()) throw error(errc::not_square, "power of a non-square matrix");
    PolyMatrix out = identity(rows_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  template <class Field>
  FieldMatrix<Field> evaluate(const Field& field, const std::function<typename Field::value_type(VarId)>& value_of) const {
    FieldMatrix<Field> out(field, rows_, cols_);
    for (int r = 1; r <= rows_; ++r)
      for (int c = 1; c <= cols_; ++c) out.at(r, c) = poly_eval_with(at(r, c), field, value_of);
    return out;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int r = 1; r <= rows_; ++r) {
      os << "[ ";
      for (int c = 1; c <= cols_; ++c) os << (c > 1 ? ", " : "") << at(r, c).to_string();
      os << " ]\n";
    }
    return os.str();
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw error(errc::bad_range, "matrix index");
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c - 1);
  }

  int rows_;
  int cols_;
  std::vector<MultiPoly> data_;
};

/// Exact symbolic determinant by Laplace expansion, memoized on the set of
/// remaining columns. Rows are consumed sparsest first; the row permutation's
/// sign is applied at the end.
inline MultiPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw error(errc::not_square, "determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  if (n > 31) throw error(errc::bad_range, "determinant limited to 31x31");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<int> nnz(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    order[static_cast<std::size_t>(r)] = r;
    for (int c = 1; c <= n; ++c) nnz[static_cast<std::size_t>(r)] += m.at(r + 1, c).is_zero() ? 0 : 1;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return nnz[static_cast<std::size_t>(a)] < nnz[static_cast<std::size_t>(b)];
  });
  int inversions = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (order[static_cast<std::size_t>(a)] > order[static_cast<std::size_t>(b)]) ++inversions;

  std::unordered_map<std::uint32_t, MultiPoly> memo;
  auto minor = [&](auto&& self, std::uint32_t cols) -> MultiPoly {
    int k = n - std::popcount(cols);
    if (k == n) return 1;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    int row = order[static_cast<std::size_t>(k)] + 1;
    MultiPoly sum;
    int idx = 0;
    for (int c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const MultiPoly& e = m.at(row, c + 1);
      if (!e.is_zero()) {
        MultiPoly sub = self(self, cols & ~(1u << c));
        if (!sub.is_zero()) {
          MultiPoly prod = e * sub;
          if (idx % 2)
            sum -= prod;
          else
            sum += prod;
        }
      }
      ++idx;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  std::uint32_t all = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1u);
  MultiPoly det = minor(minor, all);
  return inversions % 2 ? -det : det;
}

}  // namespace orbital
