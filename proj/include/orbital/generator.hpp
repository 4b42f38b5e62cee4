#pragma once

// The generic Richardson matrix, top-right corner minors of its shifted
// window, the t-expansion coefficients m_j, the non-linear generator f and the
// characteristic polynomial of a hypersurface orbital variety.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/hypersurface.hpp"
#include "orbital/poly.hpp"
#include "orbital/projections.hpp"
#include "orbital/roots.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

/// Matrix window [lo, hi] in 1-based row/column indices.
struct Window {
  int lo = 1;
  int hi = 1;
  int size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

inline Window window_of(const HypersurfaceDescriptor& d) { return Window{d.sigma_lo, d.dropped_box}; }

/// N x N strictly upper-triangular matrix with x_{kl} in position (k, l),
/// zeroed exactly when alpha(k, l-1) lies in R+(tau).
inline PolyMatrix generic_richardson_matrix(const TauSet& tau, int n) {
  if (tau.n() != n) throw error(errc::size_mismatch, "tau-set was built for a different N");
  PolyMatrix m(n, n);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      if (!tau.contains_run(k, l - 1)) m.at(k, l) = MultiPoly::x(k, l);
  return m;
}

/// tau restricted to alpha_lo..alpha_{hi-1} and renumbered from 1.
inline TauSet restrict_tau(const TauSet& tau, Window w) {
  std::vector<int> idx;
  for (int i : tau.indices())
    if (i >= w.lo && i < w.hi) idx.push_back(i - w.lo + 1);
  return TauSet(w.size(), std::move(idx));
}

/// Top-right (size - thickness) square of (x_R + t id) restricted to the window.
inline PolyMatrix cmin_window(const TauSet& tau, int n, Window w, int thickness) {
  if (tau.n() != n) throw error(errc::size_mismatch, "tau-set was built for a different N");
  if (w.lo < 1 || w.hi <= w.lo || w.hi > n || thickness < 1 || w.size() - thickness < 1)
    throw error(errc::bad_window, "window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                                      "] with thickness " + std::to_string(thickness));
  int m = w.size() - thickness;
  PolyMatrix out(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      int gr = w.lo + r, gc = w.lo + thickness + c;
      if (gr == gc)
        out.at(r + 1, c + 1) = MultiPoly::t();
      else if (gr < gc && !tau.contains_run(gr, gc - 1))
        out.at(r + 1, c + 1) = MultiPoly::x(gr, gc);
    }
  return out;
}

/// l(lambda) = lambda_1 + ... + lambda_I - I.
inline int l_of(const Partition& lambda, int thickness) {
  int s = 0;
  for (int k = 1; k <= thickness; ++k) s += lambda.part(k);
  return s - thickness;
}

struct GeneratorReport {
  MultiPoly determinant;                         // det cMin_I((x_R + t id)_[a,b])
  std::vector<std::pair<int, MultiPoly>> m_sequence;  // (j, m_j) for j = I .. n'-I
  MultiPoly f;                                   // lowest-power t coefficient
  int l_lambda = 0;
  Partition window_shape;                        // shape of T_R projected to the window
  WeightVector weight;
  Window window;
  int thickness = 0;

  const MultiPoly& m(int j) const {
    for (const auto& [idx, p] : m_sequence)
      if (idx == j) return p;
    throw error(errc::bad_range, "m_" + std::to_string(j) + " outside the expansion");
  }
};

/// The coefficient of t^p in the expansion is m_{n'-I-p}.
inline std::vector<std::pair<int, MultiPoly>> m_expansion(const MultiPoly& det, int window_size, int thickness) {
  std::vector<std::pair<int, MultiPoly>> out;
  for (int j = thickness; j <= window_size - thickness; ++j)
    out.emplace_back(j, t_coefficient(det, window_size - thickness - j));
  return out;
}

inline GeneratorReport generator_report(const HypersurfaceDescriptor& d) {
  GeneratorReport rep;
  rep.window = window_of(d);
  rep.thickness = d.thickness;
  int ws = rep.window.size();
  rep.window_shape = project(d.richardson, rep.window.lo, rep.window.hi).shape();
  rep.l_lambda = l_of(rep.window_shape, d.thickness);

  rep.determinant = determinant(cmin_window(d.tau(), d.n(), rep.window, d.thickness));
  if (rep.determinant.is_zero()) throw error(errc::zero_polynomial, "corner determinant vanishes identically");
  rep.m_sequence = m_expansion(rep.determinant, ws, d.thickness);
  for (auto it = rep.m_sequence.rbegin(); it != rep.m_sequence.rend(); ++it)
    if (!it->second.is_zero()) {
      rep.f = it->second;
      break;
    }
  if (rep.l_lambda < d.thickness || rep.l_lambda > ws - d.thickness || rep.m(rep.l_lambda) != rep.f)
    throw error(errc::inconsistent_indexing,
                "lowest t-coefficient is not m_" + std::to_string(rep.l_lambda) + " for " + to_string(d.tableau));
  rep.weight = weight_of(rep.f, d.n());
  return rep;
}

struct ThresholdResult {
  int l_lambda = 0;
  std::vector<std::pair<int, bool>> checks;  // (j, m_j == 0)
  bool holds = true;                         // m_j == 0 exactly when j > l
};

inline ThresholdResult lemma2_threshold(const TauSet& tau, int n, Window w, int thickness) {
  PolyMatrix cm = cmin_window(tau, n, w, thickness);
  Partition lambda = richardson_tableau(restrict_tau(tau, w), w.size()).shape();
  ThresholdResult res;
  res.l_lambda = l_of(lambda, thickness);
  for (const auto& [j, mj] : m_expansion(determinant(cm), w.size(), thickness)) {
    res.checks.emplace_back(j, mj.is_zero());
    if (mj.is_zero() != (j > res.l_lambda)) res.holds = false;
  }
  return res;
}

/// Factor multiset of p_V: the roots of R+(tau) followed by wt(f).
struct CharPoly {
  std::vector<WeightVector> factors;

  std::size_t degree() const noexcept { return factors.size(); }

  /// Product of linear forms, e.g. "α1 α4 (α4 + α5)".
  std::string to_string() const {
    std::string s;
    for (const auto& w : factors) {
      if (!s.empty()) s += ' ';
      std::string form = w.to_string();
      bool single = form.find(' ') == std::string::npos;
      s += single ? form : "(" + form + ")";
    }
    return s.empty() ? "1" : s;
  }
};

inline CharPoly char_poly(const HypersurfaceDescriptor& d, const GeneratorReport& rep) {
  CharPoly cp;
  for (const auto& r : positive_roots(d.tau())) cp.factors.push_back(WeightVector::root(d.n(), r.lo, r.hi));
  cp.factors.push_back(rep.weight);
  return cp;
}

inline CharPoly char_poly(const HypersurfaceDescriptor& d) { return char_poly(d, generator_report(d)); }

}  // namespace orbital
