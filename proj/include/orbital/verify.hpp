#pragma once

// Numerical checks over prime fields: power-rank conditions, Jordan types,
// random points of orbital varieties and of the hypersurface {f = 0} inside
// the Richardson nilradical, and the harness that aggregates them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/field.hpp"
#include "orbital/generator.hpp"
#include "orbital/hypersurface.hpp"
#include "orbital/poly.hpp"
#include "orbital/projections.hpp"
#include "orbital/rs.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

/// Number of boxes of the diagram of lambda strictly right of column k; this
/// is rank(x^k) for x with Jordan type lambda.
inline int rank_bound(const Partition& lambda, int k) {
  int r = 0;
  for (int p : lambda.parts()) r += std::max(0, p - k);
  return r;
}

template <class Field>
Partition jordan_type(const FieldMatrix<Field>& x) {
  if (x.rows() != x.cols()) throw error(errc::not_square, "Jordan type of a non-square matrix");
  int n = x.rows();
  std::vector<int> cols;
  int prev = n;
  FieldMatrix<Field> p = x;
  for (int k = 1; prev > 0; ++k) {
    if (k > n) throw error(errc::not_nilpotent, "x^N is nonzero");
    int r = p.rank();
    cols.push_back(prev - r);
    prev = r;
    if (r > 0) p = p * x;
  }
  return dual_partition(Partition(std::move(cols)));
}

struct PowerRankViolation {
  int i = 0;
  int j = 0;
  int k = 0;
  int rank = 0;
  int bound = 0;
  friend bool operator==(const PowerRankViolation&, const PowerRankViolation&) = default;
};

/// Shapes D_T^[i,j] for every window, indexed by (i, j).
class PowerRankTable {
 public:
  explicit PowerRankTable(const StandardTableau& t) : n_(t.size()) {
    shapes_.resize(static_cast<std::size_t>(n_ * n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j) shapes_[slot(i, j)] = projected_shape(t, i, j);
  }

  int n() const noexcept { return n_; }
  const Partition& shape(int i, int j) const { return shapes_[slot(i, j)]; }

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<Partition> shapes_;
};

/// Every (i, j, k) with rank((x_[i,j])^k) > rank_bound(D_T^[i,j], k).
template <class Field>
std::vector<PowerRankViolation> check_power_rank(const FieldMatrix<Field>& x, const PowerRankTable& table) {
  if (x.rows() != table.n() || x.cols() != table.n())
    throw error(errc::size_mismatch, "matrix size differs from tableau size");
  std::vector<PowerRankViolation> out;
  for (int i = 1; i <= table.n(); ++i)
    for (int j = i; j <= table.n(); ++j) {
      auto sub = x.window(i, j);
      auto p = sub;
      for (int k = 1; k <= j - i + 1; ++k) {
        int r = p.rank();
        int b = rank_bound(table.shape(i, j), k);
        if (r > b) out.push_back(PowerRankViolation{i, j, k, r, b});
        if (r == 0) break;
        p = p * sub;
      }
    }
  return out;
}

template <class Field>
std::vector<PowerRankViolation> check_power_rank(const FieldMatrix<Field>& x, const StandardTableau& t) {
  return check_power_rank(x, PowerRankTable(t));
}

/// Deterministic generator for a (seed, prime, stream) triple.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t prime, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(prime), stream};
  return std::mt19937_64(seq);
}

enum : std::uint32_t {
  kStreamVariety = 1,
  kStreamRichardson = 2,
  kStreamHypersurface = 3,
  kStreamEvaluation = 4,
};

/// b u b^{-1} with u generic in span{E_ij : i < j, w(i) < w(j)} and b a
/// generic invertible upper-triangular matrix.
inline ModMatrix sample_bruhat_point(const Permutation& w, std::uint64_t seed, const PrimeField& field) {
  auto rng = make_rng(seed, field.prime(), kStreamVariety);
  int n = w.size();
  ModMatrix u(field, n, n), b(field, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) < w(j)) u.at(i, j) = field.random_nonzero(rng);
  for (int i = 1; i <= n; ++i) {
    b.at(i, i) = field.random_nonzero(rng);
    for (int j = i + 1; j <= n; ++j) b.at(i, j) = field.random(rng);
  }
  return b * u * b.upper_triangular_inverse();
}

inline ModMatrix sample_variety_point(const StandardTableau& t, std::uint64_t seed, const PrimeField& field,
                                      int bound = 8) {
  return sample_bruhat_point(find_word_for_tableau(t, bound), seed, field);
}

/// Generic point of the nilradical m_tau: every free coordinate random nonzero.
inline ModMatrix sample_richardson_point(const TauSet& tau, std::uint64_t seed, const PrimeField& field,
                                         std::uint32_t stream = kStreamRichardson) {
  auto rng = make_rng(seed, field.prime(), stream);
  int n = tau.n();
  ModMatrix x(field, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!tau.contains_run(i, j - 1)) x.at(i, j) = field.random_nonzero(rng);
  return x;
}

inline constexpr int kMaxResample = 50;

/// Generic point of m_tau on {f = 0}: one coordinate of f, chosen with a
/// nonzero linear coefficient at the sampled values, is solved for.
inline ModMatrix sample_hypersurface_point(const HypersurfaceDescriptor& d, const MultiPoly& f, std::uint64_t seed,
                                           const PrimeField& field) {
  TauSet tau = d.tau();
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    ModMatrix x = sample_richardson_point(tau, seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull,
                                          field, kStreamHypersurface);
    for (VarId v : f.variables()) {
      if (f.degree_in(v) != 1) continue;
      auto c = poly_eval_at(f.coefficient(v, 1), x);
      if (field.is_zero(c)) continue;
      auto rest = poly_eval_at(f.coefficient(v, 0), x);
      x.at(var_row(v), var_col(v)) = field.mul(field.neg(rest), field.inv(c));
      return x;
    }
  }
  throw error(errc::degenerate_sample, "every linear coefficient of f vanished in " + std::to_string(kMaxResample) +
                                           " draws");
}

inline ModMatrix sample_hypersurface_point(const HypersurfaceDescriptor& d, std::uint64_t seed,
                                           const PrimeField& field) {
  return sample_hypersurface_point(d, generator_report(d).f, seed, field);
}

/// True when every coordinate x_{st} with alpha(s, t-1) in R+(tau) vanishes.
inline bool tau_coordinates_vanish(const ModMatrix& x, const TauSet& tau) {
  for (const auto& r : positive_roots(tau))
    if (!x.field().is_zero(x.at(r.lo, r.hi + 1))) return false;
  return true;
}

struct ProbeFailure {
  std::string probe;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::string detail;
};

struct VerificationReport {
  std::string id;
  int trials = 0;
  int f_vanishes_on_V = 0;
  int f_nonzero_on_richardson = 0;
  int jordan_match = 0;
  int power_rank_ok = 0;
  std::vector<ProbeFailure> failures;

  bool necessity_ok() const noexcept { return f_vanishes_on_V == trials; }
  /// Generic probes pass when at least `fraction` of trials succeed.
  bool generic_ok(double fraction = 0.9) const noexcept {
    double need = fraction * trials;
    return f_nonzero_on_richardson >= need && jordan_match >= need && power_rank_ok >= need;
  }
};

inline std::string descriptor_id(const HypersurfaceDescriptor& d) {
  return "N=" + std::to_string(d.n()) + " tau=" + d.tau().to_string() + " drop=" + std::to_string(d.dropped_box);
}

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes{kDefaultPrime, kSecondaryPrime};
  int bound = 8;
};

/// Runs the necessity, non-degeneracy and sufficiency probes `trials` times
/// under each prime. A trial counts only when it passes under every prime.
inline VerificationReport verify_conjecture(const HypersurfaceDescriptor& d, const MultiPoly& f,
                                            const VerifyOptions& opt) {
  VerificationReport rep;
  rep.id = descriptor_id(d);
  rep.trials = opt.trials;
  TauSet tau = d.tau();
  Permutation w = find_word_for_tableau(d.tableau, opt.bound);
  PowerRankTable table(d.tableau);
  Partition shape = d.tableau.shape();

  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(trial);
    bool nec = true, nondeg = true, jordan = true, power = true;
    for (std::uint64_t p : opt.primes) {
      PrimeField field(p);
      auto fail = [&](const char* probe, std::string detail) {
        rep.failures.push_back(ProbeFailure{probe, seed, p, std::move(detail)});
      };

      ModMatrix xv = sample_bruhat_point(w, seed, field);
      if (!tau_coordinates_vanish(xv, tau)) {
        nec = false;
        fail("necessity", "a tau-linear coordinate is nonzero");
      } else if (!field.is_zero(poly_eval_at(f, xv))) {
        nec = false;
        fail("necessity", "f does not vanish");
      }

      ModMatrix xr = sample_richardson_point(tau, seed, field);
      if (field.is_zero(poly_eval_at(f, xr))) {
        nondeg = false;
        fail("nondegeneracy", "f vanishes at a random Richardson point");
      }

      ModMatrix xh = sample_hypersurface_point(d, f, seed, field);
      Partition jt = jordan_type(xh);
      if (jt != shape) {
        jordan = false;
        fail("jordan", "Jordan type " + jt.to_string() + " != " + shape.to_string());
      }
      if (auto v = check_power_rank(xh, table); !v.empty()) {
        power = false;
        fail("power_rank", "violation at (" + std::to_string(v[0].i) + "," + std::to_string(v[0].j) + "," +
                               std::to_string(v[0].k) + ")");
      }
    }
    rep.f_vanishes_on_V += nec;
    rep.f_nonzero_on_richardson += nondeg;
    rep.jordan_match += jordan;
    rep.power_rank_ok += power;
  }
  return rep;
}

inline VerificationReport verify_conjecture(const HypersurfaceDescriptor& d, const VerifyOptions& opt) {
  return verify_conjecture(d, generator_report(d).f, opt);
}

struct RemarkResult {
  bool detM_equals_f = false;
  bool chain_condition = false;
  int power = 0;       // k: x_R^k
  int minor_size = 0;  // r
  MultiPoly detM;
  int sign = 0;                  // det M = sign * f when detM_equals_f
  bool f_divides_detM = false;   // det M vanishes wherever f does (sampled)
};

/// The corner r x r minor M of x_R^k over the descriptor's window, where k is
/// one less than the column of the dropped box in the projected Richardson
/// tableau and r = rank(x_R^k).
inline PolyMatrix remark_minor(const HypersurfaceDescriptor& d, int* power = nullptr, int* size = nullptr) {
  Window w = window_of(d);
  StandardTableau tr = project(d.richardson, w.lo, w.hi);
  int k = tr.col_of(tr.size()) - 1;
  int r = rank_bound(tr.shape(), k);
  if (power) *power = k;
  if (size) *size = r;
  PolyMatrix xr = generic_richardson_matrix(d.tau(), d.n()).block(w.lo, w.lo, w.size(), w.size());
  return xr.power(k).top_right(r);
}

/// Interior chains of the projected Richardson tableau all shorter, or all
/// longer, than the thickness.
inline bool remark_chain_condition(const HypersurfaceDescriptor& d) {
  Window w = window_of(d);
  auto cs = chains(project(d.richardson, w.lo, w.hi));
  bool shorter = false, longer = false;
  for (std::size_t k = 1; k + 1 < cs.size(); ++k) {
    if (cs[k].length() < d.thickness) shorter = true;
    if (cs[k].length() > d.thickness) longer = true;
  }
  return !(shorter && longer);
}

inline constexpr int kRemarkEvaluations = 20;

inline RemarkResult remark_check(const HypersurfaceDescriptor& d, const MultiPoly& f, std::uint64_t seed = 0,
                                 const PrimeField& field = PrimeField{}) {
  RemarkResult res;
  res.detM = determinant(remark_minor(d, &res.power, &res.minor_size));
  res.chain_condition = remark_chain_condition(d);

  bool same_shape = !res.detM.is_zero() && res.detM.total_degree() == f.total_degree() &&
                    weight_of(res.detM, d.n()) == weight_of(f, d.n());
  if (same_shape) {
    auto rng = make_rng(seed, field.prime(), kStreamEvaluation);
    int sign = 0;
    bool ok = true;
    for (int e = 0; e < kRemarkEvaluations && ok; ++e) {
      std::map<VarId, PrimeField::value_type> pt;
      for (VarId v : res.detM.variables()) pt[v] = field.random(rng);
      for (VarId v : f.variables()) pt.try_emplace(v, field.random(rng));
      auto a = poly_eval(res.detM, field, pt);
      auto b = poly_eval(f, field, pt);
      int s = (a == b) ? 1 : (a == field.neg(b) ? -1 : 0);
      if (field.is_zero(a) && field.is_zero(b)) continue;
      if (s == 0 || (sign != 0 && s != sign)) ok = false;
      if (s != 0 && sign == 0) sign = s;
    }
    res.detM_equals_f = ok && sign != 0;
    res.sign = res.detM_equals_f ? sign : 0;
  }

  res.f_divides_detM = true;
  for (int e = 0; e < kRemarkEvaluations; ++e) {
    ModMatrix z = sample_hypersurface_point(d, f, seed + static_cast<std::uint64_t>(e), field);
    if (!field.is_zero(poly_eval_at(res.detM, z))) {
      res.f_divides_detM = false;
      break;
    }
  }
  return res;
}

inline RemarkResult remark_check(const HypersurfaceDescriptor& d) { return remark_check(d, generator_report(d).f); }

}  // namespace orbital
