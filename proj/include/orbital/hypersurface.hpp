#pragma once

// Hypersurface orbital varieties: tableaux obtained from a Richardson tableau
// by dropping the largest box of one chain down one row while keeping the
// tau-invariant, together with their sigma-set and thickness.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbital/error.hpp"
#include "orbital/tableau.hpp"

namespace orbital {

/// Classification data for one hypersurface tableau.
///
/// `tableau` is `richardson` with `dropped_box` moved from row `thickness` to
/// row `thickness + 1`. The sigma-set is {alpha_sigma_lo, ..., alpha_sigma_hi}
/// and the matrix window is [sigma_lo, dropped_box].
struct HypersurfaceDescriptor {
  StandardTableau tableau;
  StandardTableau richardson;
  int dropped_box = 0;
  Chain source_chain;  // C_t, holds dropped_box
  Chain prev_chain;    // C_s, previous chain of the same length
  int sigma_lo = 0;
  int sigma_hi = 0;
  int thickness = 0;

  int n() const noexcept { return tableau.size(); }
  std::pair<int, int> window() const noexcept { return {sigma_lo, dropped_box}; }
  int window_size() const noexcept { return dropped_box - sigma_lo + 1; }
  TauSet tau() const { return tau_invariant(tableau); }

  friend bool operator==(const HypersurfaceDescriptor&, const HypersurfaceDescriptor&) = default;
};

namespace detail {

// Moves box `box` from its row to the row below, keeping rows sorted.
// Returns nothing if the result is not standard.
inline std::optional<StandardTableau> drop_box(const StandardTableau& t, int box) {
  auto rows = t.rows();
  auto r = static_cast<std::size_t>(t.row_of(box) - 1);
  auto& src = rows[r];
  src.erase(std::find(src.begin(), src.end(), box));
  if (r + 1 == rows.size()) rows.emplace_back();
  auto& dst = rows[r + 1];
  dst.insert(std::upper_bound(dst.begin(), dst.end(), box), box);
  try {
    return StandardTableau(std::move(rows));
  } catch (const error&) {
    return std::nullopt;
  }
}

inline HypersurfaceDescriptor describe(const StandardTableau& t, const StandardTableau& tr,
                                       const std::vector<Chain>& cs, std::size_t source) {
  const Chain& ct = cs[source];
  int len = ct.length();
  std::optional<Chain> cprev;
  for (std::size_t s = source; s-- > 0;)
    if (cs[s].length() == len) {
      cprev = cs[s];
      break;
    }
  if (!cprev)
    throw error(errc::missing_chain, "no earlier chain of length " + std::to_string(len) + " in " + to_string(tr));
  return HypersurfaceDescriptor{t, tr, ct.hi, ct, *cprev, cprev->lo, ct.hi - 1, len};
}

}  // namespace detail

/// All tau-preserving one-row drops of the largest box of a chain.
inline std::vector<HypersurfaceDescriptor> hypersurface_descendants(const StandardTableau& tr) {
  auto cs = chains(tr);
  TauSet tau = tau_invariant(tr);
  int dim_r = variety_dim(tr.shape(), tr.size());
  std::vector<HypersurfaceDescriptor> out;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    auto t = detail::drop_box(tr, cs[k].hi);
    if (!t || tau_invariant(*t) != tau) continue;
    if (variety_dim(t->shape(), t->size()) != dim_r - 1) continue;
    out.push_back(detail::describe(*t, tr, cs, k));
  }
  return out;
}

/// Descriptor for t if it is a hypersurface tableau, otherwise nothing.
inline std::optional<HypersurfaceDescriptor> classify_hypersurface(const StandardTableau& t) {
  StandardTableau tr = richardson_tableau(tau_invariant(t), t.size());
  if (tr == t) return std::nullopt;
  std::optional<HypersurfaceDescriptor> found;
  for (auto& d : hypersurface_descendants(tr)) {
    if (d.tableau != t) continue;
    if (found) throw error(errc::ambiguous_classification, "several chains produce " + to_string(t));
    found = std::move(d);
  }
  return found;
}

/// Conditions for the sigma-set to be all of Pi when box N is dropped:
/// |C_1| = |C_last| = I and lambda_I = lambda_{I+1} + 2.
inline bool sigma_is_full(const StandardTableau& tr) {
  auto cs = chains(tr);
  if (cs.size() < 2)
    throw error(errc::not_applicable, "a single chain has no distinct first and last chain");
  Partition lambda = tr.shape();
  int len = cs.front().length();
  return len == cs.back().length() && lambda.part(len) == lambda.part(len + 1) + 2;
}

/// Descriptors for every tau in {1..N-1} ordered by tau, then dropped box.
inline std::vector<HypersurfaceDescriptor> all_hypersurface_descriptors(int n) {
  std::vector<HypersurfaceDescriptor> out;
  for (const auto& tau : TauSet::all_subsets(n)) {
    auto ds = hypersurface_descendants(richardson_tableau(tau, n));
    std::sort(ds.begin(), ds.end(), [](const auto& a, const auto& b) { return a.dropped_box < b.dropped_box; });
    for (auto& d : ds) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace orbital
