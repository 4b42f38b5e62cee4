#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "orbital/hypersurface.hpp"
#include "orbital/projections.hpp"

using namespace orbital;

namespace {

const StandardTableau::Rows kEx7{{1, 3, 4, 7, 9, 12}, {2, 5, 8, 10}, {6}, {11}};
const StandardTableau::Rows kEx7R{{1, 3, 4, 7, 9, 12}, {2, 5, 8, 10}, {6, 11}};

// Oracle: tableaux with the same tau, one dimension lower, that differ from
// tr by a single entry sitting exactly one row lower. No chain data is used.
std::set<StandardTableau> brute_force_descendants(const StandardTableau& tr) {
  int n = tr.size();
  TauSet tau = tau_invariant(tr);
  int dim = variety_dim(tr.shape(), n);
  std::set<StandardTableau> out;
  for (const auto& t : all_standard_tableaux(n)) {
    if (tau_invariant(t) != tau || variety_dim(t.shape(), n) != dim - 1) continue;
    int moved = 0, dropped = 0;
    for (int e = 1; e <= n; ++e)
      if (t.row_of(e) != tr.row_of(e)) {
        ++moved;
        if (t.row_of(e) == tr.row_of(e) + 1) ++dropped;
      }
    if (moved == 1 && dropped == 1) out.insert(t);
  }
  return out;
}

}  // namespace

TEST(Descendants, UniqueDescendantOfExampleTableau) {
  auto ds = hypersurface_descendants(validate_syt({{1, 2, 5, 6, 7}, {3, 8}, {4}}));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].tableau, validate_syt({{1, 2, 6, 7}, {3, 5, 8}, {4}}));
  EXPECT_EQ(variety_dim(ds[0].tableau.shape(), 8), 23);
}

TEST(Descendants, SingleRowHasNone) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(hypersurface_descendants(richardson_tableau(TauSet(n, {}), n)).empty());
}

TEST(Descendants, ContainsTheLargeExample) {
  auto ds = hypersurface_descendants(validate_syt(kEx7R));
  bool found = false;
  for (const auto& d : ds)
    if (d.tableau == validate_syt(kEx7)) found = d.dropped_box == 11;
  EXPECT_TRUE(found);
}

TEST(Descendants, RejectNonRichardson) {
  EXPECT_THROW(hypersurface_descendants(validate_syt(kEx7)), error);
}

TEST(Descendants, MatchBruteForceOracle) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& tau : TauSet::all_subsets(n)) {
      auto tr = richardson_tableau(tau, n);
      std::set<StandardTableau> got;
      for (const auto& d : hypersurface_descendants(tr)) got.insert(d.tableau);
      ASSERT_EQ(got, brute_force_descendants(tr)) << to_string(tr);
    }
}

TEST(Classify, SmallExample) {
  auto d = classify_hypersurface(validate_syt({{1, 2, 4}, {3, 5, 6}}));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->richardson, validate_syt({{1, 2, 4, 6}, {3, 5}}));
  EXPECT_EQ(d->dropped_box, 6);
  EXPECT_EQ(d->sigma_lo, 1);
  EXPECT_EQ(d->sigma_hi, 5);
  EXPECT_EQ(d->thickness, 1);
}

TEST(Classify, LargeExample) {
  auto d = classify_hypersurface(validate_syt(kEx7));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->dropped_box, 11);
  EXPECT_EQ(d->sigma_lo, 4);
  EXPECT_EQ(d->sigma_hi, 10);
  EXPECT_EQ(d->thickness, 3);
  EXPECT_EQ(d->window(), std::make_pair(4, 11));
  EXPECT_EQ(d->source_chain, (Chain{9, 11}));
  EXPECT_EQ(d->prev_chain, (Chain{4, 6}));
}

TEST(Classify, NonHypersurfaceTableaux) {
  EXPECT_FALSE(classify_hypersurface(validate_syt({{1, 2, 3, 4}})));
  // Two boxes away from its Richardson tableau.
  EXPECT_FALSE(classify_hypersurface(validate_syt({{1, 2}, {3}, {4}})));
}

TEST(SigmaIsFull, Examples) {
  EXPECT_TRUE(sigma_is_full(validate_syt({{1, 2, 4, 6}, {3, 5}})));
  EXPECT_FALSE(sigma_is_full(validate_syt({{1, 2, 5, 6, 7}, {3, 8}, {4}})));
  EXPECT_TRUE(sigma_is_full(validate_syt({{1, 3, 4}, {2, 5}})));
  EXPECT_THROW(sigma_is_full(validate_syt({{1}, {2}, {3}})), error);
}

TEST(SigmaIsFull, AgreesWithDescriptorsWhenBoxNDrops) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& tau : TauSet::all_subsets(n)) {
      auto tr = richardson_tableau(tau, n);
      for (const auto& d : hypersurface_descendants(tr))
        if (d.dropped_box == n) {
          EXPECT_EQ(sigma_is_full(tr), d.sigma_lo == 1) << to_string(tr);
        }
    }
}

TEST(Descriptors, StructuralInvariants) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : all_hypersurface_descriptors(n)) {
      SCOPED_TRACE(to_string(d.tableau));
      ASSERT_EQ(d.tau(), tau_invariant(d.richardson));
      EXPECT_EQ(variety_dim(d.tableau.shape(), n), variety_dim(d.richardson.shape(), n) - 1);
      EXPECT_TRUE(dominance_le(d.tableau.shape(), d.richardson.shape()));
      EXPECT_EQ(d.richardson.row_of(d.dropped_box), d.thickness);
      EXPECT_EQ(d.tableau.row_of(d.dropped_box), d.thickness + 1);
      EXPECT_EQ(d.source_chain.length(), d.thickness);
      EXPECT_EQ(d.prev_chain.length(), d.thickness);
      EXPECT_LT(d.prev_chain.hi, d.source_chain.lo);
      for (const auto& c : chains(d.richardson))
        if (c.lo > d.prev_chain.hi && c.hi < d.source_chain.lo) {
          EXPECT_NE(c.length(), d.thickness);
        }
      EXPECT_EQ(d.sigma_lo, d.prev_chain.lo);
      EXPECT_EQ(d.sigma_hi, d.dropped_box - 1);
    }
}

TEST(Descriptors, ClassificationRoundTrip) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : all_hypersurface_descriptors(n)) {
      auto back = classify_hypersurface(d.tableau);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, d);
    }
}

TEST(Descriptors, ProjectionHasFullSigma) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : all_hypersurface_descriptors(n)) {
      auto [i, j] = d.window();
      auto p = classify_hypersurface(project(d.tableau, i, j));
      ASSERT_TRUE(p) << to_string(d.tableau);
      EXPECT_EQ(p->sigma_lo, 1);
      EXPECT_EQ(p->dropped_box, j - i + 1);
      EXPECT_EQ(p->thickness, d.thickness);
    }
}

TEST(Descriptors, OrderedByTauThenDroppedBox) {
  auto ds = all_hypersurface_descriptors(6);
  for (std::size_t k = 1; k < ds.size(); ++k) {
    auto a = ds[k - 1].tau(), b = ds[k].tau();
    EXPECT_TRUE(a < b || (a == b && ds[k - 1].dropped_box < ds[k].dropped_box));
  }
}
