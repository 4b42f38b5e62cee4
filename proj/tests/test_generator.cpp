#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "orbital/generator.hpp"

using namespace orbital;

namespace {

MultiPoly x(int i, int j) { return MultiPoly::x(i, j); }
const MultiPoly kT = MultiPoly::t();

MultiPoly example_g() {
  return x(1, 2) * x(2, 4) * x(4, 6) + x(1, 2) * x(2, 5) * x(5, 6) + x(1, 3) * x(3, 4) * x(4, 6) +
         x(1, 3) * x(3, 5) * x(5, 6);
}

HypersurfaceDescriptor descriptor(const StandardTableau::Rows& rows) {
  auto d = classify_hypersurface(validate_syt(rows));
  if (!d) throw std::logic_error("not a hypersurface tableau");
  return *d;
}

const StandardTableau::Rows kEx8{{1, 2, 4}, {3, 5, 6}};
const StandardTableau::Rows kEx11{{1, 3, 4}, {2}, {5}};
const StandardTableau::Rows kEx7{{1, 3, 4, 7, 9, 12}, {2, 5, 8, 10}, {6}, {11}};

// sum_{k<I} alpha(i+k, j-1-k) as a weight vector.
WeightVector nested_roots(int n, int i, int j, int thickness) {
  WeightVector w(n);
  for (int k = 0; k < thickness; ++k) w += WeightVector::root(n, i + k, j - 1 - k);
  return w;
}

}  // namespace

TEST(GenericRichardsonMatrix, Examples) {
  auto m = generic_richardson_matrix(TauSet(3, {}), 3);
  EXPECT_EQ(m.at(1, 2), x(1, 2));
  EXPECT_EQ(m.at(1, 3), x(1, 3));
  EXPECT_EQ(m.at(2, 3), x(2, 3));
  EXPECT_TRUE(m.at(2, 1).is_zero());

  auto m5 = generic_richardson_matrix(TauSet(5, {1, 4}), 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      bool zero = (i == 1 && j == 2) || (i == 4 && j == 5);
      EXPECT_EQ(m5.at(i, j).is_zero(), zero) << i << j;
    }

  auto m12 = generic_richardson_matrix(TauSet(12, {1, 4, 5, 7, 9, 10}), 12);
  EXPECT_TRUE(m12.at(7, 8).is_zero());
  EXPECT_EQ(m12.at(7, 9), x(7, 9));
  EXPECT_TRUE(m12.at(4, 6).is_zero());
  EXPECT_TRUE(m12.at(9, 11).is_zero());
}

TEST(CminWindow, ThreeByThreeCorner) {
  auto c = cmin_window(TauSet(5, {1, 4}), 5, Window{1, 5}, 2);
  ASSERT_EQ(c.rows(), 3);
  PolyMatrix want(3, 3);
  want.at(1, 1) = x(1, 3), want.at(1, 2) = x(1, 4), want.at(1, 3) = x(1, 5);
  want.at(2, 1) = x(2, 3), want.at(2, 2) = x(2, 4), want.at(2, 3) = x(2, 5);
  want.at(3, 1) = kT, want.at(3, 2) = x(3, 4), want.at(3, 3) = x(3, 5);
  EXPECT_EQ(c, want);
}

TEST(CminWindow, FiveByFiveCorners) {
  auto c10 = cmin_window(TauSet(6, {2, 4}), 6, Window{1, 6}, 1);
  PolyMatrix want(5, 5);
  for (int r = 1; r <= 5; ++r)
    for (int col = 2; col <= 6; ++col) {
      if (col == r) want.at(r, col - 1) = kT;
      else if (r < col && !((r == 2 && col == 3) || (r == 4 && col == 5))) want.at(r, col - 1) = x(r, col);
    }
  EXPECT_EQ(c10, want);

  auto c12 = cmin_window(TauSet(12, {1, 4, 5, 7, 9, 10}), 12, Window{4, 11}, 3);
  ASSERT_EQ(c12.rows(), 5);
  EXPECT_EQ(c12.at(4, 1), kT);
  EXPECT_EQ(c12.at(5, 2), kT);
  EXPECT_EQ(c12.at(1, 1), x(4, 7));
  EXPECT_EQ(c12.at(1, 5), x(4, 11));
  EXPECT_TRUE(c12.at(4, 2).is_zero());  // x78
  EXPECT_EQ(c12.at(4, 3), x(7, 9));
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c)
      if (!((r == 4 && c == 1) || (r == 5 && c == 2))) {
        EXPECT_NE(c12.at(r, c), kT);
      }
}

TEST(CminWindow, RejectsBadWindows) {
  TauSet tau(5, {1});
  EXPECT_THROW(cmin_window(tau, 5, Window{3, 3}, 1), error);
  EXPECT_THROW(cmin_window(tau, 5, Window{0, 4}, 1), error);
  EXPECT_THROW(cmin_window(tau, 5, Window{1, 6}, 1), error);
  EXPECT_THROW(cmin_window(tau, 5, Window{1, 4}, 4), error);
  EXPECT_NO_THROW(cmin_window(tau, 5, Window{1, 2}, 1));
}

TEST(Determinant, SixBySixExpansion) {
  MultiPoly det = determinant(cmin_window(TauSet(6, {2, 4}), 6, Window{1, 6}, 1));
  MultiPoly want = x(1, 6) * kT * kT * kT * kT -
                   (x(1, 2) * x(2, 6) + x(1, 3) * x(3, 6) + x(1, 4) * x(4, 6) + x(1, 5) * x(5, 6)) * kT * kT * kT +
                   example_g() * kT * kT;
  EXPECT_TRUE(equal_up_to_sign(det, want)) << det.to_string();
  EXPECT_TRUE(equal_up_to_sign(t_coefficient(det, 4), x(1, 6)));
  EXPECT_TRUE(t_coefficient(det, 0).is_zero());
  EXPECT_TRUE(t_coefficient(det, 1).is_zero());
}

TEST(GeneratorReport, SmallExample) {
  auto rep = generator_report(descriptor(kEx8));
  EXPECT_TRUE(equal_up_to_sign(rep.f, example_g())) << rep.f.to_string();
  EXPECT_EQ(rep.l_lambda, 3);
  EXPECT_EQ(rep.window_shape, Partition({4, 2}));
  EXPECT_TRUE(equal_up_to_sign(rep.m(1), x(1, 6)));
  EXPECT_TRUE(rep.m(4).is_zero());
  EXPECT_TRUE(rep.m(5).is_zero());
  EXPECT_EQ(rep.weight, WeightVector({1, 1, 1, 1, 1}));
}

TEST(GeneratorReport, ThicknessTwo) {
  auto d = descriptor(kEx11);
  EXPECT_EQ(d.thickness, 2);
  EXPECT_EQ(d.window(), std::make_pair(1, 5));
  auto rep = generator_report(d);
  MultiPoly m3 = determinant(cmin_window(TauSet(5, {1, 4}), 5, Window{1, 5}, 2)).coefficient(t_var, 0);
  MultiPoly m2 = x(1, 4) * x(2, 5) - x(1, 5) * x(2, 4);
  EXPECT_EQ(rep.m_sequence.size(), 2u);
  EXPECT_TRUE(equal_up_to_sign(rep.m(2), m2)) << rep.m(2).to_string();
  EXPECT_EQ(rep.f, m3);
  EXPECT_EQ(rep.f, rep.m(3));
  EXPECT_EQ(rep.l_lambda, 3);
  // The 3x3 determinant at t = 0, expanded by hand along the last row.
  MultiPoly hand = x(3, 4) * (x(1, 5) * x(2, 3) - x(1, 3) * x(2, 5)) +
                   x(3, 5) * (x(1, 3) * x(2, 4) - x(1, 4) * x(2, 3));
  EXPECT_TRUE(equal_up_to_sign(rep.f, hand));
}

TEST(GeneratorReport, LargeExample) {
  auto d = descriptor(kEx7);
  auto rep = generator_report(d);
  EXPECT_EQ(rep.window, (Window{4, 11}));
  EXPECT_EQ(rep.thickness, 3);
  EXPECT_EQ(rep.l_lambda, 5);
  EXPECT_EQ(rep.window_shape, Partition({3, 3, 2}));
  ASSERT_EQ(rep.m_sequence.size(), 3u);
  for (int j = 3; j <= 5; ++j) EXPECT_FALSE(rep.m(j).is_zero()) << j;
  EXPECT_EQ(rep.f, rep.m(5));
  EXPECT_EQ(t_coefficient(rep.determinant, 0), rep.m(5));
  EXPECT_EQ(t_coefficient(rep.determinant, 2), rep.m(3));
  EXPECT_EQ(rep.weight, WeightVector({0, 0, 0, 1, 2, 3, 3, 3, 2, 1, 0}));
  EXPECT_EQ(rep.weight.to_string(), "α4 + 2α5 + 3α6 + 3α7 + 3α8 + 2α9 + α10");
}

TEST(VanishingThreshold, Examples) {
  auto r10 = lemma2_threshold(TauSet(6, {2, 4}), 6, Window{1, 6}, 1);
  EXPECT_EQ(r10.l_lambda, 3);
  EXPECT_TRUE(r10.holds);
  EXPECT_EQ(r10.checks, (std::vector<std::pair<int, bool>>{{1, false}, {2, false}, {3, false}, {4, true}, {5, true}}));

  auto r11 = lemma2_threshold(TauSet(5, {1, 4}), 5, Window{1, 5}, 2);
  EXPECT_EQ(r11.l_lambda, 3);
  EXPECT_TRUE(r11.holds);

  auto r12 = lemma2_threshold(TauSet(12, {1, 4, 5, 7, 9, 10}), 12, Window{4, 11}, 3);
  EXPECT_EQ(r12.l_lambda, 5);
  EXPECT_EQ(r12.checks, (std::vector<std::pair<int, bool>>{{3, false}, {4, false}, {5, false}}));
}

TEST(CharPoly, Examples) {
  auto cp = char_poly(descriptor(kEx7));
  std::vector<WeightVector> want;
  for (auto [lo, hi] : std::vector<std::pair<int, int>>{{1, 1}, {4, 4}, {5, 5}, {7, 7}, {9, 9}, {10, 10}, {4, 5}, {9, 10}})
    want.push_back(WeightVector::root(12, lo, hi));
  want.push_back(WeightVector({0, 0, 0, 1, 2, 3, 3, 3, 2, 1, 0}));
  auto got = cp.factors;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(cp.degree(), 9u);
  EXPECT_EQ(static_cast<int>(cp.degree()), 66 - variety_dim(validate_syt(kEx7).shape(), 12));

  auto cp8 = char_poly(descriptor(kEx8));
  EXPECT_EQ(cp8.to_string(), "α2 α4 (α1 + α2 + α3 + α4 + α5)");
}

class GeneratorSweep : public ::testing::TestWithParam<int> {};

TEST_P(GeneratorSweep, InvariantsOfEveryDescriptor) {
  int n = GetParam();
  for (const auto& d : all_hypersurface_descriptors(n)) {
    SCOPED_TRACE(to_string(d.tableau));
    auto rep = generator_report(d);
    auto [i, j] = d.window();
    EXPECT_EQ(rep.weight, nested_roots(n, i, j, d.thickness));
    EXPECT_EQ(rep.f.total_degree(), rep.l_lambda);
    EXPECT_TRUE(rep.f.is_homogeneous());
    EXPECT_GE(rep.l_lambda, 2);
    bool touches_i = false, touches_j = false;
    for (const auto& [m, c] : rep.f.terms())
      for (const auto& [v, e] : m.factors()) {
        ASSERT_FALSE(is_t(v));
        EXPECT_GE(var_row(v), i);
        EXPECT_LE(var_col(v), j);
        EXPECT_EQ(e, 1);
        touches_i |= var_row(v) == i;
        touches_j |= var_col(v) == j;
      }
    EXPECT_TRUE(touches_i && touches_j);
    auto lem = lemma2_threshold(d.tau(), n, window_of(d), d.thickness);
    EXPECT_TRUE(lem.holds);
    EXPECT_EQ(lem.l_lambda, rep.l_lambda);
    EXPECT_EQ(static_cast<int>(char_poly(d, rep).degree()),
              num_positive_roots(n) - variety_dim(d.tableau.shape(), n));
  }
}

INSTANTIATE_TEST_SUITE_P(UpToEight, GeneratorSweep, ::testing::Range(2, 9));
