// Copyright 2026 The stripvis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "stripvis/error.h"
#include "stripvis/oracle.h"
#include "stripvis/staircase.h"
#include "stripvis/visibility.h"
#include "test_support.h"

namespace stripvis {
namespace {

using testing::RandomInstance;
using testing::RandomLayout;
using testing::UniformInstance;

const Instance& NineSquareInstance() {
  static const Instance inst(2.0, 2.25,
                             {0.5, 0.7, 0.8, 1.25, 1.35, 1.45, 1.55, 1.65, 1.75});
  return inst;
}

// Plain enumeration of every stacking order and every grid placement.
double NaiveGridBest(const Instance& inst, int steps, Family family) {
  const int n = inst.size();
  std::vector<double> grid(steps);
  for (int j = 0; j < steps; ++j) grid[j] = 0.5 + inst.budget() * j / (steps - 1);
  grid.back() = inst.max_x();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = -1e300;
  do {
    const bool ascending = std::is_sorted(order.begin(), order.end());
    const bool descending = std::is_sorted(order.rbegin(), order.rend());
    if (family == Family::kStackByY && !ascending) continue;
    if (family == Family::kStackByInverseY && !descending) continue;
    if (family == Family::kStaircase && !ascending && !descending) continue;
    std::vector<int> slot(n, 0);
    while (true) {
      Layout layout{std::vector<double>(n), order};
      for (int i = 0; i < n; ++i) layout.xs[i] = grid[slot[i]];
      const bool monotone = std::is_sorted(layout.xs.begin(), layout.xs.end()) ||
                            std::is_sorted(layout.xs.rbegin(), layout.xs.rend());
      if (family != Family::kStaircase || monotone) {
        best = std::max(best, Evaluate(inst, layout).min_gap);
      }
      int i = 0;
      while (i < n && ++slot[i] == steps) slot[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

TEST(LpReferenceTest, Examples) {
  const std::vector<double> uniform = {0.25, 0.25, 0.25, 0.25};
  EXPECT_NEAR(LpReference(uniform, 1.0), 0.5, 1e-12);
  const std::vector<double> tight = {0.2, 0.1};
  EXPECT_NEAR(LpReference(tight, 0.1), 0.2, 1e-12);
  const std::vector<double> mixed = {0.4, 0.15, 0.3};
  EXPECT_NEAR(LpReference(mixed, 0.0), 0.15, 1e-12);
}

TEST(GridSearchTest, SingleSquare) {
  const GridSearchResult r = GridSearch(Instance(1.5, 2.0, {1.0}), 5);
  EXPECT_DOUBLE_EQ(r.best_min_gap, 2.0);
  ASSERT_EQ(r.best_layout.xs.size(), 1u);
}

TEST(GridSearchTest, UniformThreeSquares) {
  Instance inst = UniformInstance(3, 2.0, 2.0);
  const GridSearchResult r = GridSearch(inst, 5);
  EXPECT_LE(r.best_min_gap, 1.0 + 1e-9);
  EXPECT_GE(r.best_min_gap, 1.0 - r.resolution);
  EXPECT_DOUBLE_EQ(r.resolution, 0.25);
  EXPECT_DOUBLE_EQ(Evaluate(inst, r.best_layout).min_gap, r.best_min_gap);
}

TEST(GridSearchTest, MatchesNaiveEnumeration) {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 12; ++t) {
    const int n = 2 + t % 3;
    Instance inst = RandomInstance(gen, t % 2 ? 2.0 : 1.6, 2.0 + 0.5 * (t % 3), n);
    for (Family f : {Family::kAny, Family::kStackByY, Family::kStackByInverseY,
                     Family::kStaircase}) {
      const GridSearchResult r = GridSearch(inst, 6, f);
      EXPECT_NEAR(r.best_min_gap, NaiveGridBest(inst, 6, f), 1e-12)
          << "t=" << t << " family=" << FamilyName(f);
      EXPECT_DOUBLE_EQ(Evaluate(inst, r.best_layout).min_gap, r.best_min_gap);
    }
  }
}

TEST(GridSearchTest, StaircaseFamilyNearWaterFill) {
  for (int n : {3, 4, 5}) {
    Instance inst = UniformInstance(n, 2.0, 2.0);
    const GridSearchResult r = GridSearch(inst, 2 * (n - 1) + 1, Family::kStaircase);
    const double g_star = OptimizePointStabbed(inst).g_star;
    EXPECT_LE(r.best_min_gap, g_star + 1e-9);
    EXPECT_GE(r.best_min_gap, g_star - r.resolution - 1e-9);
  }
}

TEST(GridSearchTest, StackByYMatchesAnyWhenOptimal) {
  Instance inst = UniformInstance(4, 2.0, 2.0);
  const double any = GridSearch(inst, 7, Family::kAny).best_min_gap;
  EXPECT_DOUBLE_EQ(GridSearch(inst, 7, Family::kStackByY).best_min_gap, any);
  EXPECT_NEAR(any, 2.0 / 3.0, 1e-9);
}

TEST(GridSearchTest, InverseOrderMirrorsOnTwoSquares) {
  std::mt19937_64 gen(12);
  for (int t = 0; t < 10; ++t) {
    Instance inst = RandomInstance(gen, 1.7, 2.0, 2);
    EXPECT_DOUBLE_EQ(GridSearch(inst, 9, Family::kStackByY).best_min_gap,
                     GridSearch(inst, 9, Family::kStackByInverseY).best_min_gap);
  }
}

TEST(GridSearchTest, MonotoneOnNestedGrids) {
  std::mt19937_64 gen(13);
  for (int t = 0; t < 6; ++t) {
    Instance inst = RandomInstance(gen, 2.0, 2.0, 4);
    double prev = -1e300;
    for (int steps : {3, 5, 9, 17}) {
      const double g = GridSearch(inst, steps).best_min_gap;
      EXPECT_GE(g, prev);
      EXPECT_LE(g, OptimizePointStabbed(inst).g_star + 1e-9);
      prev = g;
    }
  }
}

TEST(GridSearchTest, NarrowStripNeverReachesTwoEps) {
  Instance inst(1.1, 1.3, {0.5, 0.7, 0.8});
  for (int steps : {2, 5, 11, 41, 101}) {
    EXPECT_LT(GridSearch(inst, steps).best_min_gap, 0.2) << steps;
  }
}

TEST(GridSearchTest, Errors) {
  Instance inst = UniformInstance(9, 2.0, 2.0);
  EXPECT_THROW(GridSearch(inst, 5), DomainError);
  EXPECT_THROW(GridSearch(UniformInstance(3, 2.0, 2.0), 1), ParameterError);
  EXPECT_THROW(ParseFamily("zigzag"), InputError);
  EXPECT_EQ(ParseFamily("stack-by-inverse-y"), Family::kStackByInverseY);
}

// Frozen fixtures: values produced by the search itself.
TEST(GridSearchFixtureTest, NineSquaresElevenSteps) {
  const Instance& inst = NineSquareInstance();
  EXPECT_NEAR(GridSearch(inst, 11, Family::kAny, 9).best_min_gap, 0.3, 1e-9);
  EXPECT_NEAR(GridSearch(inst, 11, Family::kStackByY, 9).best_min_gap, 0.2, 1e-9);
  EXPECT_NEAR(GridSearch(inst, 11, Family::kStackByInverseY, 9).best_min_gap, 0.2, 1e-9);
  EXPECT_NEAR(GridSearch(inst, 11, Family::kStaircase, 9).best_min_gap, 0.2, 1e-9);
}

TEST(GridSearchFixtureTest, NineSquaresRestrictedFamilies) {
  const Instance& inst = NineSquareInstance();
  EXPECT_NEAR(GridSearch(inst, 21, Family::kStackByY, 9).best_min_gap, 0.25, 1e-9);
  EXPECT_NEAR(GridSearch(inst, 21, Family::kStaircase, 9).best_min_gap, 0.25, 1e-9);
  const double y41 = GridSearch(inst, 41, Family::kStackByY, 9).best_min_gap;
  const double s41 = GridSearch(inst, 41, Family::kStaircase, 9).best_min_gap;
  EXPECT_NEAR(y41, 0.275, 1e-9);
  EXPECT_NEAR(s41, 0.25, 1e-9);
  // Staircases cannot exceed the water level of the y-gaps.
  const std::vector<double> dys = inst.YGaps();
  EXPECT_LE(s41, WaterFill(dys, 1.0).g_star);
  EXPECT_GT(WaterFill(dys, 1.0).g_star, 0.25);
}

TEST(SampleTest, TopSquareIsExactlyFour) {
  std::mt19937_64 gen(1);
  Instance inst = RandomInstance(gen, 2.0, 2.0, 4);
  const Layout layout = RandomLayout(gen, inst);
  const auto est = SampleVisiblePerimeter(inst, layout, 500, 3);
  EXPECT_DOUBLE_EQ(est[layout.zorder.back()].perimeter, 4.0);
  EXPECT_DOUBLE_EQ(est[layout.zorder.back()].stderr_estimate, 0.0);
}

TEST(SampleTest, StackedPairWithinThreeSigma) {
  Instance inst(2.0, 2.0, {0.5, 0.9});
  const auto est = SampleVisiblePerimeter(inst, Layout::StackedByY({1.0, 1.0}), 20000, 9);
  // Sides 0.4 and 0.4 are random; bottom 1 and top 0 are exact.
  const double sigma = std::sqrt(2 * 0.4 * 0.6 / 20000);
  EXPECT_NEAR(est[0].perimeter, 1.8, 3 * sigma);
  EXPECT_DOUBLE_EQ(est[0].sides[3], 1.0);
  EXPECT_DOUBLE_EQ(est[0].sides[2], 0.0);
}

TEST(SampleTest, Deterministic) {
  std::mt19937_64 gen(2);
  Instance inst = RandomInstance(gen, 2.0, 3.0, 6);
  const Layout layout = RandomLayout(gen, inst);
  const auto a = SampleVisiblePerimeter(inst, layout, 300, 5);
  const auto b = SampleVisiblePerimeter(inst, layout, 300, 5);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].perimeter, b[i].perimeter);
  EXPECT_THROW(SampleVisiblePerimeter(inst, layout, 0, 5), ParameterError);
}

}  // namespace
}  // namespace stripvis
