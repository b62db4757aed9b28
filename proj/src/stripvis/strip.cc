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

#include "stripvis/strip.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "stripvis/error.h"

namespace stripvis {

int BucketIndex(double y) { return static_cast<int>(std::floor(y + kHalf)); }

BucketPlan Bucketize(const Instance& instance) {
  BucketPlan plan;
  const int count = static_cast<int>(std::ceil(instance.height()));
  plan.buckets.resize(count);
  for (int b = 0; b < count; ++b) plan.buckets[b].index = b + 1;
  for (int i = 0; i < instance.size(); ++i) {
    const int b = std::clamp(BucketIndex(instance.y(i)), 1, count);
    plan.buckets[b - 1].squares.push_back(i);
  }
  return plan;
}

SqueezeResult Squeeze(const Instance& instance, double delta_stair) {
  instance.RequireDistinctYs();
  if (!(delta_stair > 0.0)) {
    throw ParameterError("staircase delta must be positive");
  }
  const int n = instance.size();
  const double budget = instance.budget();

  SqueezeResult result;
  result.plan = Bucketize(instance);

  // Offsets of each square from its bucket's anchor, before scaling.
  std::vector<double> offset(n, 0.0);
  double delta = 2.0;
  for (Bucket& bucket : result.plan.buckets) {
    const std::size_t size = bucket.squares.size();
    if (size == 0) continue;
    if (size >= 2) {
      std::vector<double> dys(size - 1);
      for (std::size_t j = 0; j + 1 < size; ++j) {
        dys[j] = instance.y(bucket.squares[j + 1]) - instance.y(bucket.squares[j]);
      }
      bucket.solution = WaterFill(dys, budget);
      const double d = std::min(delta_stair, bucket.solution.g_star / 2.0);
      const std::vector<double> dxs = SpreadGaps(bucket.solution, budget, d);
      double acc = 0.0;
      bucket.gap = 2.0;
      for (std::size_t j = 0; j + 1 < size; ++j) {
        bucket.gap = std::min(bucket.gap, dys[j] + dxs[j]);
        acc += dxs[j];
        offset[bucket.squares[j + 1]] = std::min(acc, budget);
      }
    }
    delta = std::min(delta, bucket.gap);
  }
  result.plan.delta_min = delta;

  if (delta < budget) {
    result.scale = (budget - delta) / (2.0 * budget);
  } else {
    result.scale = 0.25;
    result.capped = true;
  }
  result.separation = budget * (1.0 - 2.0 * result.scale);
  result.guaranteed_gap = std::min(result.scale * delta, result.separation);

  result.layout.xs.resize(n);
  for (const Bucket& bucket : result.plan.buckets) {
    const bool left_half = bucket.index % 2 == 0;
    for (int sq : bucket.squares) {
      const double shift = result.scale * offset[sq];
      result.layout.xs[sq] = left_half ? instance.min_x() + shift
                                       : instance.max_x() - shift;
    }
  }
  // Buckets concatenated bottom-to-top with up-facing staircases inside:
  // this is the y-order.
  result.layout = Layout::StackedByY(std::move(result.layout.xs));
  return result;
}

double UniformK(const Instance& instance) {
  constexpr double kTolerance = 1e-9;
  const int n = instance.size();
  if (n < 2) throw DomainError("uniform spacing needs at least two squares");
  const double spacing = (instance.y(n - 1) - instance.y(0)) / (n - 1);
  if (!(spacing > 0.0)) throw DomainError("squares are not uniformly spaced");
  for (int i = 0; i + 1 < n; ++i) {
    const double dy = instance.y(i + 1) - instance.y(i);
    if (std::abs(dy - spacing) > kTolerance) {
      std::ostringstream os;
      os << "squares are not uniformly spaced: gap " << i << " (y[" << i + 1
         << "] - y[" << i << "] = " << dy << ") differs from the mean spacing "
         << spacing;
      throw DomainError(os.str());
    }
  }
  return 1.0 / spacing;
}

Layout Zigzag(const Instance& instance) {
  const int n = instance.size();
  if (n == 1) return Layout::StackedByY({instance.width() / 2.0});
  const double k = UniformK(instance);
  const int bundle = static_cast<int>(std::floor(k + 1e-9));
  if (bundle < 2) {
    std::ostringstream os;
    os << "zigzag layout needs k >= 2 squares per unit height, got k = " << k;
    throw DomainError(os.str());
  }
  const int positions = 2 * bundle;
  const double step = instance.budget() / (positions - 1);

  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j) {
    const int p = j % positions;
    const int slot = p < bundle ? p : 3 * bundle - 1 - p;
    xs[j] = std::min(instance.min_x() + step * slot, instance.max_x());
  }
  return Layout::StackedByY(std::move(xs));
}

Layout Jitter(const Instance& instance, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> xs(instance.size());
  for (double& x : xs) {
    // Top 53 bits as a uniform double in [0, 1).
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    x = instance.min_x() + instance.budget() * u;
  }
  return Layout::StackedByY(std::move(xs));
}

}  // namespace stripvis
