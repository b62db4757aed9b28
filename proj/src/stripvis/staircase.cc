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

#include "stripvis/staircase.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stripvis/error.h"

namespace stripvis {

WaterFillSolution WaterFill(std::span<const double> dys, double budget) {
  if (dys.empty()) {
    throw InputError("water filling needs at least two squares");
  }
  if (!std::isfinite(budget) || budget < 0.0) {
    throw InputError("horizontal budget must be a nonnegative number");
  }
  for (std::size_t i = 0; i < dys.size(); ++i) {
    if (!std::isfinite(dys[i]) || dys[i] < 0.0) {
      std::ostringstream os;
      os << "vertical gap " << i << " is negative or not finite (" << dys[i] << ")";
      throw InputError(os.str());
    }
  }

  std::vector<double> sorted(dys.begin(), dys.end());
  std::sort(sorted.begin(), sorted.end());

  // With j columns submerged the level rises linearly in the water poured.
  const std::size_t m = sorted.size();
  double level = sorted[0];
  double remaining = budget;
  std::size_t j = 1;
  for (; j < m; ++j) {
    const double need = static_cast<double>(j) * (sorted[j] - level);
    if (need > remaining) break;
    remaining -= need;
    level = sorted[j];
  }
  level += remaining / static_cast<double>(j);

  WaterFillSolution solution;
  solution.g_star = level;
  solution.dxs.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    solution.dxs[i] = std::max(0.0, level - dys[i]);
  }
  return solution;
}

std::vector<double> SpreadGaps(const WaterFillSolution& solution, double budget,
                               double delta) {
  const std::size_t m = solution.dxs.size();
  const double t = delta / (solution.g_star + budget);
  const double uniform = budget / static_cast<double>(m);
  std::vector<double> spread(m);
  for (std::size_t i = 0; i < m; ++i) {
    spread[i] = (1.0 - t) * solution.dxs[i] + t * uniform;
  }
  return spread;
}

Layout BuildStaircase(const Instance& instance, const WaterFillSolution& solution,
                      double delta, Facing facing) {
  const int n = instance.size();
  if (n == 1) {
    return Layout::StackedByY({instance.width() / 2.0});
  }
  instance.RequireDistinctYs();
  if (solution.dxs.size() != static_cast<std::size_t>(n - 1)) {
    throw InputError("water-fill solution does not match the instance size");
  }
  if (!(delta > 0.0) || !(delta < solution.g_star)) {
    std::ostringstream os;
    os << "delta must satisfy 0 < delta < g* = " << solution.g_star << ", got "
       << delta;
    throw ParameterError(os.str());
  }

  const std::vector<double> dxs = SpreadGaps(solution, instance.budget(), delta);
  const bool rightward = facing == Facing::kUpRight || facing == Facing::kDownRight;
  const bool upward = facing == Facing::kUpRight || facing == Facing::kUpLeft;

  Layout layout;
  layout.xs.resize(n);
  double offset = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) offset += dxs[i - 1];
    const double x = rightward ? instance.min_x() + offset
                               : instance.max_x() - offset;
    layout.xs[i] = std::clamp(x, instance.min_x(), instance.max_x());
  }
  layout.zorder.resize(n);
  std::iota(layout.zorder.begin(), layout.zorder.end(), 0);
  if (!upward) std::reverse(layout.zorder.begin(), layout.zorder.end());
  return layout;
}

StaircaseResult OptimizePointStabbed(const Instance& instance, double delta,
                                     Facing facing) {
  if (instance.height() > 2.0) {
    std::ostringstream os;
    os << "staircase optimisation needs strip height <= 2 (got "
       << instance.height() << "); use the squeeze method for taller strips";
    throw DomainError(os.str());
  }
  StaircaseResult result;
  if (instance.size() == 1) {
    result.layout = BuildStaircase(instance, result.solution, delta, facing);
    return result;
  }
  instance.RequireDistinctYs();
  const std::vector<double> dys = instance.YGaps();
  result.solution = WaterFill(dys, instance.budget());
  result.g_star = result.solution.g_star;
  result.layout = BuildStaircase(instance, result.solution, delta, facing);
  return result;
}

}  // namespace stripvis
