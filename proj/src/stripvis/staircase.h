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

#ifndef STRIPVIS_STAIRCASE_H_
#define STRIPVIS_STAIRCASE_H_

#include <span>
#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

// Default slack below the supremum gap accepted when materialising a proper
// staircase, in strip-width units.
inline constexpr double kDefaultDelta = 1e-6;

// Optimum of
//   maximize g  s.t.  dx[i] + dy[i] >= g,  sum dx[i] <= budget,  dx[i] >= 0.
struct WaterFillSolution {
  double g_star = 0.0;
  std::vector<double> dxs;
};

// Solves the program above in O(m log m) by pouring `budget` over columns of
// heights dys and reading off the level where it settles. Throws InputError
// for an empty or negative gap sequence or a negative budget.
WaterFillSolution WaterFill(std::span<const double> dys, double budget);

enum class Facing { kUpRight, kUpLeft, kDownRight, kDownLeft };

// Makes every horizontal gap strictly positive while losing at most `delta`
// of gap: dx'[i] = (1 - t) dx[i] + t budget / m with t = delta / (g* + budget).
std::vector<double> SpreadGaps(const WaterFillSolution& solution, double budget,
                               double delta);

// Proper staircase with the x-gaps of `solution` spread by SpreadGaps.
// Right-facing staircases start at x = 1/2, left-facing ones at x = w - 1/2.
// Up-facing ones stack higher squares in front.
Layout BuildStaircase(const Instance& instance, const WaterFillSolution& solution,
                      double delta, Facing facing = Facing::kUpRight);

struct StaircaseResult {
  Layout layout;
  // Supremum gap over all layouts of the instance (2 for a single square).
  double g_star = 2.0;
  WaterFillSolution solution;
};

// Staircase within `delta` of the best possible gap. Requires h <= 2 (one
// point stabs every square); throws DomainError otherwise.
StaircaseResult OptimizePointStabbed(const Instance& instance,
                                     double delta = kDefaultDelta,
                                     Facing facing = Facing::kUpRight);

}  // namespace stripvis

#endif  // STRIPVIS_STAIRCASE_H_
