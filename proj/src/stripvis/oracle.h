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

#ifndef STRIPVIS_ORACLE_H_
#define STRIPVIS_ORACLE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

// Reference optimum of the water-filling program by bisection on the level g
// (80 halvings of [min dy, min dy + budget + max dy]). Same error contract as
// WaterFill.
double LpReference(std::span<const double> dys, double budget);

enum class Family {
  kAny,
  kStackByY,         // higher squares in front
  kStackByInverseY,  // lower squares in front
  kStaircase,        // monotone x together with one of the two orders above
};

// Parses "any", "stack-by-y", "stack-by-inverse-y", "staircase".
Family ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

inline constexpr int kDefaultMaxN = 8;

struct GridSearchResult {
  Layout best_layout;
  double best_min_gap = 0.0;
  int grid_steps = 0;
  // Complete layouts reached by the search (after pruning).
  std::int64_t orders_examined = 0;
  std::int64_t nodes_visited = 0;
  // Grid spacing (w - 1) / (grid_steps - 1).
  double resolution = 0.0;
};

// Exhaustive search over the stacking orders of `family` and all placements
// on the grid x_j = 1/2 + (w - 1) j / (grid_steps - 1).
//
// Squares are placed front to back; a square's gap is final once placed, so
// any partial layout whose gap is not above the incumbent is cut, and the
// remaining squares' candidate positions are filtered the same way. Mirror
// images are searched once (front square in the left half of the grid), as
// are orders that differ by swapping two consecutive disjoint squares. Among equally good layouts the first one met in this fixed
// enumeration is returned, so results do not depend on timing.
//
// Throws DomainError when n > max_n and ParameterError when grid_steps < 2.
GridSearchResult GridSearch(const Instance& instance, int grid_steps,
                            Family family = Family::kAny,
                            int max_n = kDefaultMaxN);

struct SampleEstimate {
  // left, right, top, bottom
  std::array<double, 4> sides{};
  double perimeter = 0.0;
  // Binomial standard error of `perimeter` from the observed proportions.
  double stderr_estimate = 0.0;
};

// Monte-Carlo visible perimeter: uniform points on every side, each tested
// pointwise against the closed squares in front.
std::vector<SampleEstimate> SampleVisiblePerimeter(const Instance& instance,
                                                   const Layout& layout,
                                                   int samples_per_side,
                                                   std::uint64_t seed);

}  // namespace stripvis

#endif  // STRIPVIS_ORACLE_H_
