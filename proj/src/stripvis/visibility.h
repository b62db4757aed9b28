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

#ifndef STRIPVIS_VISIBILITY_H_
#define STRIPVIS_VISIBILITY_H_

#include <span>
#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

// Visible length of each side of one square, each in [0, 1].
struct SquareVisibility {
  double left = 1.0;
  double right = 1.0;
  double top = 1.0;
  double bottom = 1.0;

  double perimeter() const { return left + right + top + bottom; }
  double gap() const { return perimeter() - 2.0; }
};

struct VisibilityReport {
  std::vector<SquareVisibility> squares;
  std::vector<double> gaps;
  double min_gap = 2.0;
};

// Exact visible perimeter of every square.
//
// A boundary point of s is hidden when some closed square in front of s
// contains it, so a side segment shared with a square in front counts as
// covered. Per side, the covered part is the union of the intervals cut by
// the squares in front; it is measured by sort-and-sweep.
VisibilityReport Evaluate(const Instance& instance, const Layout& layout);

// Reusable interval storage for repeated single-square evaluations.
struct VisibilityScratch {
  std::vector<std::pair<double, double>> left, right, top, bottom;
};

// Visibility of a lone unit square centred at `square` when exactly the
// squares centred at `front` are in front of it.
SquareVisibility VisibilityAgainst(Point square, std::span<const Point> front);
SquareVisibility VisibilityAgainst(Point square, std::span<const Point> front,
                                   VisibilityScratch& scratch);

// Measure of the union of closed intervals; the input is reordered.
double UnionLength(std::vector<std::pair<double, double>>& intervals);

}  // namespace stripvis

#endif  // STRIPVIS_VISIBILITY_H_
