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

#ifndef STRIPVIS_INSTANCE_H_
#define STRIPVIS_INSTANCE_H_

#include <span>
#include <vector>

namespace stripvis {

// Half the side of a unit square symbol.
inline constexpr double kHalf = 0.5;

// Absolute slack on the coordinate range checks (last-bit rounding of
// mirrored, translated or decimal-quantised coordinates).
inline constexpr double kBoundsSlack = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A strip [0, width] x [0, height] and the centroid y-coordinates of the
// unit squares to be placed in it, sorted ascending.
//
// Construction enforces 1 < width <= 2, height > 1 and that every square
// fits vertically. Ties in y are accepted here (the evaluator is pure
// geometry); methods that carry guarantees call RequireDistinctYs().
class Instance {
 public:
  Instance(double width, double height, std::vector<double> ys);

  double width() const { return width_; }
  double height() const { return height_; }
  int size() const { return static_cast<int>(ys_.size()); }
  std::span<const double> ys() const { return ys_; }
  double y(int i) const { return ys_[i]; }

  // Total horizontal freedom, w - 1.
  double budget() const { return width_ - 1.0; }

  double min_x() const { return kHalf; }
  double max_x() const { return width_ - kHalf; }

  bool HasDistinctYs() const;
  // Throws InputError naming the first tied pair.
  void RequireDistinctYs() const;

  // The n - 1 vertical gaps y[i+1] - y[i].
  std::vector<double> YGaps() const;

 private:
  double width_;
  double height_;
  std::vector<double> ys_;
};

// x-coordinates of the square centroids (indexed like Instance::ys) and a
// stacking order listed back-to-front: zorder.back() is the top square.
struct Layout {
  std::vector<double> xs;
  std::vector<int> zorder;

  // zorder = 0, 1, ..., n-1, i.e. higher squares in front.
  static Layout StackedByY(std::vector<double> xs);

  // rank[i] = position of square i in zorder.
  std::vector<int> Ranks() const;
};

// Throws InputError on size mismatch or a zorder that is not a permutation,
// BoundsError when some x is outside [1/2, w - 1/2].
void ValidateLayout(const Instance& instance, const Layout& layout);

}  // namespace stripvis

#endif  // STRIPVIS_INSTANCE_H_
