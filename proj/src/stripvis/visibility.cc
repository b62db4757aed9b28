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

#include "stripvis/visibility.h"

#include <algorithm>
#include <utility>

namespace stripvis {
namespace {

using Intervals = std::vector<std::pair<double, double>>;

// Window of squares that can touch square i; ys are sorted so this is a
// contiguous index range.
std::pair<int, int> TouchWindow(std::span<const double> ys, int i) {
  constexpr double kReach = 1.0 + 1e-9;
  const auto lo = std::lower_bound(ys.begin(), ys.end(), ys[i] - kReach);
  const auto hi = std::upper_bound(ys.begin(), ys.end(), ys[i] + kReach);
  return {static_cast<int>(lo - ys.begin()), static_cast<int>(hi - ys.begin())};
}

class SideAccumulator {
 public:
  SideAccumulator(Point s, VisibilityScratch& scratch)
      : xl_(s.x - kHalf), xr_(s.x + kHalf), yb_(s.y - kHalf), yt_(s.y + kHalf),
        sides_(scratch) {
    sides_.left.clear();
    sides_.right.clear();
    sides_.top.clear();
    sides_.bottom.clear();
  }

  void Add(Point t) {
    const double txl = t.x - kHalf, txr = t.x + kHalf;
    const double tyb = t.y - kHalf, tyt = t.y + kHalf;
    const double ylo = std::max(yb_, tyb), yhi = std::min(yt_, tyt);
    if (ylo <= yhi) {
      if (txl <= xl_ && xl_ <= txr) sides_.left.emplace_back(ylo, yhi);
      if (txl <= xr_ && xr_ <= txr) sides_.right.emplace_back(ylo, yhi);
    }
    const double xlo = std::max(xl_, txl), xhi = std::min(xr_, txr);
    if (xlo <= xhi) {
      if (tyb <= yb_ && yb_ <= tyt) sides_.bottom.emplace_back(xlo, xhi);
      if (tyb <= yt_ && yt_ <= tyt) sides_.top.emplace_back(xlo, xhi);
    }
  }

  SquareVisibility Finish() {
    SquareVisibility v;
    v.left = Visible(sides_.left);
    v.right = Visible(sides_.right);
    v.top = Visible(sides_.top);
    v.bottom = Visible(sides_.bottom);
    return v;
  }

 private:
  static double Visible(Intervals& covered) {
    return std::clamp(1.0 - UnionLength(covered), 0.0, 1.0);
  }

  double xl_, xr_, yb_, yt_;
  VisibilityScratch& sides_;
};

}  // namespace

double UnionLength(Intervals& intervals) {
  if (intervals.empty()) return 0.0;
  std::sort(intervals.begin(), intervals.end());
  double total = 0.0;
  double start = intervals.front().first;
  double end = intervals.front().second;
  for (const auto& [a, b] : intervals) {
    if (a > end) {
      total += end - start;
      start = a;
      end = b;
    } else {
      end = std::max(end, b);
    }
  }
  return total + (end - start);
}

SquareVisibility VisibilityAgainst(Point square, std::span<const Point> front,
                                   VisibilityScratch& scratch) {
  SideAccumulator acc(square, scratch);
  for (const Point& t : front) acc.Add(t);
  return acc.Finish();
}

SquareVisibility VisibilityAgainst(Point square, std::span<const Point> front) {
  VisibilityScratch scratch;
  return VisibilityAgainst(square, front, scratch);
}

VisibilityReport Evaluate(const Instance& instance, const Layout& layout) {
  ValidateLayout(instance, layout);
  const int n = instance.size();
  const std::vector<int> rank = layout.Ranks();
  const auto ys = instance.ys();

  VisibilityReport report;
  report.squares.resize(n);
  report.gaps.resize(n);
  report.min_gap = 2.0;
  VisibilityScratch scratch;
  for (int i = 0; i < n; ++i) {
    SideAccumulator acc({layout.xs[i], ys[i]}, scratch);
    const auto [lo, hi] = TouchWindow(ys, i);
    for (int t = lo; t < hi; ++t) {
      if (rank[t] > rank[i]) acc.Add({layout.xs[t], ys[t]});
    }
    report.squares[i] = acc.Finish();
    report.gaps[i] = report.squares[i].gap();
    report.min_gap = std::min(report.min_gap, report.gaps[i]);
  }
  return report;
}

}  // namespace stripvis
