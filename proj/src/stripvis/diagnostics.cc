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

#include "stripvis/diagnostics.h"

#include <algorithm>
#include <array>

#include "stripvis/visibility.h"

namespace stripvis {
namespace {

struct Box {
  double xl, xr, yb, yt;
};

Box SquareBox(double x, double y) {
  return {x - kHalf, x + kHalf, y - kHalf, y + kHalf};
}

bool Contains(const Box& b, double px, double py) {
  return b.xl <= px && px <= b.xr && b.yb <= py && py <= b.yt;
}

// A side counts as fully covered when its visible share is below this.
constexpr double kFullyCovered = 1e-12;

}  // namespace

double StickoutProfile::Total() const {
  double total = 0.0;
  for (const Stickout& s : entries) total += s.dx + s.dy;
  return total;
}

StickoutProfile ComputeStickout(const Instance& instance, const Layout& layout) {
  ValidateLayout(instance, layout);
  const int n = instance.size();
  StickoutProfile profile;
  if (n < 2) return profile;
  profile.entries.resize(n - 1);

  // Sweep front-to-back, growing the bounding box of the squares in front.
  const int top = layout.zorder.back();
  Box front = SquareBox(layout.xs[top], instance.y(top));
  for (int pos = n - 2; pos >= 0; --pos) {
    const int sq = layout.zorder[pos];
    const Box b = SquareBox(layout.xs[sq], instance.y(sq));
    Stickout& out = profile.entries[pos];
    out.square = sq;
    out.dx = std::max(0.0, front.xl - b.xl) + std::max(0.0, b.xr - front.xr);
    out.dy = std::max(0.0, front.yb - b.yb) + std::max(0.0, b.yt - front.yt);
    front.xl = std::min(front.xl, b.xl);
    front.xr = std::max(front.xr, b.xr);
    front.yb = std::min(front.yb, b.yb);
    front.yt = std::max(front.yt, b.yt);
  }
  return profile;
}

std::vector<CornerStatus> ClassifyBadSquares(const Instance& instance,
                                             const Layout& layout) {
  const VisibilityReport report = Evaluate(instance, layout);
  const int n = instance.size();
  const std::vector<int> rank = layout.Ranks();

  std::vector<CornerStatus> status(n);
  for (int i = 0; i < n; ++i) {
    const Box s = SquareBox(layout.xs[i], instance.y(i));
    const std::array<Point, 4> corners = {
        Point{s.xl, s.yb}, Point{s.xr, s.yb}, Point{s.xl, s.yt}, Point{s.xr, s.yt}};
    std::array<bool, 4> covered{};
    for (int t = 0; t < n; ++t) {
      if (rank[t] <= rank[i]) continue;
      const Box tb = SquareBox(layout.xs[t], instance.y(t));
      for (int c = 0; c < 4; ++c) {
        covered[c] = covered[c] || Contains(tb, corners[c].x, corners[c].y);
      }
    }
    CornerStatus& st = status[i];
    st.covered_corners =
        static_cast<int>(std::count(covered.begin(), covered.end(), true));
    st.bad = st.covered_corners >= 2;
    const SquareVisibility& v = report.squares[i];
    st.standard_bad =
        st.bad && (v.left < kFullyCovered || v.right < kFullyCovered);
  }
  return status;
}

int CountBad(const std::vector<CornerStatus>& status) {
  return static_cast<int>(std::count_if(
      status.begin(), status.end(), [](const CornerStatus& s) { return s.bad; }));
}

}  // namespace stripvis
