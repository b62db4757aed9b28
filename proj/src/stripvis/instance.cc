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

#include "stripvis/instance.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "stripvis/error.h"

namespace stripvis {

Instance::Instance(double width, double height, std::vector<double> ys)
    : width_(width), height_(height), ys_(std::move(ys)) {
  if (!std::isfinite(width_) || !(width_ > 1.0) || !(width_ <= 2.0)) {
    std::ostringstream os;
    os << "strip width must satisfy 1 < w <= 2, got " << width_;
    throw InputError(os.str());
  }
  if (!std::isfinite(height_) || !(height_ > 1.0)) {
    std::ostringstream os;
    os << "strip height must exceed 1, got " << height_;
    throw InputError(os.str());
  }
  if (ys_.empty()) throw InputError("instance has no squares");
  for (std::size_t i = 0; i < ys_.size(); ++i) {
    const double y = ys_[i];
    if (!std::isfinite(y) || y < kHalf - kBoundsSlack ||
        y > height_ - kHalf + kBoundsSlack) {
      std::ostringstream os;
      os << "y[" << i << "] = " << y << " lies outside [1/2, h - 1/2] = [0.5, "
         << height_ - kHalf << "]";
      throw InputError(os.str());
    }
    if (i > 0 && y < ys_[i - 1]) {
      std::ostringstream os;
      os << "y-coordinates must be sorted ascending; y[" << i << "] = " << y
         << " < y[" << i - 1 << "] = " << ys_[i - 1];
      throw InputError(os.str());
    }
  }
}

bool Instance::HasDistinctYs() const {
  for (std::size_t i = 1; i < ys_.size(); ++i) {
    if (!(ys_[i] > ys_[i - 1])) return false;
  }
  return true;
}

void Instance::RequireDistinctYs() const {
  for (std::size_t i = 1; i < ys_.size(); ++i) {
    if (!(ys_[i] > ys_[i - 1])) {
      std::ostringstream os;
      os << "y-coordinates must be distinct; y[" << i - 1 << "] = y[" << i
         << "] = " << ys_[i];
      throw InputError(os.str());
    }
  }
}

std::vector<double> Instance::YGaps() const {
  std::vector<double> gaps;
  if (ys_.size() < 2) return gaps;
  gaps.reserve(ys_.size() - 1);
  for (std::size_t i = 0; i + 1 < ys_.size(); ++i) {
    gaps.push_back(ys_[i + 1] - ys_[i]);
  }
  return gaps;
}

Layout Layout::StackedByY(std::vector<double> xs) {
  Layout layout;
  layout.zorder.resize(xs.size());
  std::iota(layout.zorder.begin(), layout.zorder.end(), 0);
  layout.xs = std::move(xs);
  return layout;
}

std::vector<int> Layout::Ranks() const {
  std::vector<int> rank(zorder.size());
  for (std::size_t pos = 0; pos < zorder.size(); ++pos) {
    rank[zorder[pos]] = static_cast<int>(pos);
  }
  return rank;
}

void ValidateLayout(const Instance& instance, const Layout& layout) {
  const std::size_t n = instance.ys().size();
  if (layout.xs.size() != n || layout.zorder.size() != n) {
    std::ostringstream os;
    os << "layout has " << layout.xs.size() << " x-coordinates and "
       << layout.zorder.size() << " stacking entries for " << n << " squares";
    throw InputError(os.str());
  }
  std::vector<bool> seen(n, false);
  for (int idx : layout.zorder) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[idx]) {
      throw InputError("stacking order is not a permutation of the squares");
    }
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double x = layout.xs[i];
    if (!std::isfinite(x) || x < instance.min_x() - kBoundsSlack ||
        x > instance.max_x() + kBoundsSlack) {
      std::ostringstream os;
      os << "x[" << i << "] = " << x << " lies outside [1/2, w - 1/2] = [0.5, "
         << instance.max_x() << "]";
      throw BoundsError(os.str());
    }
  }
}

}  // namespace stripvis
