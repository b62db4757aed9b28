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

#ifndef STRIPVIS_STRIP_H_
#define STRIPVIS_STRIP_H_

#include <cstdint>
#include <vector>

#include "stripvis/instance.h"
#include "stripvis/staircase.h"

namespace stripvis {

// Squares whose y rounds to `index` (ties round up).
struct Bucket {
  int index = 0;
  std::vector<int> squares;
  // Left empty for buckets with fewer than two squares.
  WaterFillSolution solution;
  // Gap of the bucket's own staircase; 2 for a singleton.
  double gap = 2.0;
};

struct BucketPlan {
  // buckets[b] has index b + 1, for b = 0 .. ceil(h) - 1; some may be empty.
  std::vector<Bucket> buckets;
  // Smallest gap over nonempty buckets.
  double delta_min = 2.0;
};

int BucketIndex(double y);

// Partition only; solutions and gaps are left at their defaults.
BucketPlan Bucketize(const Instance& instance);

struct SqueezeResult {
  Layout layout;
  BucketPlan plan;
  // Factor applied to every bucket's x-offsets from its anchor.
  double scale = 0.0;
  // Horizontal centroid distance between the left and right halves.
  double separation = 0.0;
  // Lower bound on the layout gap implied by the construction:
  // min(scale * delta_min, separation).
  double guaranteed_gap = 0.0;
  // delta_min >= w - 1 left no room for the regular scale; 1/4 was used.
  bool capped = false;
};

// Per-bucket staircases squeezed into alternating halves of the strip.
//
// Even buckets face up-right and hang from x = 1/2, odd ones face up-left
// and hang from x = w - 1/2. Offsets are scaled by
// ((w - 1) - delta) / (2 (w - 1)), which leaves the halves delta apart, and
// buckets are stacked bottom-to-top. At w = 2 the guarantee is
// delta (1 - delta) / 2.
SqueezeResult Squeeze(const Instance& instance, double delta_stair = kDefaultDelta);

// Uniform spacing 1/k detected from the data. Throws DomainError naming the
// first gap that departs from the mean spacing by more than 1e-9.
double UniformK(const Instance& instance);

// Zigzag layout for uniformly spaced squares: bundles of floor(k) squares
// run alternately left-to-right and right-to-left over the 2 floor(k)
// x-positions 1/2 + (w - 1) i / (2 floor(k) - 1); stacking follows y.
// Requires k >= 2.
Layout Zigzag(const Instance& instance);

// Baseline: xs i.i.d. uniform on [1/2, w - 1/2], stacking follows y.
Layout Jitter(const Instance& instance, std::uint64_t seed);

}  // namespace stripvis

#endif  // STRIPVIS_STRIP_H_
