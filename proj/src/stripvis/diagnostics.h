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

#ifndef STRIPVIS_DIAGNOSTICS_H_
#define STRIPVIS_DIAGNOSTICS_H_

#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

// How far one square sticks out of the bounding box of all squares in front
// of it.
struct Stickout {
  int square = 0;
  double dx = 0.0;
  double dy = 0.0;
};

struct StickoutProfile {
  // One entry per non-top square, in stacking order back-to-front.
  std::vector<Stickout> entries;

  double Total() const;
};

StickoutProfile ComputeStickout(const Instance& instance, const Layout& layout);

struct CornerStatus {
  int covered_corners = 0;
  // At least two corners lie in some closed square in front.
  bool bad = false;
  // Bad, and one vertical side is entirely covered.
  bool standard_bad = false;
};

std::vector<CornerStatus> ClassifyBadSquares(const Instance& instance,
                                             const Layout& layout);

int CountBad(const std::vector<CornerStatus>& status);

}  // namespace stripvis

#endif  // STRIPVIS_DIAGNOSTICS_H_
