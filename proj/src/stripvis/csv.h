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

#ifndef STRIPVIS_CSV_H_
#define STRIPVIS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

// Labelled y-values, sorted ascending by y (stable, so ties keep file order).
struct Dataset {
  std::vector<std::string> ids;
  std::vector<double> ys;
  // Non-fatal findings such as duplicate y-values.
  std::vector<std::string> warnings;

  bool has_duplicates() const;
  // max(y) + 1/2, the height used for `--height auto`.
  double AutoHeight() const;
  // height <= 0 selects AutoHeight().
  Instance ToInstance(double width, double height) const;
};

// Rows are `id,y` or just `y`; an optional header row `id,y` / `y` is
// skipped. Single-column rows get their 0-based row number as id. Blank
// lines are ignored. Throws InputError naming the 1-based line of the first
// bad row, or when there is no data.
Dataset ParseCsv(std::string_view text);
Dataset IngestCsv(const std::string& path);

}  // namespace stripvis

#endif  // STRIPVIS_CSV_H_
