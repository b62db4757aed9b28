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

#ifndef STRIPVIS_SVG_H_
#define STRIPVIS_SVG_H_

#include <string>

#include "stripvis/document.h"

namespace stripvis {

struct SvgOptions {
  // Pixels per unit length (one square side).
  double scale = 40.0;
  std::string fill = "#9ecae1";
  std::string stroke = "#08306b";
  double stroke_width = 1.5;
  double margin = 8.0;
};

// SVG 1.1 drawing of the strip with one <rect class="square"> per square,
// emitted back-to-front so painter's order reproduces the stacking.
std::string RenderSvg(const LayoutDocument& doc, const SvgOptions& options = {});

}  // namespace stripvis

#endif  // STRIPVIS_SVG_H_
