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

#include "stripvis/svg.h"

#include <cmath>
#include <cstdio>
#include <string_view>

#include "stripvis/error.h"

namespace stripvis {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const LayoutDocument& doc, const SvgOptions& options) {
  if (!(options.scale > 0.0) || !std::isfinite(options.scale)) {
    throw ParameterError("SVG scale must be a positive number");
  }
  const Layout layout = doc.ToLayout();
  const double s = options.scale;
  const double m = options.margin;
  const double width_px = doc.width * s + 2 * m;
  const double height_px = doc.height * s + 2 * m;

  std::string out;
  out.reserve(256 + 160 * doc.squares.size());
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         Num(width_px) + "\" height=\"" + Num(height_px) + "\" viewBox=\"0 0 " +
         Num(width_px) + " " + Num(height_px) + "\">\n";
  out += "  <path class=\"strip\" d=\"M" + Num(m) + " " + Num(m) + "H" +
         Num(m + doc.width * s) + "V" + Num(m + doc.height * s) + "H" + Num(m) +
         "Z\" fill=\"none\" stroke=\"#bdbdbd\" stroke-width=\"1\"/>\n";
  for (int idx : layout.zorder) {
    const SquareRecord& r = doc.squares[idx];
    const double left = m + (r.x - 0.5) * s;
    const double top = m + (doc.height - r.y - 0.5) * s;
    out += "  <rect class=\"square\" x=\"" + Num(left) + "\" y=\"" + Num(top) +
           "\" width=\"" + Num(s) + "\" height=\"" + Num(s) + "\" fill=\"" +
           Escape(options.fill) + "\" stroke=\"" + Escape(options.stroke) +
           "\" stroke-width=\"" + Num(options.stroke_width) + "\"><title>" +
           Escape(r.id) + "</title></rect>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace stripvis
