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

#ifndef STRIPVIS_DOCUMENT_H_
#define STRIPVIS_DOCUMENT_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stripvis/instance.h"

namespace stripvis {

struct SquareRecord {
  std::string id;
  double y = 0.0;
  double x = 0.0;
  // Stacking rank, 0 = backmost.
  int z = 0;

  bool operator==(const SquareRecord&) const = default;
};

struct LayoutMeta {
  std::string method;
  std::vector<std::pair<std::string, std::string>> params;
  double min_gap = 0.0;

  bool operator==(const LayoutMeta&) const = default;
};

// A persisted layout. Records are kept in ascending y order.
struct LayoutDocument {
  double width = 2.0;
  double height = 2.0;
  std::vector<SquareRecord> squares;
  LayoutMeta meta;

  Instance ToInstance() const;
  Layout ToLayout() const;

  bool operator==(const LayoutDocument&) const = default;
};

// Rounds to the 12 significant decimal digits used on disk.
double Quantize(double value);

// Builds a document with every coordinate quantised, then evaluates the
// quantised layout to fill meta.min_gap, so a saved document and the layout
// it reloads to agree exactly. `ids` may be empty (ids become "0", "1", ...).
LayoutDocument MakeDocument(const Instance& instance, const Layout& layout,
                            std::span<const std::string> ids, std::string method,
                            std::vector<std::pair<std::string, std::string>> params);

std::string EmitLayout(const LayoutDocument& doc);
// Throws InputError on malformed JSON or schema violations (including z not
// being a permutation of 0..n-1).
LayoutDocument ParseLayout(std::string_view json);

void SaveLayout(const LayoutDocument& doc, const std::string& path);
LayoutDocument LoadLayout(const std::string& path);

// Per-square visibility, corner diagnostics and stick-out of a document's
// layout as JSON.
std::string ReportJson(const LayoutDocument& doc);

}  // namespace stripvis

#endif  // STRIPVIS_DOCUMENT_H_
