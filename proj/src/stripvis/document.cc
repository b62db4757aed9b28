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

#include "stripvis/document.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "stripvis/diagnostics.h"
#include "stripvis/error.h"
#include "stripvis/visibility.h"

namespace stripvis {
namespace {

using Json = nlohmann::ordered_json;

const Json& Require(const Json& obj, const char* key, const char* where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(std::string("layout document: missing '") + key + "' in " +
                     where);
  }
  return *it;
}

double RequireNumber(const Json& obj, const char* key, const char* where) {
  const Json& v = Require(obj, key, where);
  if (!v.is_number()) {
    throw InputError(std::string("layout document: '") + key + "' in " + where +
                     " must be a number");
  }
  return v.get<double>();
}

}  // namespace

double Quantize(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

Instance LayoutDocument::ToInstance() const {
  std::vector<double> ys;
  ys.reserve(squares.size());
  for (const SquareRecord& r : squares) ys.push_back(r.y);
  return Instance(width, height, std::move(ys));
}

Layout LayoutDocument::ToLayout() const {
  Layout layout;
  const std::size_t n = squares.size();
  layout.xs.reserve(n);
  layout.zorder.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    layout.xs.push_back(squares[i].x);
    const int z = squares[i].z;
    if (z < 0 || static_cast<std::size_t>(z) >= n || layout.zorder[z] != -1) {
      throw InputError("layout document: z values are not a permutation of 0..n-1");
    }
    layout.zorder[z] = static_cast<int>(i);
  }
  return layout;
}

LayoutDocument MakeDocument(const Instance& instance, const Layout& layout,
                            std::span<const std::string> ids, std::string method,
                            std::vector<std::pair<std::string, std::string>> params) {
  ValidateLayout(instance, layout);
  const int n = instance.size();
  if (!ids.empty() && ids.size() != static_cast<std::size_t>(n)) {
    throw InputError("label count does not match the number of squares");
  }
  const std::vector<int> rank = layout.Ranks();

  LayoutDocument doc;
  doc.width = Quantize(instance.width());
  doc.height = Quantize(instance.height());
  doc.squares.resize(n);
  for (int i = 0; i < n; ++i) {
    SquareRecord& r = doc.squares[i];
    r.id = ids.empty() ? std::to_string(i) : ids[i];
    r.y = Quantize(instance.y(i));
    r.x = Quantize(std::clamp(layout.xs[i], instance.min_x(), instance.max_x()));
    r.z = rank[i];
  }
  doc.meta.method = std::move(method);
  doc.meta.params = std::move(params);
  doc.meta.min_gap = Evaluate(doc.ToInstance(), doc.ToLayout()).min_gap;
  return doc;
}

std::string EmitLayout(const LayoutDocument& doc) {
  Json root;
  root["width"] = doc.width;
  root["height"] = doc.height;
  Json squares = Json::array();
  for (const SquareRecord& r : doc.squares) {
    squares.push_back({{"id", r.id}, {"y", r.y}, {"x", r.x}, {"z", r.z}});
  }
  root["squares"] = std::move(squares);
  Json params = Json::object();
  for (const auto& [key, value] : doc.meta.params) params[key] = value;
  root["meta"] = {{"method", doc.meta.method},
                  {"params", std::move(params)},
                  {"min_gap", doc.meta.min_gap}};
  return root.dump(2) + "\n";
}

LayoutDocument ParseLayout(std::string_view json) {
  Json root;
  try {
    root = Json::parse(json.begin(), json.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("layout document is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("layout document must be a JSON object");

  LayoutDocument doc;
  doc.width = RequireNumber(root, "width", "document");
  doc.height = RequireNumber(root, "height", "document");
  const Json& squares = Require(root, "squares", "document");
  if (!squares.is_array()) throw InputError("layout document: 'squares' must be an array");
  for (const Json& sq : squares) {
    if (!sq.is_object()) throw InputError("layout document: square entries must be objects");
    SquareRecord r;
    const Json& id = Require(sq, "id", "square");
    r.id = id.is_string() ? id.get<std::string>() : id.dump();
    r.y = RequireNumber(sq, "y", "square");
    r.x = RequireNumber(sq, "x", "square");
    const Json& z = Require(sq, "z", "square");
    if (!z.is_number_integer()) throw InputError("layout document: 'z' must be an integer");
    r.z = z.get<int>();
    doc.squares.push_back(std::move(r));
  }
  if (doc.squares.empty()) throw InputError("layout document has no squares");
  std::stable_sort(doc.squares.begin(), doc.squares.end(),
                   [](const SquareRecord& a, const SquareRecord& b) { return a.y < b.y; });
  (void)doc.ToLayout();  // z permutation check

  if (const auto meta = root.find("meta"); meta != root.end() && meta->is_object()) {
    if (const auto m = meta->find("method"); m != meta->end() && m->is_string()) {
      doc.meta.method = m->get<std::string>();
    }
    if (const auto p = meta->find("params"); p != meta->end() && p->is_object()) {
      for (const auto& [key, value] : p->items()) {
        doc.meta.params.emplace_back(
            key, value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
    if (const auto g = meta->find("min_gap"); g != meta->end() && g->is_number()) {
      doc.meta.min_gap = g->get<double>();
    }
  }
  return doc;
}

void SaveLayout(const LayoutDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << EmitLayout(doc);
  if (!out) throw IoError("failed writing '" + path + "'");
}

LayoutDocument LoadLayout(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open layout file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseLayout(buffer.str());
}

std::string ReportJson(const LayoutDocument& doc) {
  const Instance instance = doc.ToInstance();
  const Layout layout = doc.ToLayout();
  const VisibilityReport report = Evaluate(instance, layout);
  const std::vector<CornerStatus> corners = ClassifyBadSquares(instance, layout);
  const StickoutProfile stickout = ComputeStickout(instance, layout);

  Json root;
  root["method"] = doc.meta.method;
  root["min_gap"] = report.min_gap;
  root["min_visible_perimeter"] = report.min_gap + 2.0;
  root["bad_squares"] = CountBad(corners);
  Json squares = Json::array();
  for (std::size_t i = 0; i < doc.squares.size(); ++i) {
    const SquareVisibility& v = report.squares[i];
    squares.push_back({{"id", doc.squares[i].id},
                       {"x", doc.squares[i].x},
                       {"y", doc.squares[i].y},
                       {"z", doc.squares[i].z},
                       {"left", v.left},
                       {"right", v.right},
                       {"top", v.top},
                       {"bottom", v.bottom},
                       {"perimeter", v.perimeter()},
                       {"gap", report.gaps[i]},
                       {"covered_corners", corners[i].covered_corners},
                       {"bad", corners[i].bad},
                       {"standard_bad", corners[i].standard_bad}});
  }
  root["squares"] = std::move(squares);
  Json profile = Json::array();
  for (const Stickout& s : stickout.entries) {
    profile.push_back({{"id", doc.squares[s.square].id}, {"dx", s.dx}, {"dy", s.dy}});
  }
  root["stickout"] = std::move(profile);
  root["stickout_total"] = stickout.Total();
  return root.dump(2) + "\n";
}

}  // namespace stripvis
