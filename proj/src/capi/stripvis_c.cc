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

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "stripvis/csv.h"
#include "stripvis/diagnostics.h"
#include "stripvis/document.h"
#include "stripvis/error.h"
#include "stripvis/instance.h"
#include "stripvis/oracle.h"
#include "stripvis/staircase.h"
#include "stripvis/strip.h"
#include "stripvis/stripvis.h"
#include "stripvis/svg.h"
#include "stripvis/visibility.h"

struct stripvis_instance {
  stripvis::Instance value;
};
struct stripvis_layout {
  stripvis::Layout value;
};
struct stripvis_report {
  stripvis::VisibilityReport value;
};
struct stripvis_dataset {
  stripvis::Dataset value;
};
struct stripvis_document {
  stripvis::LayoutDocument value;
};

namespace {

thread_local std::string last_error;

stripvis_status ToStatus(stripvis::ErrorCode code) {
  switch (code) {
    case stripvis::ErrorCode::kInput: return STRIPVIS_ERR_INPUT;
    case stripvis::ErrorCode::kBounds: return STRIPVIS_ERR_BOUNDS;
    case stripvis::ErrorCode::kParameter: return STRIPVIS_ERR_PARAMETER;
    case stripvis::ErrorCode::kDomain: return STRIPVIS_ERR_DOMAIN;
    case stripvis::ErrorCode::kIo: return STRIPVIS_ERR_IO;
  }
  return STRIPVIS_ERR_INTERNAL;
}

stripvis_status Fail(stripvis_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
stripvis_status Guard(Body&& body) {
  try {
    body();
    return STRIPVIS_OK;
  } catch (const stripvis::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(STRIPVIS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(STRIPVIS_ERR_INTERNAL, e.what());
  }
}

#define STRIPVIS_REQUIRE(cond, what)                          \
  do {                                                        \
    if (!(cond)) return Fail(STRIPVIS_ERR_PARAMETER, (what)); \
  } while (0)

stripvis_status CopyText(const std::string& text, char* buf, size_t cap,
                         size_t* needed) {
  if (needed != nullptr) *needed = text.size() + 1;
  if (buf == nullptr) return STRIPVIS_OK;
  if (cap < text.size() + 1) {
    return Fail(STRIPVIS_ERR_PARAMETER, "output buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return STRIPVIS_OK;
}

stripvis::Facing ToFacing(stripvis_facing facing) {
  switch (facing) {
    case STRIPVIS_FACING_UP_RIGHT: return stripvis::Facing::kUpRight;
    case STRIPVIS_FACING_UP_LEFT: return stripvis::Facing::kUpLeft;
    case STRIPVIS_FACING_DOWN_RIGHT: return stripvis::Facing::kDownRight;
    case STRIPVIS_FACING_DOWN_LEFT: return stripvis::Facing::kDownLeft;
  }
  throw stripvis::ParameterError("unknown staircase facing");
}

stripvis::Family ToFamily(stripvis_family family) {
  switch (family) {
    case STRIPVIS_FAMILY_ANY: return stripvis::Family::kAny;
    case STRIPVIS_FAMILY_STACK_BY_Y: return stripvis::Family::kStackByY;
    case STRIPVIS_FAMILY_STACK_BY_INVERSE_Y: return stripvis::Family::kStackByInverseY;
    case STRIPVIS_FAMILY_STAIRCASE: return stripvis::Family::kStaircase;
  }
  throw stripvis::ParameterError("unknown layout family");
}

stripvis::SvgOptions ToSvgOptions(const stripvis_svg_options* options) {
  stripvis::SvgOptions out;
  if (options == nullptr) return out;
  out.scale = options->scale;
  if (options->fill != nullptr) out.fill = options->fill;
  if (options->stroke != nullptr) out.stroke = options->stroke;
  out.stroke_width = options->stroke_width;
  return out;
}

}  // namespace

extern "C" {

const char* stripvis_version(void) { return "0.1.0"; }

const char* stripvis_last_error(void) { return last_error.c_str(); }

const char* stripvis_status_name(stripvis_status status) {
  switch (status) {
    case STRIPVIS_OK: return "ok";
    case STRIPVIS_ERR_INPUT: return "input error";
    case STRIPVIS_ERR_BOUNDS: return "bounds error";
    case STRIPVIS_ERR_PARAMETER: return "parameter error";
    case STRIPVIS_ERR_DOMAIN: return "domain error";
    case STRIPVIS_ERR_IO: return "i/o error";
    case STRIPVIS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

stripvis_status stripvis_instance_create(double width, double height,
                                         const double* ys, size_t n,
                                         stripvis_instance** out) {
  STRIPVIS_REQUIRE(out != nullptr, "out must not be NULL");
  STRIPVIS_REQUIRE(ys != nullptr || n == 0, "ys must not be NULL");
  return Guard([&] {
    *out = new stripvis_instance{
        stripvis::Instance(width, height, std::vector<double>(ys, ys + n))};
  });
}

void stripvis_instance_destroy(stripvis_instance* instance) { delete instance; }

size_t stripvis_instance_size(const stripvis_instance* instance) {
  return instance ? instance->value.ys().size() : 0;
}

double stripvis_instance_width(const stripvis_instance* instance) {
  return instance ? instance->value.width() : NAN;
}

double stripvis_instance_height(const stripvis_instance* instance) {
  return instance ? instance->value.height() : NAN;
}

stripvis_status stripvis_layout_create(const double* xs, const int32_t* zorder,
                                       size_t n, stripvis_layout** out) {
  STRIPVIS_REQUIRE(out != nullptr, "out must not be NULL");
  STRIPVIS_REQUIRE((xs != nullptr && zorder != nullptr) || n == 0,
                   "xs and zorder must not be NULL");
  return Guard([&] {
    stripvis::Layout layout;
    layout.xs.assign(xs, xs + n);
    layout.zorder.assign(zorder, zorder + n);
    *out = new stripvis_layout{std::move(layout)};
  });
}

void stripvis_layout_destroy(stripvis_layout* layout) { delete layout; }

size_t stripvis_layout_size(const stripvis_layout* layout) {
  return layout ? layout->value.xs.size() : 0;
}

stripvis_status stripvis_layout_get(const stripvis_layout* layout, double* xs,
                                    int32_t* zorder, size_t cap) {
  STRIPVIS_REQUIRE(layout != nullptr, "layout must not be NULL");
  const size_t n = std::min(cap, layout->value.xs.size());
  for (size_t i = 0; i < n; ++i) {
    if (xs) xs[i] = layout->value.xs[i];
    if (zorder) zorder[i] = layout->value.zorder[i];
  }
  return STRIPVIS_OK;
}

stripvis_status stripvis_water_fill(const double* dys, size_t m, double budget,
                                    double* dxs_out, double* g_star) {
  STRIPVIS_REQUIRE(dys != nullptr || m == 0, "dys must not be NULL");
  return Guard([&] {
    const auto sol = stripvis::WaterFill({dys, m}, budget);
    if (dxs_out) std::copy(sol.dxs.begin(), sol.dxs.end(), dxs_out);
    if (g_star) *g_star = sol.g_star;
  });
}

stripvis_status stripvis_staircase(const stripvis_instance* instance, double delta,
                                   stripvis_facing facing, stripvis_layout** out,
                                   double* g_star) {
  STRIPVIS_REQUIRE(instance != nullptr && out != nullptr,
                   "instance and out must not be NULL");
  return Guard([&] {
    auto result =
        stripvis::OptimizePointStabbed(instance->value, delta, ToFacing(facing));
    if (g_star) *g_star = result.g_star;
    *out = new stripvis_layout{std::move(result.layout)};
  });
}

stripvis_status stripvis_squeeze(const stripvis_instance* instance,
                                 double delta_stair, stripvis_layout** out,
                                 stripvis_squeeze_info* info) {
  STRIPVIS_REQUIRE(instance != nullptr && out != nullptr,
                   "instance and out must not be NULL");
  return Guard([&] {
    auto result = stripvis::Squeeze(instance->value, delta_stair);
    if (info) {
      info->delta_min = result.plan.delta_min;
      info->scale = result.scale;
      info->separation = result.separation;
      info->guaranteed_gap = result.guaranteed_gap;
      info->capped = result.capped ? 1 : 0;
      info->bucket_count = static_cast<int32_t>(result.plan.buckets.size());
    }
    *out = new stripvis_layout{std::move(result.layout)};
  });
}

stripvis_status stripvis_zigzag(const stripvis_instance* instance,
                                stripvis_layout** out) {
  STRIPVIS_REQUIRE(instance != nullptr && out != nullptr,
                   "instance and out must not be NULL");
  return Guard([&] { *out = new stripvis_layout{stripvis::Zigzag(instance->value)}; });
}

stripvis_status stripvis_jitter(const stripvis_instance* instance, uint64_t seed,
                                stripvis_layout** out) {
  STRIPVIS_REQUIRE(instance != nullptr && out != nullptr,
                   "instance and out must not be NULL");
  return Guard(
      [&] { *out = new stripvis_layout{stripvis::Jitter(instance->value, seed)}; });
}

stripvis_status stripvis_evaluate(const stripvis_instance* instance,
                                  const stripvis_layout* layout,
                                  stripvis_report** out) {
  STRIPVIS_REQUIRE(instance != nullptr && layout != nullptr && out != nullptr,
                   "instance, layout and out must not be NULL");
  return Guard([&] {
    *out = new stripvis_report{stripvis::Evaluate(instance->value, layout->value)};
  });
}

void stripvis_report_destroy(stripvis_report* report) { delete report; }

double stripvis_report_min_gap(const stripvis_report* report) {
  return report ? report->value.min_gap : NAN;
}

size_t stripvis_report_size(const stripvis_report* report) {
  return report ? report->value.squares.size() : 0;
}

stripvis_status stripvis_report_square(const stripvis_report* report, size_t index,
                                       stripvis_square_visibility* out) {
  STRIPVIS_REQUIRE(report != nullptr && out != nullptr,
                   "report and out must not be NULL");
  STRIPVIS_REQUIRE(index < report->value.squares.size(), "square index out of range");
  const auto& v = report->value.squares[index];
  *out = {v.left, v.right, v.top, v.bottom, v.perimeter(), report->value.gaps[index]};
  return STRIPVIS_OK;
}

stripvis_status stripvis_classify_bad_squares(const stripvis_instance* instance,
                                              const stripvis_layout* layout,
                                              stripvis_corner_status* out,
                                              size_t cap) {
  STRIPVIS_REQUIRE(instance != nullptr && layout != nullptr && out != nullptr,
                   "instance, layout and out must not be NULL");
  STRIPVIS_REQUIRE(cap >= instance->value.ys().size(), "output buffer too small");
  return Guard([&] {
    const auto status = stripvis::ClassifyBadSquares(instance->value, layout->value);
    for (size_t i = 0; i < status.size(); ++i) {
      out[i] = {status[i].covered_corners, status[i].bad ? 1 : 0,
                status[i].standard_bad ? 1 : 0};
    }
  });
}

stripvis_status stripvis_stickout_profile(const stripvis_instance* instance,
                                          const stripvis_layout* layout,
                                          stripvis_stickout* out, size_t cap,
                                          size_t* count) {
  STRIPVIS_REQUIRE(instance != nullptr && layout != nullptr,
                   "instance and layout must not be NULL");
  return Guard([&] {
    const auto profile = stripvis::ComputeStickout(instance->value, layout->value);
    if (count) *count = profile.entries.size();
    if (out == nullptr) return;
    if (cap < profile.entries.size()) {
      throw stripvis::ParameterError("output buffer too small");
    }
    for (size_t i = 0; i < profile.entries.size(); ++i) {
      const auto& e = profile.entries[i];
      out[i] = {e.square, e.dx, e.dy};
    }
  });
}

stripvis_status stripvis_lp_reference(const double* dys, size_t m, double budget,
                                      double* g_star) {
  STRIPVIS_REQUIRE(g_star != nullptr, "g_star must not be NULL");
  STRIPVIS_REQUIRE(dys != nullptr || m == 0, "dys must not be NULL");
  return Guard([&] { *g_star = stripvis::LpReference({dys, m}, budget); });
}

stripvis_status stripvis_grid_search(const stripvis_instance* instance,
                                     int32_t grid_steps, stripvis_family family,
                                     int32_t max_n, stripvis_layout** best,
                                     stripvis_grid_result* result) {
  STRIPVIS_REQUIRE(instance != nullptr, "instance must not be NULL");
  return Guard([&] {
    const auto found = stripvis::GridSearch(
        instance->value, grid_steps, ToFamily(family),
        max_n > 0 ? max_n : stripvis::kDefaultMaxN);
    if (result) {
      *result = {found.best_min_gap, found.resolution, found.orders_examined,
                 found.nodes_visited};
    }
    if (best) *best = new stripvis_layout{found.best_layout};
  });
}

stripvis_status stripvis_sample_visible_perimeter(const stripvis_instance* instance,
                                                  const stripvis_layout* layout,
                                                  int32_t samples_per_side,
                                                  uint64_t seed, double* perimeters,
                                                  double* stderrs, size_t cap) {
  STRIPVIS_REQUIRE(instance != nullptr && layout != nullptr,
                   "instance and layout must not be NULL");
  STRIPVIS_REQUIRE(cap >= instance->value.ys().size(), "output buffer too small");
  return Guard([&] {
    const auto est = stripvis::SampleVisiblePerimeter(instance->value, layout->value,
                                                      samples_per_side, seed);
    for (size_t i = 0; i < est.size(); ++i) {
      if (perimeters) perimeters[i] = est[i].perimeter;
      if (stderrs) stderrs[i] = est[i].stderr_estimate;
    }
  });
}

stripvis_status stripvis_dataset_load_csv(const char* path, stripvis_dataset** out) {
  STRIPVIS_REQUIRE(path != nullptr && out != nullptr, "path and out must not be NULL");
  return Guard([&] { *out = new stripvis_dataset{stripvis::IngestCsv(path)}; });
}

stripvis_status stripvis_dataset_parse_csv(const char* text, size_t len,
                                           stripvis_dataset** out) {
  STRIPVIS_REQUIRE((text != nullptr || len == 0) && out != nullptr,
                   "text and out must not be NULL");
  return Guard([&] {
    *out = new stripvis_dataset{stripvis::ParseCsv(std::string_view(text, len))};
  });
}

void stripvis_dataset_destroy(stripvis_dataset* dataset) { delete dataset; }

size_t stripvis_dataset_size(const stripvis_dataset* dataset) {
  return dataset ? dataset->value.ys.size() : 0;
}

double stripvis_dataset_y(const stripvis_dataset* dataset, size_t index) {
  if (!dataset || index >= dataset->value.ys.size()) return NAN;
  return dataset->value.ys[index];
}

const char* stripvis_dataset_id(const stripvis_dataset* dataset, size_t index) {
  if (!dataset || index >= dataset->value.ids.size()) return nullptr;
  return dataset->value.ids[index].c_str();
}

size_t stripvis_dataset_warning_count(const stripvis_dataset* dataset) {
  return dataset ? dataset->value.warnings.size() : 0;
}

const char* stripvis_dataset_warning(const stripvis_dataset* dataset, size_t index) {
  if (!dataset || index >= dataset->value.warnings.size()) return nullptr;
  return dataset->value.warnings[index].c_str();
}

stripvis_status stripvis_dataset_instance(const stripvis_dataset* dataset,
                                          double width, double height,
                                          stripvis_instance** out) {
  STRIPVIS_REQUIRE(dataset != nullptr && out != nullptr,
                   "dataset and out must not be NULL");
  return Guard([&] {
    *out = new stripvis_instance{dataset->value.ToInstance(width, height)};
  });
}

stripvis_status stripvis_document_create(const stripvis_dataset* dataset,
                                         const stripvis_instance* instance,
                                         const stripvis_layout* layout,
                                         const char* method,
                                         const char* const* param_keys,
                                         const char* const* param_values,
                                         size_t param_count,
                                         stripvis_document** out) {
  STRIPVIS_REQUIRE(instance != nullptr && layout != nullptr && out != nullptr,
                   "instance, layout and out must not be NULL");
  STRIPVIS_REQUIRE(param_count == 0 || (param_keys != nullptr && param_values != nullptr),
                   "parameter arrays must not be NULL");
  return Guard([&] {
    std::vector<std::pair<std::string, std::string>> params;
    for (size_t i = 0; i < param_count; ++i) {
      params.emplace_back(param_keys[i] ? param_keys[i] : "",
                          param_values[i] ? param_values[i] : "");
    }
    std::span<const std::string> ids;
    if (dataset != nullptr) {
      if (dataset->value.ys.size() != instance->value.ys().size()) {
        throw stripvis::InputError("dataset and instance sizes differ");
      }
      ids = dataset->value.ids;
    }
    *out = new stripvis_document{stripvis::MakeDocument(
        instance->value, layout->value, ids, method ? method : "", std::move(params))};
  });
}

void stripvis_document_destroy(stripvis_document* document) { delete document; }

stripvis_status stripvis_document_load(const char* path, stripvis_document** out) {
  STRIPVIS_REQUIRE(path != nullptr && out != nullptr, "path and out must not be NULL");
  return Guard([&] { *out = new stripvis_document{stripvis::LoadLayout(path)}; });
}

stripvis_status stripvis_document_save(const stripvis_document* document,
                                       const char* path) {
  STRIPVIS_REQUIRE(document != nullptr && path != nullptr,
                   "document and path must not be NULL");
  return Guard([&] { stripvis::SaveLayout(document->value, path); });
}

stripvis_status stripvis_document_from_json(const char* text, size_t len,
                                            stripvis_document** out) {
  STRIPVIS_REQUIRE((text != nullptr || len == 0) && out != nullptr,
                   "text and out must not be NULL");
  return Guard([&] {
    *out = new stripvis_document{stripvis::ParseLayout(std::string_view(text, len))};
  });
}

stripvis_status stripvis_document_to_json(const stripvis_document* document,
                                          char* buf, size_t cap, size_t* needed) {
  STRIPVIS_REQUIRE(document != nullptr, "document must not be NULL");
  std::string text;
  const stripvis_status st =
      Guard([&] { text = stripvis::EmitLayout(document->value); });
  if (st != STRIPVIS_OK) return st;
  return CopyText(text, buf, cap, needed);
}

size_t stripvis_document_size(const stripvis_document* document) {
  return document ? document->value.squares.size() : 0;
}

double stripvis_document_width(const stripvis_document* document) {
  return document ? document->value.width : NAN;
}

double stripvis_document_height(const stripvis_document* document) {
  return document ? document->value.height : NAN;
}

double stripvis_document_min_gap(const stripvis_document* document) {
  return document ? document->value.meta.min_gap : NAN;
}

const char* stripvis_document_method(const stripvis_document* document) {
  return document ? document->value.meta.method.c_str() : nullptr;
}

stripvis_status stripvis_document_square(const stripvis_document* document,
                                         size_t index, const char** id, double* x,
                                         double* y, int32_t* z) {
  STRIPVIS_REQUIRE(document != nullptr, "document must not be NULL");
  STRIPVIS_REQUIRE(index < document->value.squares.size(), "square index out of range");
  const auto& r = document->value.squares[index];
  if (id) *id = r.id.c_str();
  if (x) *x = r.x;
  if (y) *y = r.y;
  if (z) *z = r.z;
  return STRIPVIS_OK;
}

stripvis_status stripvis_document_instance(const stripvis_document* document,
                                           stripvis_instance** out) {
  STRIPVIS_REQUIRE(document != nullptr && out != nullptr,
                   "document and out must not be NULL");
  return Guard([&] { *out = new stripvis_instance{document->value.ToInstance()}; });
}

stripvis_status stripvis_document_layout(const stripvis_document* document,
                                         stripvis_layout** out) {
  STRIPVIS_REQUIRE(document != nullptr && out != nullptr,
                   "document and out must not be NULL");
  return Guard([&] { *out = new stripvis_layout{document->value.ToLayout()}; });
}

stripvis_status stripvis_document_report_json(const stripvis_document* document,
                                              char* buf, size_t cap, size_t* needed) {
  STRIPVIS_REQUIRE(document != nullptr, "document must not be NULL");
  std::string text;
  const stripvis_status st =
      Guard([&] { text = stripvis::ReportJson(document->value); });
  if (st != STRIPVIS_OK) return st;
  return CopyText(text, buf, cap, needed);
}

void stripvis_svg_options_default(stripvis_svg_options* options) {
  if (options == nullptr) return;
  static const stripvis::SvgOptions defaults;
  options->scale = defaults.scale;
  options->fill = defaults.fill.c_str();
  options->stroke = defaults.stroke.c_str();
  options->stroke_width = defaults.stroke_width;
}

stripvis_status stripvis_render_svg(const stripvis_document* document,
                                    const stripvis_svg_options* options, char* buf,
                                    size_t cap, size_t* needed) {
  STRIPVIS_REQUIRE(document != nullptr, "document must not be NULL");
  std::string text;
  const stripvis_status st = Guard(
      [&] { text = stripvis::RenderSvg(document->value, ToSvgOptions(options)); });
  if (st != STRIPVIS_OK) return st;
  return CopyText(text, buf, cap, needed);
}

stripvis_status stripvis_render_svg_file(const stripvis_document* document,
                                         const stripvis_svg_options* options,
                                         const char* path) {
  STRIPVIS_REQUIRE(document != nullptr && path != nullptr,
                   "document and path must not be NULL");
  return Guard([&] {
    const std::string text = stripvis::RenderSvg(document->value, ToSvgOptions(options));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw stripvis::IoError(std::string("cannot open '") + path + "' for writing");
    out << text;
    if (!out) throw stripvis::IoError(std::string("failed writing '") + path + "'");
  });
}

}  // extern "C"
