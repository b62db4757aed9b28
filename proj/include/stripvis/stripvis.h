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

/*
 * stripvis C API.
 *
 * Places unit-square symbols at fixed y-coordinates inside a strip of width
 * 1 < w <= 2, choosing x-coordinates and a stacking order so that the
 * smallest visible perimeter is as large as possible.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function (NULL is accepted). Functions return a
 * stripvis_status; on failure stripvis_last_error() describes the problem.
 * The message is thread-local and valid until the next failing call on the
 * same thread. Handles are immutable after creation and may be shared
 * between threads.
 *
 * Functions that produce text take (buf, cap, needed): *needed receives the
 * size including the terminating NUL. Passing buf == NULL only queries the
 * size; a non-NULL buffer smaller than *needed yields STRIPVIS_ERR_PARAMETER.
 */
#ifndef STRIPVIS_STRIPVIS_H_
#define STRIPVIS_STRIPVIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STRIPVIS_BUILDING)
#    define STRIPVIS_API __declspec(dllexport)
#  else
#    define STRIPVIS_API __declspec(dllimport)
#  endif
#else
#  define STRIPVIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stripvis_status {
  STRIPVIS_OK = 0,
  STRIPVIS_ERR_INPUT = 1,     /* malformed data, size mismatch, tied y */
  STRIPVIS_ERR_BOUNDS = 2,    /* x outside [1/2, w - 1/2] */
  STRIPVIS_ERR_PARAMETER = 3, /* bad argument value or buffer too small */
  STRIPVIS_ERR_DOMAIN = 4,    /* instance not supported by the method */
  STRIPVIS_ERR_IO = 5,
  STRIPVIS_ERR_INTERNAL = 6
} stripvis_status;

typedef enum stripvis_facing {
  STRIPVIS_FACING_UP_RIGHT = 0,
  STRIPVIS_FACING_UP_LEFT = 1,
  STRIPVIS_FACING_DOWN_RIGHT = 2,
  STRIPVIS_FACING_DOWN_LEFT = 3
} stripvis_facing;

typedef enum stripvis_family {
  STRIPVIS_FAMILY_ANY = 0,
  STRIPVIS_FAMILY_STACK_BY_Y = 1,
  STRIPVIS_FAMILY_STACK_BY_INVERSE_Y = 2,
  STRIPVIS_FAMILY_STAIRCASE = 3
} stripvis_family;

typedef struct stripvis_instance stripvis_instance;
typedef struct stripvis_layout stripvis_layout;
typedef struct stripvis_report stripvis_report;
typedef struct stripvis_dataset stripvis_dataset;
typedef struct stripvis_document stripvis_document;

STRIPVIS_API const char* stripvis_version(void);
STRIPVIS_API const char* stripvis_last_error(void);
STRIPVIS_API const char* stripvis_status_name(stripvis_status status);

/* ---- instances and layouts ------------------------------------------- */

/* ys must be sorted ascending and lie in [1/2, h - 1/2]. */
STRIPVIS_API stripvis_status stripvis_instance_create(double width, double height,
                                                      const double* ys, size_t n,
                                                      stripvis_instance** out);
STRIPVIS_API void stripvis_instance_destroy(stripvis_instance* instance);
STRIPVIS_API size_t stripvis_instance_size(const stripvis_instance* instance);
STRIPVIS_API double stripvis_instance_width(const stripvis_instance* instance);
STRIPVIS_API double stripvis_instance_height(const stripvis_instance* instance);

/* zorder lists square indices back-to-front. No validation against an
 * instance happens until the layout is used with one. */
STRIPVIS_API stripvis_status stripvis_layout_create(const double* xs,
                                                    const int32_t* zorder, size_t n,
                                                    stripvis_layout** out);
STRIPVIS_API void stripvis_layout_destroy(stripvis_layout* layout);
STRIPVIS_API size_t stripvis_layout_size(const stripvis_layout* layout);
/* Copies min(cap, size) entries; either output pointer may be NULL. */
STRIPVIS_API stripvis_status stripvis_layout_get(const stripvis_layout* layout,
                                                 double* xs, int32_t* zorder,
                                                 size_t cap);

/* ---- optimisers ------------------------------------------------------- */

/* Optimal level g* of: max g s.t. dx_i + dy_i >= g, sum dx_i <= budget,
 * dx_i >= 0. dxs_out (may be NULL) receives m entries. */
STRIPVIS_API stripvis_status stripvis_water_fill(const double* dys, size_t m,
                                                 double budget, double* dxs_out,
                                                 double* g_star);

/* Proper staircase within delta of the supremum gap; requires h <= 2. */
STRIPVIS_API stripvis_status stripvis_staircase(const stripvis_instance* instance,
                                                double delta, stripvis_facing facing,
                                                stripvis_layout** out,
                                                double* g_star);

typedef struct stripvis_squeeze_info {
  double delta_min;      /* smallest per-bucket staircase gap */
  double scale;          /* factor applied to bucket x-offsets */
  double separation;     /* distance between left and right halves */
  double guaranteed_gap; /* min(scale * delta_min, separation) */
  int32_t capped;        /* 1 if delta_min >= w - 1 forced scale = 1/4 */
  int32_t bucket_count;
} stripvis_squeeze_info;

STRIPVIS_API stripvis_status stripvis_squeeze(const stripvis_instance* instance,
                                              double delta_stair,
                                              stripvis_layout** out,
                                              stripvis_squeeze_info* info);
STRIPVIS_API stripvis_status stripvis_zigzag(const stripvis_instance* instance,
                                             stripvis_layout** out);
STRIPVIS_API stripvis_status stripvis_jitter(const stripvis_instance* instance,
                                             uint64_t seed, stripvis_layout** out);

/* ---- evaluation and diagnostics -------------------------------------- */

typedef struct stripvis_square_visibility {
  double left, right, top, bottom;
  double perimeter;
  double gap; /* perimeter - 2 */
} stripvis_square_visibility;

STRIPVIS_API stripvis_status stripvis_evaluate(const stripvis_instance* instance,
                                               const stripvis_layout* layout,
                                               stripvis_report** out);
STRIPVIS_API void stripvis_report_destroy(stripvis_report* report);
STRIPVIS_API double stripvis_report_min_gap(const stripvis_report* report);
STRIPVIS_API size_t stripvis_report_size(const stripvis_report* report);
STRIPVIS_API stripvis_status stripvis_report_square(const stripvis_report* report,
                                                    size_t index,
                                                    stripvis_square_visibility* out);

typedef struct stripvis_corner_status {
  int32_t covered_corners;
  int32_t bad;          /* at least two covered corners */
  int32_t standard_bad; /* bad with a vertical side fully covered */
} stripvis_corner_status;

/* out must hold instance size entries (cap). */
STRIPVIS_API stripvis_status stripvis_classify_bad_squares(
    const stripvis_instance* instance, const stripvis_layout* layout,
    stripvis_corner_status* out, size_t cap);

typedef struct stripvis_stickout {
  int32_t square;
  double dx, dy;
} stripvis_stickout;

/* One entry per non-top square in stacking order; *count receives n - 1.
 * out may be NULL to query the count. */
STRIPVIS_API stripvis_status stripvis_stickout_profile(
    const stripvis_instance* instance, const stripvis_layout* layout,
    stripvis_stickout* out, size_t cap, size_t* count);

/* ---- verification ----------------------------------------------------- */

STRIPVIS_API stripvis_status stripvis_lp_reference(const double* dys, size_t m,
                                                   double budget, double* g_star);

typedef struct stripvis_grid_result {
  double best_min_gap;
  double resolution;
  int64_t orders_examined;
  int64_t nodes_visited;
} stripvis_grid_result;

/* max_n <= 0 selects the default limit of 8 squares. best may be NULL. */
STRIPVIS_API stripvis_status stripvis_grid_search(const stripvis_instance* instance,
                                                  int32_t grid_steps,
                                                  stripvis_family family,
                                                  int32_t max_n,
                                                  stripvis_layout** best,
                                                  stripvis_grid_result* result);

/* Monte-Carlo visible perimeter per square; perimeters and stderrs (either
 * may be NULL) must hold instance size entries. */
STRIPVIS_API stripvis_status stripvis_sample_visible_perimeter(
    const stripvis_instance* instance, const stripvis_layout* layout,
    int32_t samples_per_side, uint64_t seed, double* perimeters, double* stderrs,
    size_t cap);

/* ---- data files and documents ---------------------------------------- */

/* CSV rows `id,y` or `y`, optional header; values sorted by y on load. */
STRIPVIS_API stripvis_status stripvis_dataset_load_csv(const char* path,
                                                       stripvis_dataset** out);
STRIPVIS_API stripvis_status stripvis_dataset_parse_csv(const char* text, size_t len,
                                                        stripvis_dataset** out);
STRIPVIS_API void stripvis_dataset_destroy(stripvis_dataset* dataset);
STRIPVIS_API size_t stripvis_dataset_size(const stripvis_dataset* dataset);
STRIPVIS_API double stripvis_dataset_y(const stripvis_dataset* dataset, size_t index);
STRIPVIS_API const char* stripvis_dataset_id(const stripvis_dataset* dataset,
                                             size_t index);
STRIPVIS_API size_t stripvis_dataset_warning_count(const stripvis_dataset* dataset);
STRIPVIS_API const char* stripvis_dataset_warning(const stripvis_dataset* dataset,
                                                  size_t index);
/* height <= 0 selects max(y) + 1/2. */
STRIPVIS_API stripvis_status stripvis_dataset_instance(const stripvis_dataset* dataset,
                                                       double width, double height,
                                                       stripvis_instance** out);

/* Quantises coordinates to 12 significant digits and records the min gap of
 * the quantised layout. dataset may be NULL (ids become "0", "1", ...). */
STRIPVIS_API stripvis_status stripvis_document_create(
    const stripvis_dataset* dataset, const stripvis_instance* instance,
    const stripvis_layout* layout, const char* method,
    const char* const* param_keys, const char* const* param_values,
    size_t param_count, stripvis_document** out);
STRIPVIS_API void stripvis_document_destroy(stripvis_document* document);
STRIPVIS_API stripvis_status stripvis_document_load(const char* path,
                                                    stripvis_document** out);
STRIPVIS_API stripvis_status stripvis_document_save(const stripvis_document* document,
                                                    const char* path);
STRIPVIS_API stripvis_status stripvis_document_from_json(const char* text, size_t len,
                                                         stripvis_document** out);
STRIPVIS_API stripvis_status stripvis_document_to_json(
    const stripvis_document* document, char* buf, size_t cap, size_t* needed);
STRIPVIS_API size_t stripvis_document_size(const stripvis_document* document);
STRIPVIS_API double stripvis_document_width(const stripvis_document* document);
STRIPVIS_API double stripvis_document_height(const stripvis_document* document);
STRIPVIS_API double stripvis_document_min_gap(const stripvis_document* document);
STRIPVIS_API const char* stripvis_document_method(const stripvis_document* document);
/* *id stays valid for the lifetime of the document. */
STRIPVIS_API stripvis_status stripvis_document_square(
    const stripvis_document* document, size_t index, const char** id, double* x,
    double* y, int32_t* z);
STRIPVIS_API stripvis_status stripvis_document_instance(
    const stripvis_document* document, stripvis_instance** out);
STRIPVIS_API stripvis_status stripvis_document_layout(
    const stripvis_document* document, stripvis_layout** out);
/* Per-square visibility, corner flags and stick-out, as JSON. */
STRIPVIS_API stripvis_status stripvis_document_report_json(
    const stripvis_document* document, char* buf, size_t cap, size_t* needed);

typedef struct stripvis_svg_options {
  double scale; /* pixels per unit */
  const char* fill;
  const char* stroke;
  double stroke_width;
} stripvis_svg_options;

STRIPVIS_API void stripvis_svg_options_default(stripvis_svg_options* options);
/* options may be NULL for defaults. */
STRIPVIS_API stripvis_status stripvis_render_svg(const stripvis_document* document,
                                                 const stripvis_svg_options* options,
                                                 char* buf, size_t cap,
                                                 size_t* needed);
STRIPVIS_API stripvis_status stripvis_render_svg_file(
    const stripvis_document* document, const stripvis_svg_options* options,
    const char* path);

#ifdef __cplusplus
}
#endif

#endif /* STRIPVIS_STRIPVIS_H_ */
