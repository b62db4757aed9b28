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


// Command-line front end over the stripvis C API.

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stripvis/stripvis.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

template <auto Destroy>
struct Deleter {
  template <typename T>
  void operator()(T* p) const { Destroy(p); }
};

using InstancePtr = std::unique_ptr<stripvis_instance, Deleter<stripvis_instance_destroy>>;
using LayoutPtr = std::unique_ptr<stripvis_layout, Deleter<stripvis_layout_destroy>>;
using ReportPtr = std::unique_ptr<stripvis_report, Deleter<stripvis_report_destroy>>;
using DatasetPtr = std::unique_ptr<stripvis_dataset, Deleter<stripvis_dataset_destroy>>;
using DocumentPtr = std::unique_ptr<stripvis_document, Deleter<stripvis_document_destroy>>;

// Thrown by Check() to unwind to main with the status already reported.
struct Failure {
  stripvis_status status;
};

void Check(stripvis_status status) {
  if (status == STRIPVIS_OK) return;
  std::fprintf(stderr, "stripvis: %s: %s\n", stripvis_status_name(status),
               stripvis_last_error());
  throw Failure{status};
}

int ExitCodeFor(stripvis_status status) {
  switch (status) {
    case STRIPVIS_OK: return kExitOk;
    case STRIPVIS_ERR_INPUT:
    case STRIPVIS_ERR_BOUNDS:
    case STRIPVIS_ERR_PARAMETER:
    case STRIPVIS_ERR_IO: return kExitInput;
    case STRIPVIS_ERR_DOMAIN: return kExitDomain;
    case STRIPVIS_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string FormatParam(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "auto" or a positive number; auto maps to the C API's non-positive height.
double ParseHeight(const std::string& text) {
  if (text == "auto") return 0.0;
  std::size_t used = 0;
  double h = 0.0;
  try {
    h = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(h > 0.0)) {
    std::fprintf(stderr, "stripvis: --height must be a positive number or 'auto'\n");
    throw Failure{STRIPVIS_ERR_PARAMETER};
  }
  return h;
}

DatasetPtr LoadDataset(const std::string& path) {
  stripvis_dataset* raw = nullptr;
  Check(stripvis_dataset_load_csv(path.c_str(), &raw));
  DatasetPtr dataset(raw);
  for (size_t i = 0; i < stripvis_dataset_warning_count(raw); ++i) {
    std::fprintf(stderr, "warning: %s\n", stripvis_dataset_warning(raw, i));
  }
  return dataset;
}

InstancePtr MakeInstance(const stripvis_dataset* dataset, double width,
                         const std::string& height) {
  stripvis_instance* raw = nullptr;
  Check(stripvis_dataset_instance(dataset, width, ParseHeight(height), &raw));
  return InstancePtr(raw);
}

DocumentPtr MakeDocument(const stripvis_dataset* dataset,
                         const stripvis_instance* instance,
                         const stripvis_layout* layout, const std::string& method,
                         const std::vector<std::pair<std::string, std::string>>& params) {
  std::vector<const char*> keys, values;
  for (const auto& [k, v] : params) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  stripvis_document* raw = nullptr;
  Check(stripvis_document_create(dataset, instance, layout, method.c_str(),
                                 keys.data(), values.data(), params.size(), &raw));
  return DocumentPtr(raw);
}

DocumentPtr LoadDocument(const std::string& path) {
  stripvis_document* raw = nullptr;
  Check(stripvis_document_load(path.c_str(), &raw));
  return DocumentPtr(raw);
}

stripvis_facing ParseFacing(const std::string& name) {
  if (name == "up-right") return STRIPVIS_FACING_UP_RIGHT;
  if (name == "up-left") return STRIPVIS_FACING_UP_LEFT;
  if (name == "down-right") return STRIPVIS_FACING_DOWN_RIGHT;
  return STRIPVIS_FACING_DOWN_LEFT;
}

stripvis_family ParseFamily(const std::string& name) {
  if (name == "stack-by-y") return STRIPVIS_FAMILY_STACK_BY_Y;
  if (name == "stack-by-inverse-y") return STRIPVIS_FAMILY_STACK_BY_INVERSE_Y;
  if (name == "staircase") return STRIPVIS_FAMILY_STAIRCASE;
  return STRIPVIS_FAMILY_ANY;
}

struct OptimizeArgs {
  std::string input;
  double width = 0.0;
  std::string height = "auto";
  std::string method;
  double delta = 1e-6;
  std::uint64_t seed = 0;
  std::string facing = "up-right";
  std::string output;
};

void RunOptimize(const OptimizeArgs& args) {
  DatasetPtr dataset = LoadDataset(args.input);
  InstancePtr instance = MakeInstance(dataset.get(), args.width, args.height);

  stripvis_layout* raw = nullptr;
  std::vector<std::pair<std::string, std::string>> params;
  if (args.method == "staircase") {
    double g_star = 0.0;
    Check(stripvis_staircase(instance.get(), args.delta, ParseFacing(args.facing),
                             &raw, &g_star));
    params = {{"delta", FormatParam(args.delta)},
              {"facing", args.facing},
              {"g_star", FormatParam(g_star)}};
  } else if (args.method == "squeeze") {
    stripvis_squeeze_info info{};
    Check(stripvis_squeeze(instance.get(), args.delta, &raw, &info));
    params = {{"delta", FormatParam(args.delta)},
              {"bucket_gap", FormatParam(info.delta_min)},
              {"scale", FormatParam(info.scale)},
              {"guaranteed_gap", FormatParam(info.guaranteed_gap)},
              {"capped", info.capped ? "true" : "false"}};
  } else if (args.method == "zigzag") {
    Check(stripvis_zigzag(instance.get(), &raw));
  } else {
    Check(stripvis_jitter(instance.get(), args.seed, &raw));
    params = {{"seed", std::to_string(args.seed)}};
  }
  LayoutPtr layout(raw);

  DocumentPtr doc = MakeDocument(dataset.get(), instance.get(), layout.get(),
                                 args.method, params);
  Check(stripvis_document_save(doc.get(), args.output.c_str()));
  std::printf("min_gap %s\n", FormatDouble(stripvis_document_min_gap(doc.get())).c_str());
}

struct EvalArgs {
  std::string layout;
  std::string report;
};

void RunEval(const EvalArgs& args) {
  DocumentPtr doc = LoadDocument(args.layout);
  stripvis_instance* raw_instance = nullptr;
  Check(stripvis_document_instance(doc.get(), &raw_instance));
  InstancePtr instance(raw_instance);
  stripvis_layout* raw_layout = nullptr;
  Check(stripvis_document_layout(doc.get(), &raw_layout));
  LayoutPtr layout(raw_layout);

  stripvis_report* raw_report = nullptr;
  Check(stripvis_evaluate(instance.get(), layout.get(), &raw_report));
  ReportPtr report(raw_report);

  std::printf("min_gap %s\n", FormatDouble(stripvis_report_min_gap(report.get())).c_str());
  for (size_t i = 0; i < stripvis_report_size(report.get()); ++i) {
    stripvis_square_visibility v{};
    Check(stripvis_report_square(report.get(), i, &v));
    const char* id = nullptr;
    Check(stripvis_document_square(doc.get(), i, &id, nullptr, nullptr, nullptr));
    std::printf("%s %s\n", id, FormatDouble(v.perimeter).c_str());
  }

  if (!args.report.empty()) {
    size_t needed = 0;
    Check(stripvis_document_report_json(doc.get(), nullptr, 0, &needed));
    std::string text(needed, '\0');
    Check(stripvis_document_report_json(doc.get(), text.data(), text.size(), &needed));
    text.resize(needed - 1);
    std::FILE* f = std::fopen(args.report.c_str(), "wb");
    if (f == nullptr) {
      std::fprintf(stderr, "stripvis: IO: cannot write '%s'\n", args.report.c_str());
      throw Failure{STRIPVIS_ERR_IO};
    }
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) {
      std::fprintf(stderr, "stripvis: IO: failed writing '%s'\n", args.report.c_str());
      throw Failure{STRIPVIS_ERR_IO};
    }
  }
}

struct OracleArgs {
  std::string input;
  int grid_steps = 0;
  double width = 2.0;
  std::string height = "auto";
  std::string family = "any";
  int max_n = 8;
  std::string output;
};

void RunOracle(const OracleArgs& args) {
  DatasetPtr dataset = LoadDataset(args.input);
  InstancePtr instance = MakeInstance(dataset.get(), args.width, args.height);

  stripvis_layout* raw = nullptr;
  stripvis_grid_result result{};
  Check(stripvis_grid_search(instance.get(), args.grid_steps, ParseFamily(args.family),
                             args.max_n, &raw, &result));
  LayoutPtr layout(raw);

  std::printf("family %s\n", args.family.c_str());
  std::printf("best_min_gap %s\n", FormatDouble(result.best_min_gap).c_str());
  std::printf("resolution %s\n", FormatDouble(result.resolution).c_str());
  std::printf("orders_examined %" PRId64 "\n", result.orders_examined);
  std::printf("nodes_visited %" PRId64 "\n", result.nodes_visited);

  if (!args.output.empty()) {
    DocumentPtr doc = MakeDocument(
        dataset.get(), instance.get(), layout.get(), "oracle",
        {{"family", args.family},
         {"grid_steps", std::to_string(args.grid_steps)},
         {"best_min_gap", FormatParam(result.best_min_gap)}});
    Check(stripvis_document_save(doc.get(), args.output.c_str()));
  }
}

struct RenderArgs {
  std::string layout;
  std::string output;
  std::optional<double> scale;
  std::optional<std::string> fill;
  std::optional<std::string> stroke;
  std::optional<double> stroke_width;
};

void RunRender(const RenderArgs& args) {
  DocumentPtr doc = LoadDocument(args.layout);
  stripvis_svg_options options;
  stripvis_svg_options_default(&options);
  if (args.scale) options.scale = *args.scale;
  if (args.fill) options.fill = args.fill->c_str();
  if (args.stroke) options.stroke = args.stroke->c_str();
  if (args.stroke_width) options.stroke_width = *args.stroke_width;
  Check(stripvis_render_svg_file(doc.get(), &options, args.output.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Place unit squares in a strip so every square keeps a large visible perimeter.",
               "stripvis"};
  app.set_version_flag("--version", stripvis_version());
  app.require_subcommand(1);

  OptimizeArgs optimize;
  CLI::App* opt = app.add_subcommand("optimize", "compute a layout for a CSV of y-values");
  opt->add_option("--input", optimize.input, "CSV with rows 'id,y' or 'y'")->required();
  opt->add_option("--width", optimize.width, "strip width, 1 < w <= 2")->required();
  opt->add_option("--height", optimize.height, "strip height or 'auto' (max y + 1/2)")
      ->capture_default_str();
  opt->add_option("--method", optimize.method)
      ->required()
      ->check(CLI::IsMember({"staircase", "squeeze", "zigzag", "jitter"}));
  opt->add_option("--delta", optimize.delta, "allowed loss against the staircase optimum")
      ->capture_default_str();
  opt->add_option("--seed", optimize.seed, "jitter seed")->capture_default_str();
  opt->add_option("--facing", optimize.facing, "staircase facing")
      ->check(CLI::IsMember({"up-right", "up-left", "down-right", "down-left"}))
      ->capture_default_str();
  opt->add_option("--output", optimize.output, "layout JSON to write")->required();

  EvalArgs eval;
  CLI::App* ev = app.add_subcommand("eval", "report visible perimeters of a saved layout");
  ev->add_option("--layout", eval.layout)->required();
  ev->add_option("--report", eval.report, "write a JSON report with per-square diagnostics");

  OracleArgs oracle;
  CLI::App* orc = app.add_subcommand("oracle", "exhaustive grid search on a small instance");
  orc->add_option("--input", oracle.input)->required();
  orc->add_option("--grid-steps", oracle.grid_steps, "x positions per square")->required();
  orc->add_option("--width", oracle.width)->capture_default_str();
  orc->add_option("--height", oracle.height)->capture_default_str();
  orc->add_option("--family", oracle.family)
      ->check(CLI::IsMember({"any", "stack-by-y", "stack-by-inverse-y", "staircase"}))
      ->capture_default_str();
  orc->add_option("--max-n", oracle.max_n, "refuse larger instances")->capture_default_str();
  orc->add_option("--output", oracle.output, "write the best layout as JSON");

  RenderArgs render;
  CLI::App* ren = app.add_subcommand("render", "draw a saved layout as SVG");
  ren->add_option("--layout", render.layout)->required();
  ren->add_option("--output", render.output)->required();
  ren->add_option("--scale", render.scale, "pixels per unit");
  ren->add_option("--fill", render.fill);
  ren->add_option("--stroke", render.stroke);
  ren->add_option("--stroke-width", render.stroke_width);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (opt->parsed()) {
      RunOptimize(optimize);
    } else if (ev->parsed()) {
      RunEval(eval);
    } else if (orc->parsed()) {
      RunOracle(oracle);
    } else {
      RunRender(render);
    }
  } catch (const Failure& f) {
    return ExitCodeFor(f.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "stripvis: %s\n", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
