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


#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stripvis/csv.h"
#include "stripvis/document.h"
#include "stripvis/error.h"
#include "stripvis/strip.h"
#include "stripvis/svg.h"
#include "stripvis/visibility.h"
#include "test_support.h"

namespace stripvis {
namespace {

using testing::RandomInstance;
using testing::RandomLayout;

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("stripvis_io_" + std::to_string(::getpid()) + "_" + name);
}

TEST(CsvTest, LabelledRows) {
  const Dataset d = ParseCsv("a,0.5\nb,1.0");
  EXPECT_EQ(d.ids, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.ys, (std::vector<double>{0.5, 1.0}));
  const Instance inst = d.ToInstance(2.0, 0.0);
  EXPECT_DOUBLE_EQ(inst.height(), 1.5);
}

TEST(CsvTest, SortsAndCarriesLabels) {
  const Dataset d = ParseCsv("id,y\nq,1.75\nr,0.5\ns,1.0\n");
  EXPECT_EQ(d.ids, (std::vector<std::string>{"r", "s", "q"}));
  EXPECT_EQ(d.ys, (std::vector<double>{0.5, 1.0, 1.75}));
}

TEST(CsvTest, SingleColumnWithHeader) {
  const Dataset d = ParseCsv("y\n\n1.5\n0.5\n");
  EXPECT_EQ(d.ys, (std::vector<double>{0.5, 1.5}));
  EXPECT_EQ(d.ids, (std::vector<std::string>{"1", "0"}));
}

TEST(CsvTest, BadRowNamesLine) {
  try {
    ParseCsv("a,0.5\nb,1.0\nc,abc\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseCsv(""), InputError);
  EXPECT_THROW(ParseCsv("id,y\n"), InputError);
  EXPECT_THROW(ParseCsv("a,1,2\n"), InputError);
}

TEST(CsvTest, DuplicatesWarn) {
  const Dataset d = ParseCsv("a,0.5\nb,0.5\nc,1.0\n");
  EXPECT_TRUE(d.has_duplicates());
  EXPECT_EQ(d.warnings.size(), 1u);
  EXPECT_THROW(Squeeze(d.ToInstance(2.0, 0.0)), InputError);
}

TEST(CsvTest, MissingFileIsIoError) {
  EXPECT_THROW(IngestCsv("/nonexistent/stripvis.csv"), IoError);
}

TEST(DocumentTest, QuantisedMinGapIsExact) {
  std::mt19937_64 gen(21);
  for (int t = 0; t < 50; ++t) {
    Instance inst = RandomInstance(gen, 1.9, 4.0, 20);
    const LayoutDocument doc =
        MakeDocument(inst, Jitter(inst, t), {}, "jitter", {{"seed", std::to_string(t)}});
    const LayoutDocument back = ParseLayout(EmitLayout(doc));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(Evaluate(back.ToInstance(), back.ToLayout()).min_gap, doc.meta.min_gap);
  }
}

TEST(DocumentPropertyTest, RoundTripArbitraryDoubles) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (int t = 0; t < 200; ++t) {
    LayoutDocument doc;
    doc.width = 2.0;
    doc.height = 2.0 + u(gen);
    const int n = 1 + static_cast<int>(gen() % 12);
    std::vector<int> z(n);
    std::iota(z.begin(), z.end(), 0);
    std::shuffle(z.begin(), z.end(), gen);
    std::vector<double> ys(n);
    for (double& y : ys) y = u(gen);
    std::sort(ys.begin(), ys.end());
    for (int i = 0; i < n; ++i) {
      doc.squares.push_back({"s\"" + std::to_string(i), ys[i], u(gen), z[i]});
    }
    doc.meta = {"m", {{"k", "v"}, {"a", "b"}}, u(gen) - 1.0};
    EXPECT_EQ(ParseLayout(EmitLayout(doc)), doc);
  }
}

TEST(DocumentTest, SchemaErrors) {
  EXPECT_THROW(ParseLayout("{"), InputError);
  EXPECT_THROW(ParseLayout("[]"), InputError);
  EXPECT_THROW(ParseLayout(R"({"width":2,"height":2})"), InputError);
  EXPECT_THROW(ParseLayout(R"({"width":2,"height":2,"squares":[]})"), InputError);
  EXPECT_THROW(
      ParseLayout(R"({"width":2,"height":2,"squares":[{"id":"a","y":0.5,"x":1,"z":1}]})"),
      InputError);
  EXPECT_THROW(
      ParseLayout(R"({"width":2,"height":2,"squares":[{"id":"a","y":0.5,"x":1}]})"),
      InputError);
  const LayoutDocument ok =
      ParseLayout(R"({"width":2,"height":2,"squares":[{"id":"a","y":0.5,"x":1,"z":0}]})");
  EXPECT_EQ(ok.squares.size(), 1u);
}

TEST(DocumentTest, SaveAndLoad) {
  Instance inst(2.0, 2.0, {0.5, 1.0, 1.5});
  const LayoutDocument doc = MakeDocument(inst, Layout{{0.5, 1.0, 1.5}, {2, 0, 1}},
                                          std::vector<std::string>{"x", "y", "z"},
                                          "manual", {});
  const auto path = TempPath("doc.json");
  SaveLayout(doc, path.string());
  EXPECT_EQ(LoadLayout(path.string()), doc);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadLayout(path.string()), IoError);
  EXPECT_THROW(SaveLayout(doc, "/nonexistent/dir/doc.json"), IoError);
}

TEST(DocumentTest, ReportListsDiagnostics) {
  Instance inst(2.0, 2.0, {0.5, 0.75});
  const LayoutDocument doc = MakeDocument(inst, Layout::StackedByY({0.5, 0.75}), {},
                                          "manual", {});
  const std::string report = ReportJson(doc);
  EXPECT_NE(report.find("\"min_visible_perimeter\": 2.5"), std::string::npos) << report;
  EXPECT_NE(report.find("\"stickout_total\": 0.5"), std::string::npos) << report;
  EXPECT_NE(report.find("\"bad_squares\": 0"), std::string::npos) << report;
}

std::vector<std::string> RectTitles(const std::string& svg) {
  std::vector<std::string> out;
  const std::regex rect(R"(<rect class="square"[^>]*><title>([^<]*)</title></rect>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect);
       it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

TEST(SvgTest, RectsFollowStackingOrder) {
  Instance inst(2.0, 2.0, {0.5, 1.0, 1.5});
  const LayoutDocument doc = MakeDocument(inst, Layout{{0.5, 1.0, 1.5}, {1, 2, 0}},
                                          std::vector<std::string>{"a", "b", "c"},
                                          "manual", {});
  const std::string svg = RenderSvg(doc);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(RectTitles(svg), (std::vector<std::string>{"b", "c", "a"}));
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(SvgTest, EscapesAndOptions) {
  Instance inst(2.0, 2.0, {1.0});
  const LayoutDocument doc =
      MakeDocument(inst, Layout{{1.0}, {0}}, std::vector<std::string>{"<a&b>"}, "m", {});
  SvgOptions opts;
  opts.scale = 10;
  opts.fill = "red";
  const std::string svg = RenderSvg(doc, opts);
  EXPECT_NE(svg.find("&lt;a&amp;b&gt;"), std::string::npos);
  EXPECT_NE(svg.find("fill=\"red\""), std::string::npos);
  EXPECT_NE(svg.find("width=\"10\""), std::string::npos);
  opts.scale = 0;
  EXPECT_THROW(RenderSvg(doc, opts), ParameterError);
}

TEST(SvgTest, LargeLayoutRendersQuickly) {
  std::mt19937_64 gen(823);
  Instance inst = RandomInstance(gen, 2.0, 60.0, 823);
  const LayoutDocument doc = MakeDocument(inst, Squeeze(inst).layout, {}, "squeeze", {});
  const auto start = std::chrono::steady_clock::now();
  const std::string svg = RenderSvg(doc);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 1.0);
  EXPECT_EQ(RectTitles(svg).size(), 823u);
}

}  // namespace
}  // namespace stripvis
