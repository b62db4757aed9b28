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

#include "stripvis/csv.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "stripvis/error.h"

namespace stripvis {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseNumber(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool Dataset::has_duplicates() const {
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (ys[i] == ys[i - 1]) return true;
  }
  return false;
}

double Dataset::AutoHeight() const {
  if (ys.empty()) return 0.0;
  return ys.back() + kHalf;
}

Instance Dataset::ToInstance(double width, double height) const {
  return Instance(width, height > 0.0 ? height : AutoHeight(), ys);
}

Dataset ParseCsv(std::string_view text) {
  std::vector<std::string> ids;
  std::vector<double> ys;
  int line_no = 0;
  bool seen_row = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(Trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() > 2) {
      std::ostringstream os;
      os << "line " << line_no << ": expected `id,y` or `y`, found "
         << fields.size() << " fields";
      throw InputError(os.str());
    }
    const std::string_view y_field = fields.back();
    double y = 0.0;
    if (!ParseNumber(y_field, y)) {
      const bool header = !seen_row && Lower(y_field) == "y" &&
                          (fields.size() == 1 || Lower(fields[0]) == "id");
      seen_row = true;
      if (header) continue;
      std::ostringstream os;
      os << "line " << line_no << ": cannot parse y-value '" << y_field << "'";
      throw InputError(os.str());
    }
    seen_row = true;
    ids.emplace_back(fields.size() == 2 ? std::string(fields[0])
                                        : std::to_string(ys.size()));
    ys.push_back(y);
  }
  if (ys.empty()) throw InputError("input contains no data rows");

  std::vector<std::size_t> order(ys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ys[a] < ys[b]; });
  Dataset data;
  data.ids.reserve(order.size());
  data.ys.reserve(order.size());
  for (std::size_t idx : order) {
    data.ids.push_back(std::move(ids[idx]));
    data.ys.push_back(ys[idx]);
  }
  for (std::size_t i = 1; i < data.ys.size(); ++i) {
    if (data.ys[i] == data.ys[i - 1]) {
      std::ostringstream os;
      os << "duplicate y = " << data.ys[i] << " for ids '" << data.ids[i - 1]
         << "' and '" << data.ids[i] << "'; optimizers require distinct values";
      data.warnings.push_back(os.str());
    }
  }
  return data;
}

Dataset IngestCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str());
}

}  // namespace stripvis
