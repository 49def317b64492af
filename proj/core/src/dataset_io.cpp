// Copyright 2026 The clusterbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterbench/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "clusterbench/error.hpp"

namespace clusterbench::io {

namespace {

constexpr std::string_view kMagic = "# clusterbench-dataset v1;";

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::size_t column, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\r')) --last;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'", line, column);
  return value;
}

// Parses "key=value" fields separated by ';' after the magic prefix.
datagen::DatasetSpec parse_header(std::string_view header) {
  if (header.substr(0, kMagic.size()) != kMagic) throw ParseError("missing clusterbench-dataset v1 header", 1, 1);
  datagen::DatasetSpec spec;
  bool seen[6] = {};
  std::string_view rest = header.substr(kMagic.size());
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    std::string_view field = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("header field without '='", 1, 0);
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    if (key == "C") {
      spec.num_classes = parse_number<std::size_t>(value, 1, 0, "C"), seen[0] = true;
    } else if (key == "F") {
      spec.num_features = parse_number<std::size_t>(value, 1, 0, "F"), seen[1] = true;
    } else if (key == "Ne") {
      spec.objects_per_class = parse_number<std::size_t>(value, 1, 0, "Ne"), seen[2] = true;
    } else if (key == "alpha") {
      spec.alpha = parse_number<double>(value, 1, 0, "alpha"), seen[3] = true;
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(value, 1, 0, "seed"), seen[4] = true;
    } else if (key == "realization") {
      spec.realization_index = parse_number<std::size_t>(value, 1, 0, "realization"), seen[5] = true;
    } else {
      throw ParseError("unknown header field '" + std::string(key) + "'", 1, 0);
    }
  }
  for (bool s : seen)
    if (!s) throw ParseError("header is missing a required field", 1, 0);
  if (spec.num_classes == 0 || spec.num_features == 0 || spec.objects_per_class == 0)
    throw ParseError("header declares an empty dataset", 1, 0);
  return spec;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_dataset(std::ostream& out, const datagen::Dataset& ds) {
  const auto& s = ds.spec;
  out << kMagic << " C=" << s.num_classes << ";F=" << s.num_features << ";Ne=" << s.objects_per_class
      << ";alpha=" << format_real(s.alpha) << ";seed=" << s.seed << ";realization=" << s.realization_index << '\n';
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (double v : ds.features.row(i)) out << format_real(v) << ',';
    out << ds.labels[i] << '\n';
  }
}

void write_dataset(const std::filesystem::path& path, const datagen::Dataset& ds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot open " + path.string() + " for writing");
  write_dataset(out, ds);
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + path.string());
}

datagen::Dataset read_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file", 1, 0);
  const auto spec = parse_header(line);

  const std::size_t f = spec.num_features;
  const std::size_t n = spec.num_classes * spec.objects_per_class;
  linalg::Matrix features(n, f);
  std::vector<int> labels(n);
  std::vector<std::size_t> per_class(spec.num_classes, 0);

  std::size_t row = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (row == n) throw ParseError("more rows than C * Ne = " + std::to_string(n), line_no, 0);
    std::string_view rest(line);
    for (std::size_t col = 0; col <= f; ++col) {
      const auto comma = rest.find(',');
      const bool last = col == f;
      if (last != (comma == std::string_view::npos))
        throw ParseError("expected " + std::to_string(f + 1) + " columns", line_no, col + 1);
      const auto cell = rest.substr(0, comma);
      if (!last) {
        features(row, col) = parse_number<double>(cell, line_no, col + 1, "feature value");
        rest = rest.substr(comma + 1);
      } else {
        const int label = parse_number<int>(cell, line_no, col + 1, "label");
        if (label < 0 || static_cast<std::size_t>(label) >= spec.num_classes)
          throw ParseError("label " + std::to_string(label) + " outside [0, C)", line_no, col + 1);
        labels[row] = label;
        ++per_class[static_cast<std::size_t>(label)];
      }
    }
    ++row;
  }
  if (row != n)
    throw ParseError("truncated: found " + std::to_string(row) + " rows, header declares " + std::to_string(n),
                     line_no + 1, 0);
  for (std::size_t c = 0; c < spec.num_classes; ++c)
    if (per_class[c] != spec.objects_per_class)
      throw ParseError("class " + std::to_string(c) + " has " + std::to_string(per_class[c]) + " rows, expected " +
                           std::to_string(spec.objects_per_class),
                       line_no, 0);

  datagen::Dataset ds;
  ds.features = std::move(features);
  ds.labels = std::move(labels);
  ds.spec = spec;
  return ds;
}

datagen::Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open " + path.string());
  return read_dataset(in);
}

}  // namespace clusterbench::io
