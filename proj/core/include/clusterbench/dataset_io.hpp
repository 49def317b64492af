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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "clusterbench/datagen.hpp"

namespace clusterbench::io {

// Text format, one object per line:
//   # clusterbench-dataset v1; C=<C>;F=<F>;Ne=<Ne>;alpha=<a>;seed=<s>;realization=<r>
//   x_1,...,x_F,label
// Reals are written with 17 significant digits so a read reproduces every bit.
void write_dataset(std::ostream& out, const datagen::Dataset& ds);
void write_dataset(const std::filesystem::path& path, const datagen::Dataset& ds);

// Throws ParseError naming the offending line and column. Nothing is returned on failure.
datagen::Dataset read_dataset(std::istream& in);
datagen::Dataset load_dataset(const std::filesystem::path& path);

// Shortest form is not needed here; always 17 significant digits.
std::string format_real(double v);

}  // namespace clusterbench::io
