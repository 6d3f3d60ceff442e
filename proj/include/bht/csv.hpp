// Copyright 2026 The bh-transport Authors
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

#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>

#include "bht/errors.hpp"

namespace bht {

// Locale-independent, deterministic cell formatting: CSV files must be
// byte-identical for identical inputs.
inline std::string csv_format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<const char*> header)
      : out_(path) {
    if (!out_) throw InvalidArgument("cannot open " + path.string() + " for writing");
    bool first = true;
    for (const char* h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Ts>
  void row(const Ts&... values) {
    bool first = true;
    (write_cell(values, first), ...);
    out_ << '\n';
  }

 private:
  void write_cell(double v, bool& first) { sep(first); out_ << csv_format(v); }
  void write_cell(int v, bool& first) { sep(first); out_ << v; }
  void write_cell(long v, bool& first) { sep(first); out_ << v; }
  void write_cell(std::size_t v, bool& first) { sep(first); out_ << v; }
  void write_cell(const std::string& v, bool& first) { sep(first); out_ << v; }
  void write_cell(const char* v, bool& first) { sep(first); out_ << v; }
  void sep(bool& first) {
    if (!first) out_ << ',';
    first = false;
  }

  std::ofstream out_;
};

}  // namespace bht
