// Copyright 2026 The covscreen Authors
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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/eval.hpp"

namespace covscreen::report {

struct MetricsRow {
  std::string system;
  std::string averaging;  // vaccine | therapeutics | micro | macro | free text
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Four rows per system: vaccine, therapeutics, micro, macro.
std::vector<MetricsRow> MetricsRows(const std::string& system,
                                    const eval::PositiveMetrics& m);

struct Report {
  std::vector<MetricsRow> metrics;
  std::optional<eval::CategoryTable> categories;
  std::optional<double> kappa;
};

enum class Format { kMarkdown, kCsv };

// Deterministic rendering; every number is printed with two decimals.
std::string Render(const Report& report, Format format);

// Category section alone as CSV: category,total,percent,<system...>.
std::string RenderCategoryCsv(const eval::CategoryTable& table);

// Inverse of RenderCategoryCsv (assignments are not carried).
eval::CategoryTable ParseCategoryCsv(std::string_view text, std::string_view source);

// Header `system<TAB>averaging<TAB>precision<TAB>recall<TAB>f_measure`, then
// one row per line.
std::vector<MetricsRow> ParseMetricsTsv(std::string_view text, std::string_view source);

}  // namespace covscreen::report
