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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace covscreen::io {

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// A physical line with its 1-based line number. Trailing '\r' is removed.
struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits on '\n'. Blank (whitespace-only) lines are skipped.
std::vector<Line> NonBlankLines(std::string_view text);

std::vector<std::string_view> SplitTabs(std::string_view line);
std::vector<std::string_view> Split(std::string_view s, char sep);

std::string_view Trim(std::string_view s);

// Strict full-string parses; throw ParseError mentioning `where`.
double ParseDouble(std::string_view s, std::string_view where);
std::uint64_t ParseUint(std::string_view s, std::string_view where);

// printf-style fixed-point rendering, locale independent.
std::string FormatFixed(double v, int decimals);

}  // namespace covscreen::io
