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
#include <string>
#include <string_view>
#include <vector>

namespace covscreen::csv {

struct Record {
  std::size_t line;  // 1-based physical line the record starts on
  std::vector<std::string> fields;
};

// RFC-4180 reader. Accepts LF or CRLF record separators, quoted fields with
// embedded separators/newlines and doubled quotes, and a leading UTF-8 BOM.
// Empty physical lines are skipped. Throws ParseError naming the line of an
// unterminated quote or of text following a closing quote.
std::vector<Record> Parse(std::string_view text, std::string_view source);

// Quotes the field when it contains ',', '"', CR or LF.
std::string Escape(std::string_view field);

}  // namespace covscreen::csv
