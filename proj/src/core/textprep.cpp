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

#include "core/textprep.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "core/error.hpp"
#include "core/io.hpp"

namespace covscreen {

namespace {

// Decodes one code point at `i`, advancing it; invalid sequences yield -1.
UChar32 NextCodePoint(std::string_view s, std::size_t& i) {
  UChar32 c;
  int32_t pos = static_cast<int32_t>(i);
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), pos,
          static_cast<int32_t>(s.size()), c);
  i = static_cast<std::size_t>(pos);
  return c;
}

void AppendUtf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

TokenSequence Tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const UChar32 c = NextCodePoint(text, i);
    if (c >= 0 && u_isalnum(c)) {
      AppendUtf8(current, u_tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> segments;
  auto emit = [&](std::string_view piece) {
    auto t = io::Trim(piece);
    if (!t.empty()) segments.emplace_back(t);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t at = i;
    const UChar32 c = NextCodePoint(text, i);
    if (c != '.' && c != '?' && c != '!') continue;
    std::size_t j = i;
    std::size_t ws_end = j;
    bool saw_space = false;
    while (j < text.size()) {
      const std::size_t before = j;
      const UChar32 d = NextCodePoint(text, j);
      if (d >= 0 && u_isUWhiteSpace(d)) {
        saw_space = true;
        ws_end = j;
        continue;
      }
      j = before;
      break;
    }
    if (!saw_space || ws_end >= text.size()) continue;
    std::size_t k = ws_end;
    const UChar32 next = NextCodePoint(text, k);
    if (next >= 0 && u_isUUppercase(next)) {
      emit(text.substr(start, at + 1 - start));
      start = ws_end;
      i = ws_end;
    }
  }
  if (start < text.size()) emit(text.substr(start));
  return segments;
}

StopwordSet ParseStopwords(std::string_view text) {
  StopwordSet set;
  for (const auto& line : io::NonBlankLines(text)) {
    set.emplace(io::Trim(line.text));
  }
  return set;
}

StopwordSet LoadStopwords(const std::string& path) {
  return ParseStopwords(io::ReadFile(path));
}

TokenSequence RemoveStopwords(const TokenSequence& tokens, const StopwordSet& stop) {
  TokenSequence out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stop.contains(t)) out.push_back(t);
  }
  return out;
}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [id, w] : entries) {
    if (!entries_.empty() && entries_.back().first == id) {
      entries_.back().second += w;
    } else {
      entries_.emplace_back(id, w);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return !(e.second > 0.0); });
  double sq = 0.0;
  for (const auto& [id, w] : entries_) sq += w * w;
  norm_ = std::sqrt(sq);
}

double SparseVector::Weight(TermId id) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const Entry& e, TermId key) { return e.first < key; });
  return (it != entries_.end() && it->first == id) ? it->second : 0.0;
}

double SparseVector::Dot(const SparseVector& other) const {
  double dot = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      dot += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return dot;
}

SparseVector SparseVector::Scaled(double c) const {
  std::vector<Entry> scaled = entries_;
  for (auto& e : scaled) e.second *= c;
  return SparseVector(std::move(scaled));
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double c = a.Dot(b) / (a.Norm() * b.Norm());
  return std::clamp(c, 0.0, 1.0);
}

TfIdfModel TfIdfModel::Fit(std::span<const TokenSequence> documents) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::vector<std::string_view> distinct(doc.begin(), doc.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto t : distinct) ++df[std::string(t)];
  }
  if (df.empty()) throw ValidationError("tf-idf fit: all documents are empty");

  TfIdfModel m;
  m.n_docs_ = documents.size();
  const double n = static_cast<double>(m.n_docs_);
  m.terms_.reserve(df.size());
  m.idf_.reserve(df.size());
  for (const auto& [term, count] : df) {
    const auto id = static_cast<TermId>(m.terms_.size());
    m.ids_.emplace(term, id);
    m.terms_.push_back(term);
    m.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return m;
}

std::optional<TermId> TfIdfModel::Id(std::string_view term) const {
  auto it = ids_.find(std::string(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SparseVector TfIdfModel::Vectorize(const TokenSequence& tokens) const {
  std::map<TermId, double> counts;
  for (const auto& t : tokens) {
    if (auto id = Id(t)) counts[*id] += 1.0;
  }
  std::vector<SparseVector::Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [id, count] : counts) entries.emplace_back(id, count * idf_[id]);
  return SparseVector(std::move(entries));
}

}  // namespace covscreen
