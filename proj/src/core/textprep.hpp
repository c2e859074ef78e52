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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace covscreen {

using TokenSequence = std::vector<std::string>;

// Lowercased maximal runs of Unicode letters and digits. Everything else,
// including invalid UTF-8 bytes, separates tokens. No stemming.
TokenSequence Tokenize(std::string_view text);

// Splits after '.', '?' or '!' when followed by whitespace and then an
// uppercase letter. Segments are trimmed and never empty.
std::vector<std::string> SplitSentences(std::string_view text);

using StopwordSet = std::unordered_set<std::string>;

// One lowercase token per line; blank lines ignored.
StopwordSet ParseStopwords(std::string_view text);
StopwordSet LoadStopwords(const std::string& path);
TokenSequence RemoveStopwords(const TokenSequence& tokens, const StopwordSet& stop);

using TermId = std::uint32_t;

// Sorted by term id, weights strictly positive.
class SparseVector {
 public:
  using Entry = std::pair<TermId, double>;

  SparseVector() = default;
  // Sorts, merges duplicate ids by summing, drops non-positive weights.
  explicit SparseVector(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  double Norm() const { return norm_; }
  double Weight(TermId id) const;
  double Dot(const SparseVector& other) const;
  SparseVector Scaled(double c) const;

 private:
  std::vector<Entry> entries_;
  double norm_ = 0.0;
};

// Cosine similarity clamped to [0, 1]; 0 when either vector is empty.
double Cosine(const SparseVector& a, const SparseVector& b);

// tf = raw count, idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class TfIdfModel {
 public:
  // Throws ValidationError when every document is empty.
  static TfIdfModel Fit(std::span<const TokenSequence> documents);

  std::optional<TermId> Id(std::string_view term) const;
  const std::string& Term(TermId id) const { return terms_[id]; }
  double Idf(TermId id) const { return idf_[id]; }
  std::size_t vocabulary_size() const { return terms_.size(); }
  std::size_t n_docs() const { return n_docs_; }

  // Out-of-vocabulary tokens are ignored.
  SparseVector Vectorize(const TokenSequence& tokens) const;

 private:
  std::vector<std::string> terms_;  // sorted; index = term id
  std::vector<double> idf_;
  std::unordered_map<std::string, TermId> ids_;
  std::size_t n_docs_ = 0;
};

}  // namespace covscreen
