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
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/label.hpp"

namespace covscreen {

struct Prediction {
  Label label = Label::kOther;
  std::optional<double> score;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Insertion-ordered article-id -> Prediction map. Gold labels use the same
// container with no scores.
class PredictionSet {
 public:
  using Entry = std::pair<std::string, Prediction>;

  // Throws ValidationError on a duplicate id.
  void Add(std::string id, Prediction p);

  const Prediction* Find(std::string_view id) const;
  bool Contains(std::string_view id) const { return Find(id) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Entries for `ids`, in that order; every id must exist.
  PredictionSet Restrict(const std::vector<std::string>& ids) const;

  std::vector<std::string> Ids() const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// `article_id<TAB>label[<TAB>score]`. With `allow_score` false the third
// column is rejected (gold-label files). Unknown labels and duplicate ids
// throw ParseError / ValidationError naming the line.
PredictionSet ParsePredictions(std::string_view text, std::string_view source,
                               bool allow_score = true);
PredictionSet LoadPredictions(const std::string& path);
PredictionSet LoadGoldLabels(const std::string& path);

std::string SerializePredictions(const PredictionSet& set);

}  // namespace covscreen
