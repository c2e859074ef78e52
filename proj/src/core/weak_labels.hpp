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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.hpp"
#include "core/predictions.hpp"

namespace covscreen {

enum class QueryClass { kVaccine, kTherapeutics, kNegative };

struct RankedEntry {
  std::uint64_t rank;  // 1 = best
  std::string id;
};

struct RankedResultList {
  QueryClass query_class = QueryClass::kNegative;
  std::vector<RankedEntry> entries;
};

// `rank<TAB>article_id`; ranks >= 1 and strictly ascending, ids unique.
RankedResultList ParseRankedList(std::string_view text, std::string_view source,
                                 QueryClass query_class);
RankedResultList LoadRankedList(const std::string& path, QueryClass query_class);

struct WeakLabeledSet {
  PredictionSet train;       // sorted by id
  PredictionSet validation;  // sorted by id
  std::uint64_t split_seed = 0;
};

// Number of training items for an 80/20 split of `total` items (round half up).
std::size_t TrainSize(std::size_t total);

// Positives are each positive list intersected with the corpus; an id in
// both goes to the class with the smaller rank (Vaccine on equal rank).
// Negatives are the union of the negative lists intersected with the corpus,
// minus every positive, labeled Other. The labeled ids are sorted, shuffled
// with Fisher-Yates driven by mt19937_64(split_seed), and the first
// TrainSize(n) become the training split.
WeakLabeledSet BuildWeakLabels(const RankedResultList& vaccine,
                               const RankedResultList& therapeutics,
                               std::span<const RankedResultList> negatives,
                               const Corpus& corpus, std::uint64_t split_seed);

}  // namespace covscreen
