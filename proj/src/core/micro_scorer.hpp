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

#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.hpp"
#include "core/label.hpp"
#include "core/predictions.hpp"
#include "core/textprep.hpp"

namespace covscreen::micro {

struct QuerySet {
  std::vector<std::string> vaccine_queries;
  std::vector<std::string> therapeutics_queries;
};

// Built-in vaccine and therapeutics queries (one each).
QuerySet DefaultQueries();

// Accepts a JSON object or a TOML-style document with `vaccine_queries` and
// `therapeutics_queries` arrays of strings. Both lists must be non-empty.
QuerySet ParseQueries(std::string_view text, std::string_view source);
QuerySet LoadQueries(const std::string& path);

struct PairScores {
  double vs = 0.0;
  double ts = 0.0;
  double os = 0.0;
};

// 0.5 * (sqrt((1 - vs)(1 - ts)) - sqrt((1 + vs)(1 + ts))), which equals
// -cos((acos vs + acos ts) / 2).
double OtherScore(double vs, double ts);

PairScores ScorePair(const SparseVector& article, const SparseVector& vaccine_query,
                     const SparseVector& therapeutics_query);

struct MicroScores {
  double vs = 0.0;
  double ts = 0.0;
  double os = 0.0;
  std::size_t n_pairs = 0;
};

// Argmax over (vs, ts, os). A three-way tie at exactly zero is Other;
// otherwise ties resolve Vaccine > Therapeutics > Other.
Label LabelFor(const MicroScores& s);

// Query vectors fixed against one fitted model.
class MicroScorer {
 public:
  MicroScorer(const TfIdfModel& model, const QuerySet& queries,
              const StopwordSet* stopwords = nullptr);

  // Accumulates ScorePair over the Cartesian product of the query lists.
  MicroScores Score(const TokenSequence& article_tokens) const;

  std::size_t n_pairs() const {
    return vaccine_vectors_.size() * thera_vectors_.size();
  }

 private:
  const TfIdfModel& model_;
  std::vector<SparseVector> vaccine_vectors_;
  std::vector<SparseVector> thera_vectors_;
};

// Fits tf-idf over every article's title + abstract plus every query text,
// then labels each article in corpus order. The prediction score is the
// winning class's accumulated score.
PredictionSet ScoreCorpus(const Corpus& corpus, const QuerySet& queries,
                          const StopwordSet* stopwords = nullptr);

}  // namespace covscreen::micro
