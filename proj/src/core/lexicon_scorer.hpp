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
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/corpus.hpp"
#include "core/label.hpp"
#include "core/predictions.hpp"
#include "core/textprep.hpp"

namespace covscreen::lss {

// Dense token vectors, row-major, one row per token.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  // Throws ValidationError on empty input, ragged rows, duplicate or
  // non-lowercase tokens.
  EmbeddingTable(std::vector<std::string> tokens, std::vector<double> values,
                 std::size_t dim);

  // word2vec text rows without a header: `token f1 ... fd`.
  static EmbeddingTable Parse(std::string_view text, std::string_view source);
  static EmbeddingTable Load(const std::string& path);

  std::size_t size() const { return tokens_.size(); }
  std::size_t dim() const { return dim_; }
  const std::string& Token(std::size_t i) const { return tokens_[i]; }
  std::optional<std::size_t> Index(std::string_view token) const;
  std::span<const double> Vector(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  // Cosine similarity of rows i and j; 0 if either row is all zeros.
  double Similarity(std::size_t i, std::size_t j) const;

  EmbeddingTable Scaled(double c) const;

 private:
  std::vector<std::string> tokens_;
  std::vector<double> values_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t dim_ = 0;
};

struct ExtendedSeeds {
  std::set<std::string> tokens;  // always contains every seed
  // Cosine-distance admission threshold; +inf when there were no candidate
  // pairs.
  double threshold = std::numeric_limits<double>::infinity();
};

// Candidate pairs are (seed in table, table token that is not a seed) with
// distance 1 - similarity. The threshold is the distance at sorted position
// min(pair_budget, #pairs); a token joins when its distance to its nearest
// seed is within it. Throws ValidationError naming the seeds when none of
// them is in the table.
ExtendedSeeds ExpandSeeds(const EmbeddingTable& table,
                          std::span<const std::string> seeds,
                          std::size_t pair_budget);

struct RepresentativeWord {
  std::string token;
  double similarity;

  friend bool operator==(const RepresentativeWord&, const RepresentativeWord&) = default;
};

// Distinct in-table tokens ranked by their best similarity to any extended
// seed (ties by token), truncated to k.
std::vector<RepresentativeWord> RepresentativeWords(
    const TokenSequence& abstract_tokens, const ExtendedSeeds& ext,
    const EmbeddingTable& table, std::size_t k);

struct ArticleScores {
  double vaccine = 0.0;
  double therapeutics = 0.0;
};

// Mean similarity of the representative words (0 when there are none).
// With `weight_by_occurrence`, each word counts once per occurrence in the
// abstract instead of once per type.
double MeanSimilarity(std::span<const RepresentativeWord> words,
                      const TokenSequence& abstract_tokens,
                      bool weight_by_occurrence);

ArticleScores ScoreArticle(const TokenSequence& abstract_tokens,
                           const ExtendedSeeds& vaccine_ext,
                           const ExtendedSeeds& therapeutics_ext,
                           const EmbeddingTable& table, std::size_t k,
                           bool weight_by_occurrence = false);

// Argmax, Vaccine on ties. With `min_score`, both scores below it -> Other.
Label LabelFor(const ArticleScores& s, std::optional<double> min_score = std::nullopt);

struct Options {
  std::vector<std::string> vaccine_seeds;
  std::vector<std::string> therapeutics_seeds;
  std::size_t pair_budget = 1000;
  std::size_t k = 50;
  std::optional<double> min_score;
  bool weight_by_occurrence = false;

  static Options Defaults();
};

// Scores every article's abstract; the prediction score is the winning
// class's article score.
PredictionSet ScoreCorpus(const Corpus& corpus, const EmbeddingTable& table,
                          const Options& options);

}  // namespace covscreen::lss
