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

#include "core/lexicon_scorer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/resources.hpp"

namespace covscreen::lss {

EmbeddingTable::EmbeddingTable(std::vector<std::string> tokens,
                               std::vector<double> values, std::size_t dim)
    : tokens_(std::move(tokens)), values_(std::move(values)), dim_(dim) {
  if (tokens_.empty()) throw ValidationError("empty embedding table");
  if (dim_ == 0) throw ValidationError("embedding dimension must be positive");
  if (values_.size() != tokens_.size() * dim_) {
    throw ValidationError("embedding values do not match size x dim");
  }
  norms_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (std::any_of(t.begin(), t.end(),
                    [](char c) { return c >= 'A' && c <= 'Z'; })) {
      throw ValidationError("embedding token '" + t + "' is not lowercase");
    }
    if (!index_.emplace(t, i).second) {
      throw ValidationError("duplicate embedding token '" + t + "'");
    }
    double sq = 0.0;
    for (double x : Vector(i)) sq += x * x;
    norms_.push_back(std::sqrt(sq));
  }
}

EmbeddingTable EmbeddingTable::Parse(std::string_view text, std::string_view source) {
  std::vector<std::string> tokens;
  std::vector<double> values;
  std::size_t dim = 0;
  for (const auto& line : io::NonBlankLines(text)) {
    const std::string where =
        std::string(source) + ":" + std::to_string(line.number);
    std::vector<std::string_view> fields;
    for (auto f : io::Split(io::Trim(line.text), ' ')) {
      if (!f.empty()) fields.push_back(f);
    }
    const std::string token(fields.front());
    const std::size_t row_dim = fields.size() - 1;
    if (tokens.empty()) {
      dim = row_dim;
      if (dim == 0) throw ValidationError(where + ": token '" + token + "' has no values");
    } else if (row_dim != dim) {
      throw ValidationError(where + ": dimension mismatch for token '" + token +
                            "' (" + std::to_string(row_dim) + " values, expected " +
                            std::to_string(dim) + ")");
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      values.push_back(io::ParseDouble(fields[i], where));
    }
    tokens.push_back(token);
  }
  if (tokens.empty()) throw ValidationError(std::string(source) + ": empty embedding table");
  return EmbeddingTable(std::move(tokens), std::move(values), dim);
}

EmbeddingTable EmbeddingTable::Load(const std::string& path) {
  return Parse(io::ReadFile(path), path);
}

std::optional<std::size_t> EmbeddingTable::Index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double EmbeddingTable::Similarity(std::size_t i, std::size_t j) const {
  if (norms_[i] == 0.0 || norms_[j] == 0.0) return 0.0;
  const auto a = Vector(i);
  const auto b = Vector(j);
  double dot = 0.0;
  for (std::size_t d = 0; d < dim_; ++d) dot += a[d] * b[d];
  return dot / (norms_[i] * norms_[j]);
}

EmbeddingTable EmbeddingTable::Scaled(double c) const {
  std::vector<double> scaled = values_;
  for (double& x : scaled) x *= c;
  return EmbeddingTable(tokens_, std::move(scaled), dim_);
}

ExtendedSeeds ExpandSeeds(const EmbeddingTable& table,
                          std::span<const std::string> seeds,
                          std::size_t pair_budget) {
  if (pair_budget == 0) throw ValidationError("pair budget must be at least 1");
  ExtendedSeeds ext;
  ext.tokens.insert(seeds.begin(), seeds.end());

  std::vector<std::size_t> seed_rows;
  std::string missing;
  for (const auto& s : seeds) {
    if (auto i = table.Index(s)) {
      seed_rows.push_back(*i);
    } else {
      missing += (missing.empty() ? "" : ", ") + s;
    }
  }
  if (seed_rows.empty()) {
    throw ValidationError("no seed word found in the embedding table: " + missing);
  }

  std::vector<std::size_t> candidates;
  std::vector<double> nearest;  // per candidate, distance to closest seed
  std::vector<double> pair_distances;
  for (std::size_t t = 0; t < table.size(); ++t) {
    if (ext.tokens.contains(table.Token(t))) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s : seed_rows) {
      const double d = 1.0 - table.Similarity(s, t);
      pair_distances.push_back(d);
      best = std::min(best, d);
    }
    candidates.push_back(t);
    nearest.push_back(best);
  }
  if (pair_distances.empty()) return ext;

  const std::size_t position = std::min(pair_budget, pair_distances.size());
  auto nth = pair_distances.begin() + static_cast<std::ptrdiff_t>(position - 1);
  std::nth_element(pair_distances.begin(), nth, pair_distances.end());
  ext.threshold = *nth;

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (nearest[c] <= ext.threshold) ext.tokens.insert(table.Token(candidates[c]));
  }
  return ext;
}

namespace {

std::vector<std::size_t> TableRows(const ExtendedSeeds& ext,
                                   const EmbeddingTable& table) {
  std::vector<std::size_t> rows;
  for (const auto& t : ext.tokens) {
    if (auto i = table.Index(t)) rows.push_back(*i);
  }
  return rows;
}

double BestSimilarity(std::size_t row, const std::vector<std::size_t>& seed_rows,
                      const EmbeddingTable& table) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t s : seed_rows) best = std::max(best, table.Similarity(row, s));
  return best;
}

// Shared ranking step; `similarity_of(row)` supplies the best similarity.
template <typename SimilarityOf>
std::vector<RepresentativeWord> RankWords(const TokenSequence& abstract_tokens,
                                          const EmbeddingTable& table, std::size_t k,
                                          SimilarityOf similarity_of) {
  std::set<std::size_t> rows;
  for (const auto& t : abstract_tokens) {
    if (auto i = table.Index(t)) rows.insert(*i);
  }
  std::vector<RepresentativeWord> words;
  words.reserve(rows.size());
  for (std::size_t r : rows) words.push_back({table.Token(r), similarity_of(r)});
  std::sort(words.begin(), words.end(),
            [](const RepresentativeWord& a, const RepresentativeWord& b) {
              if (a.similarity != b.similarity) return a.similarity > b.similarity;
              return a.token < b.token;
            });
  if (words.size() > k) words.resize(k);
  return words;
}

}  // namespace

std::vector<RepresentativeWord> RepresentativeWords(
    const TokenSequence& abstract_tokens, const ExtendedSeeds& ext,
    const EmbeddingTable& table, std::size_t k) {
  const auto seed_rows = TableRows(ext, table);
  if (seed_rows.empty()) return {};
  return RankWords(abstract_tokens, table, k, [&](std::size_t r) {
    return BestSimilarity(r, seed_rows, table);
  });
}

double MeanSimilarity(std::span<const RepresentativeWord> words,
                      const TokenSequence& abstract_tokens,
                      bool weight_by_occurrence) {
  if (words.empty()) return 0.0;
  if (!weight_by_occurrence) {
    double sum = 0.0;
    for (const auto& w : words) sum += w.similarity;
    return sum / static_cast<double>(words.size());
  }
  std::map<std::string_view, std::size_t> counts;
  for (const auto& t : abstract_tokens) ++counts[t];
  double sum = 0.0;
  double n = 0.0;
  for (const auto& w : words) {
    const auto c = static_cast<double>(counts[w.token]);
    sum += c * w.similarity;
    n += c;
  }
  return n > 0.0 ? sum / n : 0.0;
}

ArticleScores ScoreArticle(const TokenSequence& abstract_tokens,
                           const ExtendedSeeds& vaccine_ext,
                           const ExtendedSeeds& therapeutics_ext,
                           const EmbeddingTable& table, std::size_t k,
                           bool weight_by_occurrence) {
  const auto v = RepresentativeWords(abstract_tokens, vaccine_ext, table, k);
  const auto t = RepresentativeWords(abstract_tokens, therapeutics_ext, table, k);
  return {MeanSimilarity(v, abstract_tokens, weight_by_occurrence),
          MeanSimilarity(t, abstract_tokens, weight_by_occurrence)};
}

Label LabelFor(const ArticleScores& s, std::optional<double> min_score) {
  if (min_score && s.vaccine < *min_score && s.therapeutics < *min_score) {
    return Label::kOther;
  }
  return s.vaccine >= s.therapeutics ? Label::kVaccine : Label::kTherapeutics;
}

Options Options::Defaults() {
  Options o;
  o.vaccine_seeds.assign(resources::kVaccineSeeds.begin(), resources::kVaccineSeeds.end());
  o.therapeutics_seeds.assign(resources::kTherapeuticsSeeds.begin(),
                              resources::kTherapeuticsSeeds.end());
  return o;
}

PredictionSet ScoreCorpus(const Corpus& corpus, const EmbeddingTable& table,
                          const Options& options) {
  if (options.k == 0) throw ValidationError("k must be at least 1");
  if (options.vaccine_seeds.empty() || options.therapeutics_seeds.empty()) {
    throw ValidationError("seed lists must be non-empty");
  }
  const auto v_ext = ExpandSeeds(table, options.vaccine_seeds, options.pair_budget);
  const auto t_ext = ExpandSeeds(table, options.therapeutics_seeds, options.pair_budget);
  const auto v_rows = TableRows(v_ext, table);
  const auto t_rows = TableRows(t_ext, table);

  // Best similarity per table row, computed once per row that occurs.
  const double kUnset = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> v_best(table.size(), kUnset);
  std::vector<double> t_best(table.size(), kUnset);
  auto cached = [&](std::vector<double>& cache, const std::vector<std::size_t>& rows) {
    return [&cache, &rows, &table](std::size_t r) {
      if (std::isnan(cache[r])) cache[r] = BestSimilarity(r, rows, table);
      return cache[r];
    };
  };
  auto v_sim = cached(v_best, v_rows);
  auto t_sim = cached(t_best, t_rows);

  PredictionSet out;
  for (const auto& a : corpus.articles()) {
    const TokenSequence tokens = Tokenize(a.abstract);
    const auto v = RankWords(tokens, table, options.k, v_sim);
    const auto t = RankWords(tokens, table, options.k, t_sim);
    const ArticleScores s{MeanSimilarity(v, tokens, options.weight_by_occurrence),
                          MeanSimilarity(t, tokens, options.weight_by_occurrence)};
    const Label l = LabelFor(s, options.min_score);
    const double score = l == Label::kVaccine        ? s.vaccine
                         : l == Label::kTherapeutics ? s.therapeutics
                                                     : std::max(s.vaccine, s.therapeutics);
    out.Add(a.id, {l, score});
  }
  return out;
}

}  // namespace covscreen::lss
