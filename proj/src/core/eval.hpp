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

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/corpus.hpp"
#include "core/label.hpp"
#include "core/predictions.hpp"
#include "core/textprep.hpp"

namespace covscreen::eval {

struct ConfusionMatrix {
  // counts[gold][predicted], indexed by Index(Label).
  std::array<std::array<std::size_t, 3>, 3> counts{};

  std::size_t at(Label gold, Label predicted) const {
    return counts[Index(gold)][Index(predicted)];
  }
  std::size_t total() const;
};

// Both sets must hold exactly the same ids.
ConfusionMatrix Confusion(const PredictionSet& gold, const PredictionSet& predicted);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Zero denominators give 0; F = 2PR / (P + R), or 0 when P + R = 0.
Prf PrfFromCounts(std::size_t tp, std::size_t fp, std::size_t fn);

struct PositiveMetrics {
  Prf vaccine;
  Prf therapeutics;
  Prf micro;  // pooled tp/fp/fn over the two positive classes
  Prf macro;  // unweighted mean of the per-class values
};

PositiveMetrics PositivePrf(const ConfusionMatrix& m);

// (p_o - p_e) / (1 - p_e), with 1 when p_e == 1. Both labelings must cover
// the same, non-empty id set.
double CohenKappa(const PredictionSet& a, const PredictionSet& b);

// Terms and phrases, each stored tokenized.
class Lexicon {
 public:
  // Throws ValidationError when no term survives tokenization.
  explicit Lexicon(const std::vector<std::string>& terms);

  static Lexicon Default();
  static Lexicon Parse(std::string_view text, std::string_view source);
  static Lexicon Load(const std::string& path);

  // Whole-token match of any term, phrases over consecutive tokens.
  bool Matches(const TokenSequence& tokens) const;

  const std::vector<TokenSequence>& terms() const { return terms_; }

 private:
  std::vector<TokenSequence> terms_;
};

// Matches against Tokenize(ComposeText(a)).
bool LexiconPresent(const Article& a, const Lexicon& lexicon);

// 1: positive and present, 2: negative and present, 3: positive and absent,
// 4: negative and absent.
int Categorize(Label gold, bool lexicon_present);

using SystemPredictions = std::vector<std::pair<std::string, PredictionSet>>;

struct CategoryTable {
  std::map<std::string, int> assignment;
  std::array<std::size_t, 4> totals{};
  std::vector<std::string> systems;
  // Correct predictions per system, per category (index category - 1).
  std::map<std::string, std::array<std::size_t, 4>> correct;

  std::size_t analyzed() const;
  // Share of the analyzed articles in `category`, in percent.
  double Percent(int category) const;
};

// Categorizes every gold article; each must exist in the corpus and every
// system must predict it.
CategoryTable CategoryReport(const Corpus& corpus, const PredictionSet& gold,
                             const SystemPredictions& systems, const Lexicon& lexicon);

}  // namespace covscreen::eval
