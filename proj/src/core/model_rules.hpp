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
#include <unordered_map>
#include <vector>

#include "core/corpus.hpp"
#include "core/label.hpp"
#include "core/predictions.hpp"

namespace covscreen::rules {

inline constexpr double kNspThreshold = 0.999;
inline constexpr double kChCut = 0.5;
inline constexpr std::size_t kStsTopN = 3;
inline constexpr double kStsThreshold = 2.0;

struct NspRawScores {
  double p_vaccine = 0.0;
  double p_therapeutics = 0.0;
};

struct StsRawScores {
  std::vector<double> vaccine_segment_scores;
  std::vector<double> therapeutics_segment_scores;
};

// Shared two-class gate: a class is a candidate when its score reaches the
// threshold; two candidates resolve to the higher score, Vaccine on equality.
Label GatedArgmax(double vaccine, double therapeutics, double threshold);

Label NspLabel(const NspRawScores& s, double threshold = kNspThreshold);

// Other stays Other; a positive NSP label becomes Therapeutics when the
// Clinical Hedges probability reaches `cut`, otherwise Vaccine.
Label ChCombine(Label nsp, double ch_p_therapeutics, double cut = kChCut);

// Mean of the `n` largest scores (all of them when fewer); 0 when empty.
double TopNMean(std::vector<double> scores, std::size_t n);

Label StsLabel(const StsRawScores& s, std::size_t n = kStsTopN,
               double threshold = kStsThreshold);

// Raw score files keyed by article id.
// NSP: `article_id<TAB>p_vaccine<TAB>p_therapeutics`, probabilities in [0,1].
std::unordered_map<std::string, NspRawScores> ParseNspScores(std::string_view text,
                                                             std::string_view source);
// CH: `article_id<TAB>p_therapeutics`, probability in [0,1].
std::unordered_map<std::string, double> ParseChScores(std::string_view text,
                                                      std::string_view source);
// STS: `article_id<TAB>class<TAB>s1,s2,...`, class in {vaccine,therapeutics},
// scores in [0,5]; at most one row per (article, class).
std::unordered_map<std::string, StsRawScores> ParseStsScores(std::string_view text,
                                                             std::string_view source);

std::unordered_map<std::string, NspRawScores> LoadNspScores(const std::string& path);
std::unordered_map<std::string, double> LoadChScores(const std::string& path);
std::unordered_map<std::string, StsRawScores> LoadStsScores(const std::string& path);

// Corpus-order prediction sets. Each throws ValidationError listing the
// corpus ids that have no raw score.
PredictionSet ApplyNsp(const Corpus& corpus,
                       const std::unordered_map<std::string, NspRawScores>& nsp,
                       double threshold = kNspThreshold);
PredictionSet ApplyCh(const Corpus& corpus,
                      const std::unordered_map<std::string, NspRawScores>& nsp,
                      const std::unordered_map<std::string, double>& ch,
                      double nsp_threshold = kNspThreshold, double cut = kChCut);
PredictionSet ApplySts(const Corpus& corpus,
                       const std::unordered_map<std::string, StsRawScores>& sts,
                       std::size_t n = kStsTopN, double threshold = kStsThreshold);

// External predictions (e.g. the search-results model) reordered to corpus
// order; every corpus article must be covered, extra ids are rejected.
PredictionSet AlignToCorpus(const Corpus& corpus, const PredictionSet& external);

}  // namespace covscreen::rules
