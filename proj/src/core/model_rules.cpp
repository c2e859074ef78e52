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

#include "core/model_rules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "core/error.hpp"
#include "core/io.hpp"

namespace covscreen::rules {

Label GatedArgmax(double vaccine, double therapeutics, double threshold) {
  const bool v = vaccine >= threshold;
  const bool t = therapeutics >= threshold;
  if (v && t) return vaccine >= therapeutics ? Label::kVaccine : Label::kTherapeutics;
  if (v) return Label::kVaccine;
  if (t) return Label::kTherapeutics;
  return Label::kOther;
}

Label NspLabel(const NspRawScores& s, double threshold) {
  return GatedArgmax(s.p_vaccine, s.p_therapeutics, threshold);
}

Label ChCombine(Label nsp, double ch_p_therapeutics, double cut) {
  if (nsp == Label::kOther) return Label::kOther;
  return ch_p_therapeutics >= cut ? Label::kTherapeutics : Label::kVaccine;
}

double TopNMean(std::vector<double> scores, std::size_t n) {
  if (scores.empty() || n == 0) return 0.0;
  const std::size_t m = std::min(n, scores.size());
  std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(m),
                    scores.end(), std::greater<>());
  const double sum = std::accumulate(scores.begin(),
                                     scores.begin() + static_cast<std::ptrdiff_t>(m), 0.0);
  return sum / static_cast<double>(m);
}

Label StsLabel(const StsRawScores& s, std::size_t n, double threshold) {
  return GatedArgmax(TopNMean(s.vaccine_segment_scores, n),
                     TopNMean(s.therapeutics_segment_scores, n), threshold);
}

namespace {

double Bounded(std::string_view field, double lo, double hi, const std::string& where) {
  const double v = io::ParseDouble(field, where);
  if (v < lo || v > hi) {
    throw ValidationError(where + ": score " + std::string(io::Trim(field)) +
                          " outside [" + io::FormatFixed(lo, 0) + ", " +
                          io::FormatFixed(hi, 0) + "]");
  }
  return v;
}

template <typename Row>
void ForEachRow(std::string_view text, std::string_view source, std::size_t columns,
                Row row) {
  for (const auto& line : io::NonBlankLines(text)) {
    const std::string where =
        std::string(source) + ":" + std::to_string(line.number);
    auto cols = io::SplitTabs(line.text);
    if (cols.size() != columns) {
      throw ParseError(where + ": expected " + std::to_string(columns) +
                       " tab-separated columns");
    }
    std::string id(io::Trim(cols[0]));
    if (id.empty()) throw ParseError(where + ": empty article id");
    row(std::move(id), cols, where);
  }
}

template <typename Map>
std::string MissingIds(const Corpus& corpus, const Map& m) {
  std::string missing;
  std::size_t count = 0;
  for (const auto& a : corpus.articles()) {
    if (m.contains(a.id)) continue;
    if (++count <= 5) missing += (missing.empty() ? "" : ", ") + a.id;
  }
  if (count > 5) missing += ", ... (" + std::to_string(count) + " total)";
  return missing;
}

template <typename Map>
void RequireCoverage(const Corpus& corpus, const Map& m, std::string_view what) {
  const std::string missing = MissingIds(corpus, m);
  if (!missing.empty()) {
    throw ValidationError("no " + std::string(what) + " for: " + missing);
  }
}

}  // namespace

std::unordered_map<std::string, NspRawScores> ParseNspScores(std::string_view text,
                                                             std::string_view source) {
  std::unordered_map<std::string, NspRawScores> out;
  ForEachRow(text, source, 3, [&](std::string id, const auto& cols, const std::string& where) {
    NspRawScores s{Bounded(cols[1], 0.0, 1.0, where), Bounded(cols[2], 0.0, 1.0, where)};
    if (!out.emplace(id, s).second) {
      throw ValidationError(where + ": duplicate article id '" + id + "'");
    }
  });
  return out;
}

std::unordered_map<std::string, double> ParseChScores(std::string_view text,
                                                      std::string_view source) {
  std::unordered_map<std::string, double> out;
  ForEachRow(text, source, 2, [&](std::string id, const auto& cols, const std::string& where) {
    if (!out.emplace(id, Bounded(cols[1], 0.0, 1.0, where)).second) {
      throw ValidationError(where + ": duplicate article id '" + id + "'");
    }
  });
  return out;
}

std::unordered_map<std::string, StsRawScores> ParseStsScores(std::string_view text,
                                                             std::string_view source) {
  std::unordered_map<std::string, StsRawScores> out;
  std::unordered_map<std::string, unsigned> seen;  // bit 0 vaccine, bit 1 therapeutics
  ForEachRow(text, source, 3, [&](std::string id, const auto& cols, const std::string& where) {
    const auto cls = ParseLabel(io::Trim(cols[1]));
    if (!cls || *cls == Label::kOther) {
      throw ParseError(where + ": class must be vaccine or therapeutics, got '" +
                       std::string(cols[1]) + "'");
    }
    const unsigned bit = *cls == Label::kVaccine ? 1u : 2u;
    if (seen[id] & bit) {
      throw ValidationError(where + ": duplicate " + std::string(LabelName(*cls)) +
                            " row for '" + id + "'");
    }
    seen[id] |= bit;
    std::vector<double> scores;
    if (!io::Trim(cols[2]).empty()) {
      for (auto f : io::Split(cols[2], ',')) scores.push_back(Bounded(f, 0.0, 5.0, where));
    }
    auto& entry = out[id];
    (*cls == Label::kVaccine ? entry.vaccine_segment_scores
                             : entry.therapeutics_segment_scores) = std::move(scores);
  });
  return out;
}

std::unordered_map<std::string, NspRawScores> LoadNspScores(const std::string& path) {
  return ParseNspScores(io::ReadFile(path), path);
}

std::unordered_map<std::string, double> LoadChScores(const std::string& path) {
  return ParseChScores(io::ReadFile(path), path);
}

std::unordered_map<std::string, StsRawScores> LoadStsScores(const std::string& path) {
  return ParseStsScores(io::ReadFile(path), path);
}

PredictionSet ApplyNsp(const Corpus& corpus,
                       const std::unordered_map<std::string, NspRawScores>& nsp,
                       double threshold) {
  RequireCoverage(corpus, nsp, "NSP scores");
  PredictionSet out;
  for (const auto& a : corpus.articles()) {
    const auto& s = nsp.at(a.id);
    out.Add(a.id, {NspLabel(s, threshold), std::max(s.p_vaccine, s.p_therapeutics)});
  }
  return out;
}

PredictionSet ApplyCh(const Corpus& corpus,
                      const std::unordered_map<std::string, NspRawScores>& nsp,
                      const std::unordered_map<std::string, double>& ch,
                      double nsp_threshold, double cut) {
  RequireCoverage(corpus, nsp, "NSP scores");
  PredictionSet out;
  for (const auto& a : corpus.articles()) {
    const Label gate = NspLabel(nsp.at(a.id), nsp_threshold);
    if (gate == Label::kOther) {
      out.Add(a.id, {Label::kOther, std::nullopt});
      continue;
    }
    // Only NSP-positive articles need a Clinical Hedges score.
    auto it = ch.find(a.id);
    if (it == ch.end()) {
      throw ValidationError("no Clinical Hedges score for NSP-positive article '" +
                            a.id + "'");
    }
    out.Add(a.id, {ChCombine(gate, it->second, cut), it->second});
  }
  return out;
}

PredictionSet ApplySts(const Corpus& corpus,
                       const std::unordered_map<std::string, StsRawScores>& sts,
                       std::size_t n, double threshold) {
  RequireCoverage(corpus, sts, "STS scores");
  PredictionSet out;
  for (const auto& a : corpus.articles()) {
    const auto& s = sts.at(a.id);
    const double v = TopNMean(s.vaccine_segment_scores, n);
    const double t = TopNMean(s.therapeutics_segment_scores, n);
    out.Add(a.id, {GatedArgmax(v, t, threshold), std::max(v, t)});
  }
  return out;
}

PredictionSet AlignToCorpus(const Corpus& corpus, const PredictionSet& external) {
  for (const auto& [id, p] : external.entries()) {
    if (!corpus.Contains(id)) {
      throw ValidationError("prediction for unknown article '" + id + "'");
    }
  }
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  std::string missing;
  for (const auto& a : corpus.articles()) {
    if (!external.Contains(a.id)) missing += (missing.empty() ? "" : ", ") + a.id;
    ids.push_back(a.id);
  }
  if (!missing.empty()) throw ValidationError("no prediction for: " + missing);
  return external.Restrict(ids);
}

}  // namespace covscreen::rules
