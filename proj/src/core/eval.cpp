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

#include "core/eval.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/resources.hpp"

namespace covscreen::eval {

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (const auto& row : counts) {
    for (std::size_t c : row) n += c;
  }
  return n;
}

namespace {

void RequireSameIds(const PredictionSet& a, const PredictionSet& b,
                    std::string_view what) {
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.entries().size(); ++i) {
    same = b.Contains(a.entries()[i].first);
  }
  if (!same) {
    throw ValidationError(std::string(what) + ": labelings cover different article ids");
  }
}

}  // namespace

ConfusionMatrix Confusion(const PredictionSet& gold, const PredictionSet& predicted) {
  RequireSameIds(gold, predicted, "confusion matrix");
  ConfusionMatrix m;
  for (const auto& [id, g] : gold.entries()) {
    ++m.counts[Index(g.label)][Index(predicted.Find(id)->label)];
  }
  return m;
}

Prf PrfFromCounts(std::size_t tp, std::size_t fp, std::size_t fn) {
  Prf r;
  if (tp + fp > 0) r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (r.precision + r.recall > 0.0) {
    r.f = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

PositiveMetrics PositivePrf(const ConfusionMatrix& m) {
  std::size_t tp_sum = 0, fp_sum = 0, fn_sum = 0;
  auto per_class = [&](Label c) {
    const std::size_t tp = m.at(c, c);
    std::size_t fp = 0, fn = 0;
    for (Label other : kAllLabels) {
      if (other == c) continue;
      fp += m.at(other, c);
      fn += m.at(c, other);
    }
    tp_sum += tp;
    fp_sum += fp;
    fn_sum += fn;
    return PrfFromCounts(tp, fp, fn);
  };
  PositiveMetrics out;
  out.vaccine = per_class(Label::kVaccine);
  out.therapeutics = per_class(Label::kTherapeutics);
  out.micro = PrfFromCounts(tp_sum, fp_sum, fn_sum);
  out.macro = {(out.vaccine.precision + out.therapeutics.precision) / 2.0,
               (out.vaccine.recall + out.therapeutics.recall) / 2.0,
               (out.vaccine.f + out.therapeutics.f) / 2.0};
  return out;
}

double CohenKappa(const PredictionSet& a, const PredictionSet& b) {
  RequireSameIds(a, b, "kappa");
  if (a.empty()) throw ValidationError("kappa needs at least one item");
  const ConfusionMatrix m = Confusion(a, b);
  const double n = static_cast<double>(m.total());
  double agree = 0.0;
  double expected = 0.0;
  for (Label c : kAllLabels) {
    agree += static_cast<double>(m.at(c, c));
    double row = 0.0, col = 0.0;
    for (Label d : kAllLabels) {
      row += static_cast<double>(m.at(c, d));
      col += static_cast<double>(m.at(d, c));
    }
    expected += (row / n) * (col / n);
  }
  const double p_o = agree / n;
  if (expected == 1.0) return 1.0;
  return (p_o - expected) / (1.0 - expected);
}

Lexicon::Lexicon(const std::vector<std::string>& terms) {
  for (const auto& t : terms) {
    auto tokens = Tokenize(t);
    if (!tokens.empty()) terms_.push_back(std::move(tokens));
  }
  if (terms_.empty()) throw ValidationError("lexicon is empty");
}

Lexicon Lexicon::Default() {
  return Lexicon(std::vector<std::string>(resources::kDefaultLexicon.begin(),
                                          resources::kDefaultLexicon.end()));
}

Lexicon Lexicon::Parse(std::string_view text, std::string_view source) {
  std::vector<std::string> terms;
  for (const auto& line : io::NonBlankLines(text)) terms.emplace_back(io::Trim(line.text));
  if (terms.empty()) throw ValidationError(std::string(source) + ": lexicon is empty");
  return Lexicon(terms);
}

Lexicon Lexicon::Load(const std::string& path) {
  return Parse(io::ReadFile(path), path);
}

bool Lexicon::Matches(const TokenSequence& tokens) const {
  for (const auto& term : terms_) {
    if (term.size() > tokens.size()) continue;
    auto it = std::search(tokens.begin(), tokens.end(), term.begin(), term.end());
    if (it != tokens.end()) return true;
  }
  return false;
}

bool LexiconPresent(const Article& a, const Lexicon& lexicon) {
  return lexicon.Matches(Tokenize(ComposeText(a)));
}

int Categorize(Label gold, bool lexicon_present) {
  const bool positive = IsPositive(gold);
  if (lexicon_present) return positive ? 1 : 2;
  return positive ? 3 : 4;
}

std::size_t CategoryTable::analyzed() const {
  std::size_t n = 0;
  for (std::size_t t : totals) n += t;
  return n;
}

double CategoryTable::Percent(int category) const {
  const std::size_t n = analyzed();
  if (n == 0) return 0.0;
  return 100.0 * static_cast<double>(totals[category - 1]) / static_cast<double>(n);
}

CategoryTable CategoryReport(const Corpus& corpus, const PredictionSet& gold,
                             const SystemPredictions& systems, const Lexicon& lexicon) {
  CategoryTable table;
  for (const auto& [name, preds] : systems) {
    if (table.correct.contains(name)) {
      throw ValidationError("system '" + name + "' listed twice");
    }
    table.systems.push_back(name);
    table.correct[name] = {};
  }
  for (const auto& [id, g] : gold.entries()) {
    const Article* a = corpus.Find(id);
    if (a == nullptr) throw ValidationError("gold article '" + id + "' is not in the corpus");
    const int cat = Categorize(g.label, LexiconPresent(*a, lexicon));
    table.assignment[id] = cat;
    ++table.totals[cat - 1];
    for (const auto& [name, preds] : systems) {
      const Prediction* p = preds.Find(id);
      if (p == nullptr) {
        throw ValidationError("system '" + name + "' has no prediction for '" + id + "'");
      }
      if (p->label == g.label) ++table.correct[name][cat - 1];
    }
  }
  return table;
}

}  // namespace covscreen::eval
