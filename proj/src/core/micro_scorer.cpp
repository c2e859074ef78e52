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

#include "core/micro_scorer.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <map>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/resources.hpp"

namespace covscreen::micro {

QuerySet DefaultQueries() {
  return {{std::string(resources::kVaccineQuery)},
          {std::string(resources::kTherapeuticsQuery)}};
}

namespace {

// Minimal TOML subset: `key = [ "s", 's', ... ]` with basic/literal strings,
// comments and multi-line arrays. Other keys are skipped when their value is
// a string array; any other construct is rejected.
class TomlArrays {
 public:
  TomlArrays(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::map<std::string, std::vector<std::string>> Parse() {
    std::map<std::string, std::vector<std::string>> out;
    while (SkipTrivia(), pos_ < text_.size()) {
      std::string key = Key();
      SkipInline();
      Expect('=');
      SkipTrivia();
      Expect('[');
      std::vector<std::string> values;
      while (true) {
        SkipTrivia();
        if (Peek() == ']') {
          ++pos_;
          break;
        }
        values.push_back(String());
        SkipTrivia();
        if (Peek() == ',') {
          ++pos_;
        } else if (Peek() != ']') {
          Fail("expected ',' or ']'");
        }
      }
      if (!out.emplace(std::move(key), std::move(values)).second) {
        Fail("duplicate key");
      }
    }
    return out;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) line += text_[i] == '\n';
    throw ParseError(std::string(source_) + ":" + std::to_string(line) + ": " + what);
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void SkipInline() {
    while (Peek() == ' ' || Peek() == '\t') ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string Key() {
    if (Peek() == '"' || Peek() == '\'') return String();
    std::string key;
    while (std::isalnum(static_cast<unsigned char>(Peek())) || Peek() == '_' ||
           Peek() == '-') {
      key += text_[pos_++];
    }
    if (key.empty()) Fail("expected a key");
    return key;
  }

  std::string String() {
    const char quote = Peek();
    if (quote != '"' && quote != '\'') Fail("expected a string");
    ++pos_;
    std::string s;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') Fail("unterminated string");
      const char c = text_[pos_++];
      if (c == quote) return s;
      if (c == '\\' && quote == '"') {
        if (pos_ >= text_.size()) Fail("unterminated string");
        const char e = text_[pos_++];
        switch (e) {
          case '"': s += '"'; break;
          case '\\': s += '\\'; break;
          case 'n': s += '\n'; break;
          case 't': s += '\t'; break;
          case 'r': s += '\r'; break;
          default: Fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        s += c;
      }
    }
  }

  std::string_view text_;
  std::string_view source_;
  std::size_t pos_ = 0;
};

std::vector<SparseVector> VectorizeAll(const TfIdfModel& model,
                                       const std::vector<std::string>& texts,
                                       const StopwordSet* stopwords) {
  std::vector<SparseVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    auto tokens = Tokenize(t);
    if (stopwords) tokens = RemoveStopwords(tokens, *stopwords);
    out.push_back(model.Vectorize(tokens));
  }
  return out;
}

}  // namespace

QuerySet ParseQueries(std::string_view text, std::string_view source) {
  QuerySet qs;
  const auto first = io::Trim(text);
  if (!first.empty() && first.front() == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      qs.vaccine_queries = j.at("vaccine_queries").get<std::vector<std::string>>();
      qs.therapeutics_queries =
          j.at("therapeutics_queries").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(source) + ": " + e.what());
    }
  } else {
    auto arrays = TomlArrays(text, source).Parse();
    auto take = [&](const char* key) {
      auto it = arrays.find(key);
      if (it == arrays.end()) {
        throw ParseError(std::string(source) + ": missing key '" + key + "'");
      }
      return std::move(it->second);
    };
    qs.vaccine_queries = take("vaccine_queries");
    qs.therapeutics_queries = take("therapeutics_queries");
  }
  if (qs.vaccine_queries.empty() || qs.therapeutics_queries.empty()) {
    throw ValidationError(std::string(source) + ": query lists must be non-empty");
  }
  return qs;
}

QuerySet LoadQueries(const std::string& path) {
  return ParseQueries(io::ReadFile(path), path);
}

double OtherScore(double vs, double ts) {
  return 0.5 * (std::sqrt((1.0 - vs) * (1.0 - ts)) -
                std::sqrt((1.0 + vs) * (1.0 + ts)));
}

PairScores ScorePair(const SparseVector& article, const SparseVector& vaccine_query,
                     const SparseVector& therapeutics_query) {
  PairScores s;
  s.vs = Cosine(article, vaccine_query);
  s.ts = Cosine(article, therapeutics_query);
  s.os = OtherScore(s.vs, s.ts);
  return s;
}

Label LabelFor(const MicroScores& s) {
  if (s.vs == 0.0 && s.ts == 0.0 && s.os == 0.0) return Label::kOther;
  if (s.vs >= s.ts && s.vs >= s.os) return Label::kVaccine;
  if (s.ts >= s.os) return Label::kTherapeutics;
  return Label::kOther;
}

MicroScorer::MicroScorer(const TfIdfModel& model, const QuerySet& queries,
                         const StopwordSet* stopwords)
    : model_(model),
      vaccine_vectors_(VectorizeAll(model, queries.vaccine_queries, stopwords)),
      thera_vectors_(VectorizeAll(model, queries.therapeutics_queries, stopwords)) {
  if (vaccine_vectors_.empty() || thera_vectors_.empty()) {
    throw ValidationError("micro-scorer needs at least one query per class");
  }
}

MicroScores MicroScorer::Score(const TokenSequence& article_tokens) const {
  const SparseVector a = model_.Vectorize(article_tokens);
  MicroScores total;
  for (const auto& v : vaccine_vectors_) {
    for (const auto& t : thera_vectors_) {
      const PairScores p = ScorePair(a, v, t);
      total.vs += p.vs;
      total.ts += p.ts;
      total.os += p.os;
      ++total.n_pairs;
    }
  }
  return total;
}

PredictionSet ScoreCorpus(const Corpus& corpus, const QuerySet& queries,
                          const StopwordSet* stopwords) {
  auto prep = [&](std::string_view text) {
    auto tokens = Tokenize(text);
    return stopwords ? RemoveStopwords(tokens, *stopwords) : tokens;
  };
  std::vector<TokenSequence> docs;
  docs.reserve(corpus.size() + queries.vaccine_queries.size() +
               queries.therapeutics_queries.size());
  for (const auto& a : corpus.articles()) docs.push_back(prep(TitleAbstractText(a)));
  for (const auto& q : queries.vaccine_queries) docs.push_back(prep(q));
  for (const auto& q : queries.therapeutics_queries) docs.push_back(prep(q));

  const TfIdfModel model = TfIdfModel::Fit(docs);
  const MicroScorer scorer(model, queries, stopwords);

  PredictionSet out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const MicroScores s = scorer.Score(docs[i]);
    const Label l = LabelFor(s);
    const double score = l == Label::kVaccine        ? s.vs
                         : l == Label::kTherapeutics ? s.ts
                                                     : s.os;
    out.Add(corpus.articles()[i].id, {l, score});
  }
  return out;
}

}  // namespace covscreen::micro
