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

// Random fixture builders shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/lexicon_scorer.hpp"
#include "core/predictions.hpp"
#include "oracles.hpp"

namespace covscreen::gen {

inline std::vector<std::vector<std::string>> RandomCorpus(std::mt19937_64& g) {
  const std::size_t n_terms = 1 + g() % 50;
  const std::size_t n_docs = 1 + g() % 20;
  std::vector<std::vector<std::string>> docs(n_docs);
  for (auto& d : docs) {
    const std::size_t len = g() % 30;
    for (std::size_t i = 0; i < len; ++i) d.push_back("t" + std::to_string(g() % n_terms));
  }
  if (std::all_of(docs.begin(), docs.end(), [](const auto& d) { return d.empty(); })) {
    docs[0].push_back("t0");
  }
  return docs;
}

struct RandomTable {
  oracle::Table oracle;
  lss::EmbeddingTable table;
  std::vector<std::string> vaccine_seeds;
  std::vector<std::string> therapeutics_seeds;
};

// Tokens w0..w{n-1}; a few share vectors so ties are exercised.
inline RandomTable MakeTable(std::mt19937_64& g) {
  const std::size_t n = 2 + g() % 99;
  const std::size_t dim = 1 + g() % 8;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RandomTable r;
  std::vector<double> flat;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    if (i > 0 && g() % 10 == 0) {
      v = r.oracle.vectors[g() % i];
    } else {
      for (double& x : v) x = u(g);
    }
    r.oracle.tokens.push_back("w" + std::to_string(i));
    r.oracle.vectors.push_back(v);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  r.table = lss::EmbeddingTable(r.oracle.tokens, flat, dim);
  const std::size_t nv = 1 + g() % 4, nt = 1 + g() % 4;
  for (std::size_t i = 0; i < nv; ++i) r.vaccine_seeds.push_back("w" + std::to_string(g() % n));
  for (std::size_t i = 0; i < nt; ++i) {
    r.therapeutics_seeds.push_back("w" + std::to_string(g() % n));
  }
  // Occasionally include a seed missing from the table.
  if (g() % 4 == 0) r.vaccine_seeds.push_back("absent");
  return r;
}

inline std::vector<std::string> RandomAbstract(std::mt19937_64& g, std::size_t n_tokens) {
  std::vector<std::string> out;
  const std::size_t len = g() % 60;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(g() % 8 == 0 ? "oov" + std::to_string(g() % 3)
                               : "w" + std::to_string(g() % n_tokens));
  }
  return out;
}

// Articles whose lexicon presence and gold positivity land them in the
// requested categories (1..4) under the default lexicon.
struct CategoryFixture {
  Corpus corpus;
  PredictionSet gold;
};

inline CategoryFixture MakeCategorySet(const std::array<std::size_t, 4>& counts) {
  std::vector<Article> arts;
  PredictionSet gold;
  std::size_t n = 0;
  for (int cat = 1; cat <= 4; ++cat) {
    for (std::size_t i = 0; i < counts[cat - 1]; ++i, ++n) {
      const bool present = cat <= 2;
      const bool positive = cat % 2 == 1;
      const std::string id = "c" + std::to_string(cat) + "-" + std::to_string(i);
      arts.push_back({id, present ? "Vaccination outcomes" : "Outcomes in cohorts",
                      present ? "A study of an antiviral therapy." : "A study of cohorts.",
                      "Journal " + std::to_string(n % 7)});
      const Label l = !positive ? Label::kOther
                      : n % 2   ? Label::kTherapeutics
                                : Label::kVaccine;
      gold.Add(id, {l, std::nullopt});
    }
  }
  return {Corpus(arts), gold};
}

}  // namespace covscreen::gen
