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

// Brute-force reference implementations used only by tests. They share no
// code with src/core beyond the Label enum and plain standard containers.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/label.hpp"

namespace covscreen::oracle {

using Doc = std::vector<std::string>;
using TermWeights = std::map<std::string, double>;

// Document frequency by direct membership scan.
inline std::map<std::string, double> Idf(const std::vector<Doc>& docs) {
  std::set<std::string> vocab;
  for (const auto& d : docs) vocab.insert(d.begin(), d.end());
  std::map<std::string, double> idf;
  for (const auto& term : vocab) {
    double df = 0;
    for (const auto& d : docs) {
      if (std::find(d.begin(), d.end(), term) != d.end()) df += 1;
    }
    idf[term] = std::log((1.0 + docs.size()) / (1.0 + df)) + 1.0;
  }
  return idf;
}

inline TermWeights Vectorize(const std::map<std::string, double>& idf, const Doc& doc) {
  TermWeights w;
  for (const auto& [term, value] : idf) {
    const auto count = std::count(doc.begin(), doc.end(), term);
    if (count > 0) w[term] = static_cast<double>(count) * value;
  }
  return w;
}

inline double Cosine(const TermWeights& a, const TermWeights& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [t, w] : a) {
    na += w * w;
    auto it = b.find(t);
    if (it != b.end()) dot += w * it->second;
  }
  for (const auto& [t, w] : b) nb += w * w;
  if (na == 0 || nb == 0) return 0.0;
  return dot / std::sqrt(na * nb);
}

// Dense-vector table for LSS checks.
struct Table {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;

  int Find(const std::string& t) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == t) return static_cast<int>(i);
    }
    return -1;
  }
};

inline double DenseCosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  for (double x : a) na += x * x;
  for (double x : b) nb += x * x;
  na = std::sqrt(na);
  nb = std::sqrt(nb);
  if (na == 0 || nb == 0) return 0.0;
  return dot / (na * nb);
}

struct Expansion {
  std::set<std::string> tokens;
  double threshold;
};

// Every (seed, non-seed) pair, fully sorted.
inline Expansion ExpandSeeds(const Table& t, const std::vector<std::string>& seeds,
                             std::size_t budget) {
  const std::set<std::string> seed_set(seeds.begin(), seeds.end());
  std::vector<std::pair<double, std::string>> pairs;
  for (const auto& s : seeds) {
    const int si = t.Find(s);
    if (si < 0) continue;
    for (std::size_t j = 0; j < t.tokens.size(); ++j) {
      if (seed_set.contains(t.tokens[j])) continue;
      pairs.emplace_back(1.0 - DenseCosine(t.vectors[si], t.vectors[j]), t.tokens[j]);
    }
  }
  Expansion e{seed_set, std::numeric_limits<double>::infinity()};
  if (pairs.empty()) return e;
  std::sort(pairs.begin(), pairs.end());
  e.threshold = pairs[std::min(budget, pairs.size()) - 1].first;
  for (const auto& [d, tok] : pairs) {
    if (d <= e.threshold) e.tokens.insert(tok);
  }
  return e;
}

inline std::vector<std::pair<std::string, double>> Representatives(
    const Table& t, const Doc& abstract, const std::set<std::string>& ext, std::size_t k) {
  std::set<std::string> distinct(abstract.begin(), abstract.end());
  std::vector<std::pair<std::string, double>> all;
  for (const auto& tok : distinct) {
    const int ti = t.Find(tok);
    if (ti < 0) continue;
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& s : ext) {
      const int si = t.Find(s);
      if (si < 0) continue;
      any = true;
      best = std::max(best, DenseCosine(t.vectors[ti], t.vectors[si]));
    }
    if (any) all.emplace_back(tok, best);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

inline double Mean(const std::vector<std::pair<std::string, double>>& reps) {
  if (reps.empty()) return 0.0;
  double s = 0;
  for (const auto& r : reps) s += r.second;
  return s / static_cast<double>(reps.size());
}

struct Counts {
  std::size_t tp = 0, fp = 0, fn = 0;
};

// Per-class recount straight from the paired label lists.
inline Counts Recount(const std::vector<Label>& gold, const std::vector<Label>& pred,
                      Label c) {
  Counts n;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i] == c && gold[i] == c) ++n.tp;
    if (pred[i] == c && gold[i] != c) ++n.fp;
    if (pred[i] != c && gold[i] == c) ++n.fn;
  }
  return n;
}

inline double Ratio(std::size_t a, std::size_t b) {
  return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

inline double F1(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

}  // namespace covscreen::oracle
