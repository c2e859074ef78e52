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

#include "core/weak_labels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/random.hpp"

namespace covscreen {

RankedResultList ParseRankedList(std::string_view text, std::string_view source,
                                 QueryClass query_class) {
  RankedResultList list{query_class, {}};
  std::unordered_set<std::string> seen;
  for (const auto& line : io::NonBlankLines(text)) {
    const std::string where =
        std::string(source) + ":" + std::to_string(line.number);
    auto cols = io::SplitTabs(line.text);
    if (cols.size() != 2) {
      throw ParseError(where + ": expected rank<TAB>article_id");
    }
    const auto rank = io::ParseUint(cols[0], where);
    std::string id(io::Trim(cols[1]));
    if (rank == 0) throw ParseError(where + ": ranks start at 1");
    if (id.empty()) throw ParseError(where + ": empty article id");
    if (!list.entries.empty() && rank <= list.entries.back().rank) {
      throw ParseError(where + ": ranks must be strictly ascending");
    }
    if (!seen.insert(id).second) {
      throw ValidationError(where + ": duplicate article id '" + id + "'");
    }
    list.entries.push_back({rank, std::move(id)});
  }
  return list;
}

RankedResultList LoadRankedList(const std::string& path, QueryClass query_class) {
  return ParseRankedList(io::ReadFile(path), path, query_class);
}

std::size_t TrainSize(std::size_t total) { return (8 * total + 5) / 10; }

WeakLabeledSet BuildWeakLabels(const RankedResultList& vaccine,
                               const RankedResultList& therapeutics,
                               std::span<const RankedResultList> negatives,
                               const Corpus& corpus, std::uint64_t split_seed) {
  if (corpus.empty()) throw ValidationError("weak labeling needs a non-empty corpus");

  auto in_corpus = [&](const RankedResultList& list) {
    std::map<std::string, std::uint64_t> ranks;
    for (const auto& e : list.entries) {
      if (corpus.Contains(e.id)) ranks.emplace(e.id, e.rank);
    }
    return ranks;
  };

  // Ordered map keeps the pre-shuffle order canonical (sorted by id).
  std::map<std::string, Label> labeled;
  const auto vaccine_ranks = in_corpus(vaccine);
  const auto thera_ranks = in_corpus(therapeutics);
  for (const auto& [id, rank] : vaccine_ranks) {
    auto it = thera_ranks.find(id);
    labeled[id] = (it == thera_ranks.end() || rank <= it->second)
                      ? Label::kVaccine
                      : Label::kTherapeutics;
  }
  for (const auto& [id, rank] : thera_ranks) {
    labeled.try_emplace(id, Label::kTherapeutics);
  }
  for (const auto& list : negatives) {
    for (const auto& e : list.entries) {
      if (corpus.Contains(e.id)) labeled.try_emplace(e.id, Label::kOther);
    }
  }
  if (labeled.empty()) throw ValidationError("no weak labels produced");

  std::vector<std::pair<std::string, Label>> items(labeled.begin(), labeled.end());
  std::mt19937_64 gen(split_seed);
  rng::FisherYatesShuffle(items, gen);

  const std::size_t n_train = TrainSize(items.size());
  auto train = std::vector(items.begin(), items.begin() + n_train);
  auto val = std::vector(items.begin() + n_train, items.end());
  std::sort(train.begin(), train.end());
  std::sort(val.begin(), val.end());

  WeakLabeledSet out;
  out.split_seed = split_seed;
  for (auto& [id, l] : train) out.train.Add(std::move(id), {l, std::nullopt});
  for (auto& [id, l] : val) out.validation.Add(std::move(id), {l, std::nullopt});
  return out;
}

}  // namespace covscreen
