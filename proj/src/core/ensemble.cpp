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

#include "core/ensemble.hpp"

#include <algorithm>
#include <set>

#include "core/error.hpp"
#include "core/random.hpp"

namespace covscreen::ensemble {

Label MajorityVote(const std::array<std::size_t, 3>& counts, std::uint64_t seed,
                   std::string_view article_id) {
  const std::size_t v = counts[Index(Label::kVaccine)];
  const std::size_t t = counts[Index(Label::kTherapeutics)];
  const std::size_t o = counts[Index(Label::kOther)];
  if (v + t + o == 0) throw ValidationError("empty ballot");

  const std::size_t top = std::max({v, t, o});
  const bool v_top = v == top;
  const bool t_top = t == top;
  if (v_top && t_top) {
    auto gen = rng::KeyedEngine(seed, article_id);
    return (gen() >> 63) == 0 ? Label::kVaccine : Label::kTherapeutics;
  }
  if (v_top) return Label::kVaccine;
  if (t_top) return Label::kTherapeutics;
  return Label::kOther;
}

Label MajorityVote(const Ballot& ballot, std::uint64_t seed,
                   std::string_view article_id) {
  std::array<std::size_t, 3> counts{};
  for (const auto& [name, label] : ballot) ++counts[Index(label)];
  return MajorityVote(counts, seed, article_id);
}

PredictionSet RunEnsemble(const NamedPredictions& predictions,
                          const std::vector<std::string>& subset, std::uint64_t seed) {
  if (subset.empty()) throw ValidationError("ensemble subset is empty");
  std::set<std::string> unique(subset.begin(), subset.end());
  if (unique.size() != subset.size()) {
    throw ValidationError("ensemble subset names a scorer twice");
  }
  std::vector<const PredictionSet*> members;
  for (const auto& name : subset) {
    auto it = predictions.find(name);
    if (it == predictions.end()) {
      throw ValidationError("ensemble subset names unknown scorer '" + name + "'");
    }
    members.push_back(&it->second);
  }

  const PredictionSet& first = *members.front();
  for (std::size_t m = 1; m < members.size(); ++m) {
    std::set<std::string> a, b;
    for (const auto& [id, p] : first.entries()) a.insert(id);
    for (const auto& [id, p] : members[m]->entries()) b.insert(id);
    if (a == b) continue;
    std::vector<std::string> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    std::string listed;
    for (std::size_t i = 0; i < diff.size() && i < 10; ++i) {
      listed += (i ? ", " : "") + diff[i];
    }
    if (diff.size() > 10) listed += ", ...";
    throw ValidationError("scorers '" + subset.front() + "' and '" + subset[m] +
                          "' cover different articles (" +
                          std::to_string(diff.size()) + " differ: " + listed + ")");
  }

  PredictionSet out;
  for (const auto& [id, p] : first.entries()) {
    std::array<std::size_t, 3> counts{};
    for (const auto* m : members) ++counts[Index(m->Find(id)->label)];
    out.Add(id, {MajorityVote(counts, seed, id), std::nullopt});
  }
  return out;
}

}  // namespace covscreen::ensemble
