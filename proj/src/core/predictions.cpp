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

#include "core/predictions.hpp"

#include <charconv>

#include "core/error.hpp"
#include "core/io.hpp"

namespace covscreen {

void PredictionSet::Add(std::string id, Prediction p) {
  auto [it, inserted] = index_.emplace(id, entries_.size());
  if (!inserted) throw ValidationError("duplicate article id '" + id + "'");
  entries_.emplace_back(std::move(id), p);
}

const Prediction* PredictionSet::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

PredictionSet PredictionSet::Restrict(const std::vector<std::string>& ids) const {
  PredictionSet out;
  for (const auto& id : ids) {
    const Prediction* p = Find(id);
    if (p == nullptr) throw ValidationError("no prediction for article '" + id + "'");
    out.Add(id, *p);
  }
  return out;
}

std::vector<std::string> PredictionSet::Ids() const {
  std::vector<std::string> ids;
  ids.reserve(entries_.size());
  for (const auto& [id, p] : entries_) ids.push_back(id);
  return ids;
}

PredictionSet ParsePredictions(std::string_view text, std::string_view source,
                               bool allow_score) {
  PredictionSet set;
  for (const auto& line : io::NonBlankLines(text)) {
    const std::string where =
        std::string(source) + ":" + std::to_string(line.number);
    auto cols = io::SplitTabs(line.text);
    const std::size_t max_cols = allow_score ? 3 : 2;
    if (cols.size() < 2 || cols.size() > max_cols) {
      throw ParseError(where + ": expected " +
                       (allow_score ? "2 or 3" : "2") + " tab-separated columns");
    }
    const std::string id(io::Trim(cols[0]));
    if (id.empty()) throw ParseError(where + ": empty article id");
    const auto label = ParseLabel(io::Trim(cols[1]));
    if (!label) {
      throw ParseError(where + ": unknown label '" + std::string(cols[1]) + "'");
    }
    Prediction p{*label, std::nullopt};
    if (cols.size() == 3) p.score = io::ParseDouble(cols[2], where);
    if (set.Contains(id)) {
      throw ValidationError(where + ": duplicate article id '" + id + "'");
    }
    set.Add(id, p);
  }
  return set;
}

PredictionSet LoadPredictions(const std::string& path) {
  return ParsePredictions(io::ReadFile(path), path, true);
}

PredictionSet LoadGoldLabels(const std::string& path) {
  return ParsePredictions(io::ReadFile(path), path, false);
}

std::string SerializePredictions(const PredictionSet& set) {
  std::string out;
  for (const auto& [id, p] : set.entries()) {
    out += id;
    out += '\t';
    out += LabelName(p.label);
    if (p.score) {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), *p.score);
      out += '\t';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace covscreen
