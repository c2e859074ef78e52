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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/label.hpp"
#include "core/predictions.hpp"

namespace covscreen::ensemble {

// One article's votes keyed by scorer name.
using Ballot = std::map<std::string, Label>;

// Plurality vote. Ties prefer positive classes over Other; a tie between
// Vaccine and Therapeutics is broken by one draw from a generator keyed on
// (seed, article_id), so the outcome does not depend on processing order.
// Throws ValidationError on an empty ballot.
Label MajorityVote(const Ballot& ballot, std::uint64_t seed,
                   std::string_view article_id);

// Counts-only form used by MajorityVote.
Label MajorityVote(const std::array<std::size_t, 3>& counts, std::uint64_t seed,
                   std::string_view article_id);

using NamedPredictions = std::map<std::string, PredictionSet>;

// Votes over `subset` for every article, in the order of the first subset
// member's prediction set. Every subset member must be present and all of
// them must cover the same ids.
PredictionSet RunEnsemble(const NamedPredictions& predictions,
                          const std::vector<std::string>& subset, std::uint64_t seed);

}  // namespace covscreen::ensemble
