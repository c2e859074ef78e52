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
#include <optional>
#include <string>
#include <string_view>

namespace covscreen {

enum class Label { kVaccine = 0, kTherapeutics = 1, kOther = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {
    Label::kVaccine, Label::kTherapeutics, Label::kOther};

constexpr bool IsPositive(Label l) { return l != Label::kOther; }

constexpr std::size_t Index(Label l) { return static_cast<std::size_t>(l); }

// Lowercase wire names: "vaccine", "therapeutics", "other".
std::string_view LabelName(Label l);

// Exact match on the wire names; anything else is nullopt.
std::optional<Label> ParseLabel(std::string_view s);

}  // namespace covscreen
