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
#include <string_view>

// Built-in defaults. The same texts ship as editable files under resources/.
namespace covscreen::resources {

inline constexpr std::string_view kVaccineQuery =
    "vaccine vaccination dose antitoxin serum immunization inoculation for "
    "COVID-19 or coronavirus related research work.";

inline constexpr std::string_view kTherapeuticsQuery =
    "Therapeutics therapeutics therapy drug antidotes cures remedies "
    "medication prophylactic restorative panacea for COVID-19 or coronavirus "
    "related research work.";

inline constexpr std::array<std::string_view, 4> kVaccineSeeds = {
    "vaccine", "vaccines", "vaccination", "vaccinations"};

inline constexpr std::array<std::string_view, 6> kTherapeuticsSeeds = {
    "therapeutic", "therapeutics", "treatment", "treatments", "therapy", "drug"};

inline constexpr std::array<std::string_view, 23> kDefaultLexicon = {
    "vaccine",     "vaccines",    "vaccination", "vaccinations", "dose",
    "antitoxin",   "serum",       "immunization", "inoculation", "therapeutic",
    "therapeutics", "therapy",    "drug",        "antidote",     "antidotes",
    "cure",        "cures",       "remedy",      "remedies",     "medication",
    "prophylactic", "restorative", "panacea"};

}  // namespace covscreen::resources
