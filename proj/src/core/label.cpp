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

#include "core/label.hpp"

namespace covscreen {

std::string_view LabelName(Label l) {
  switch (l) {
    case Label::kVaccine:
      return "vaccine";
    case Label::kTherapeutics:
      return "therapeutics";
    case Label::kOther:
      return "other";
  }
  return "other";
}

std::optional<Label> ParseLabel(std::string_view s) {
  for (Label l : kAllLabels) {
    if (s == LabelName(l)) return l;
  }
  return std::nullopt;
}

}  // namespace covscreen
