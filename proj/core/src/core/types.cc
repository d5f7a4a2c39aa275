// Copyright 2026 The advtext Authors
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

#include "advtext/core/types.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"

namespace advtext {

Label LabelFromInt(int value) {
  if (value == 0) return Label::kCredible;
  if (value == 1) return Label::kNonCredible;
  throw Error(ErrorCode::kValidation,
              "label must be 0 or 1, got " + std::to_string(value));
}

TextInstance::TextInstance(std::string id, std::vector<std::string> parts,
                           Label label)
    : id_(std::move(id)), parts_(std::move(parts)), label_(label) {
  if (parts_.empty() || parts_.size() > 2) {
    throw Error(ErrorCode::kValidation,
                "instance '" + id_ + "' must have 1 or 2 parts, got " +
                    std::to_string(parts_.size()));
  }
  for (const auto& part : parts_) {
    const bool blank = std::all_of(part.begin(), part.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
    if (blank) {
      throw Error(ErrorCode::kValidation,
                  "instance '" + id_ + "' has a blank text part");
    }
    if (part.find(kPartSeparator) != std::string::npos) {
      throw Error(ErrorCode::kValidation,
                  "instance '" + id_ + "' has a tab inside a text part");
    }
    if (!utf8::IsValid(part)) {
      throw Error(ErrorCode::kValidation,
                  "instance '" + id_ + "' is not valid UTF-8");
    }
  }
}

std::string TextInstance::Serialized() const {
  std::string out = parts_.front();
  if (parts_.size() == 2) {
    out.push_back(kPartSeparator);
    out += parts_.back();
  }
  return out;
}

bool IsValidScores(const VictimScores& scores, double tol) {
  if (!std::isfinite(scores.p_credible) || !std::isfinite(scores.p_noncredible))
    return false;
  if (scores.p_credible < 0.0 || scores.p_noncredible < 0.0) return false;
  return std::abs(scores.p_credible + scores.p_noncredible - 1.0) <= tol;
}

}  // namespace advtext
