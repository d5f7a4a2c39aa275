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

#include "advtext/attacks/budget.h"

#include "advtext/core/error.h"

namespace advtext {

QueryMeter::QueryMeter(Victim& victim, std::uint64_t budget)
    : victim_(victim), budget_(budget) {}

std::vector<VictimScores> QueryMeter::Send(std::span<const std::string> texts) {
  std::uint64_t charged = 0;
  try {
    auto scores = victim_.Classify(texts, &charged);
    used_ += charged;
    return scores;
  } catch (...) {
    used_ += charged;
    throw;
  }
}

std::vector<VictimScores> QueryMeter::Classify(
    std::span<const std::string> texts) {
  const std::uint64_t affordable = remaining();
  if (texts.size() <= affordable) return Send(texts);
  if (affordable > 0) Send(texts.first(affordable));
  throw Error(ErrorCode::kBudgetExceeded,
              "query budget of " + std::to_string(budget_) + " exhausted");
}

VictimScores QueryMeter::ClassifyOne(const std::string& text) {
  return Classify(std::span(&text, 1)).front();
}

}  // namespace advtext
