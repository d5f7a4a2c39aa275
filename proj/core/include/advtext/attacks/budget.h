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

#ifndef ADVTEXT_ATTACKS_BUDGET_H_
#define ADVTEXT_ATTACKS_BUDGET_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "advtext/core/types.h"
#include "advtext/victims/victim.h"

namespace advtext {

// Per-instance view of a victim that enforces a query budget.
//
// A request that does not fit sends only the affordable prefix, then throws
// Error(kBudgetExceeded), so used() lands exactly on the budget. Remote
// retries are charged as they happen and can push used() past it.
class QueryMeter {
 public:
  QueryMeter(Victim& victim, std::uint64_t budget);

  std::vector<VictimScores> Classify(std::span<const std::string> texts);
  VictimScores ClassifyOne(const std::string& text);

  std::uint64_t used() const { return used_; }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t remaining() const { return used_ >= budget_ ? 0 : budget_ - used_; }
  Victim& victim() { return victim_; }

 private:
  // Charges whatever the victim reports, also when the call fails.
  std::vector<VictimScores> Send(std::span<const std::string> texts);

  Victim& victim_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_BUDGET_H_
