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

#include <algorithm>
#include <optional>

#include "advtext/attacks/registry.h"
#include "advtext/core/error.h"
#include "advtext/core/rng.h"

namespace advtext {
namespace {

class Cascade : public Attack {
 public:
  explicit Cascade(std::vector<std::unique_ptr<Attack>> stages)
      : stages_(std::move(stages)) {}

  AttackOutcome Run(Victim& victim, const TextInstance& instance,
                    std::uint64_t seed, std::uint64_t budget_cap) const override;

  std::string name() const override {
    std::string out;
    for (const auto& s : stages_) {
      if (!out.empty()) out += '&';
      out += s->name();
    }
    return out;
  }

  std::vector<AttackConfig> configs() const override {
    std::vector<AttackConfig> out;
    for (const auto& s : stages_) {
      auto c = s->configs();
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

 private:
  std::vector<std::unique_ptr<Attack>> stages_;
};

AttackOutcome Cascade::Run(Victim& victim, const TextInstance& instance,
                           std::uint64_t seed, std::uint64_t budget_cap) const {
  const std::uint64_t budget =
      std::min(stages_.front()->configs().front().query_budget, budget_cap);
  std::uint64_t spent = 0;
  std::optional<AttackOutcome> last;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (spent >= budget) break;
    const std::uint64_t stage_seed = i == 0 ? seed : DeriveSeed(seed, i);
    AttackOutcome out =
        stages_[i]->Run(victim, instance, stage_seed, budget - spent);
    spent += out.queries_used;
    out.queries_used = spent;
    const bool success = out.success;
    last = std::move(out);
    if (success) break;
  }
  return std::move(*last);
}

}  // namespace

std::unique_ptr<Attack> MakeCascade(std::vector<std::unique_ptr<Attack>> stages) {
  if (stages.empty()) {
    throw Error(ErrorCode::kUsage, "a cascade needs at least one stage");
  }
  if (stages.size() == 1) return std::move(stages.front());
  return std::make_unique<Cascade>(std::move(stages));
}

}  // namespace advtext
