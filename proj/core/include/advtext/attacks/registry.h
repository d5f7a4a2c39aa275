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

#ifndef ADVTEXT_ATTACKS_REGISTRY_H_
#define ADVTEXT_ATTACKS_REGISTRY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/attacks/config.h"
#include "advtext/attacks/outcome.h"
#include "advtext/providers/provider.h"
#include "advtext/victims/victim.h"

namespace advtext {

// Candidate sources an attack may need. |provider| feeds the BERT-Attack
// family, Genetic and CLARE; |neighbours| feeds GSWSE and TextFooler and
// falls back to |provider| when unset. DeepWordBug needs neither.
struct AttackResources {
  std::shared_ptr<const SubstituteProvider> provider;
  std::shared_ptr<const SubstituteProvider> neighbours;
};

// A configured attack or cascade. Run() is const and keeps no state between
// calls, so one instance can serve many threads.
class Attack {
 public:
  virtual ~Attack() = default;
  // |seed| replaces config.seed for this run; at most
  // min(config.query_budget, budget_cap) queries are spent.
  virtual AttackOutcome Run(Victim& victim, const TextInstance& instance,
                            std::uint64_t seed,
                            std::uint64_t budget_cap = UINT64_MAX) const = 0;
  // "BAm2", or stage labels joined with '&' for a cascade ("BAm2&Genetic").
  virtual std::string name() const = 0;
  virtual std::vector<AttackConfig> configs() const = 0;
};

// Throws Error(kUsage) when a resource the method needs is missing.
std::unique_ptr<Attack> MakeSingleAttack(AttackConfig config,
                                         const AttackResources& resources);

// Stages run in order on the original instance. Stage 0 uses the run seed
// unchanged and stage i > 0 uses DeriveSeed(seed, i), so a cascade's first
// stage behaves exactly like the stand-alone attack. The query budget is
// shared: each stage gets what earlier stages left. The first successful
// outcome is returned with cumulative queries; if none succeeds, the last
// stage's outcome is returned, also with cumulative queries.
std::unique_ptr<Attack> MakeCascade(std::vector<std::unique_ptr<Attack>> stages);

// Applied to every stage built from a method spec.
struct AttackOptions {
  std::uint64_t query_budget = kDefaultQueryBudget;
  bool bam2_extra_iteration = false;
  bool pos_check = true;
};

// "bam2" or "bam2+genetic". Stage configs start from DefaultConfig().
// Unknown names throw Error(kUsage) listing the catalogue.
std::unique_ptr<Attack> MakeAttack(std::string_view spec,
                                   const AttackResources& resources,
                                   const AttackOptions& options = {});

// "ba, bam, bam2, ..." for usage messages.
std::string MethodCatalogue();

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_REGISTRY_H_
