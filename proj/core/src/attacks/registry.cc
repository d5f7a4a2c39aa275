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

#include "advtext/attacks/registry.h"

#include <algorithm>

#include "advtext/attacks/attacks.h"
#include "advtext/core/error.h"

namespace advtext {
namespace {

class SingleAttack : public Attack {
 public:
  SingleAttack(AttackConfig config, AttackResources resources)
      : config_(std::move(config)), resources_(std::move(resources)) {}

  AttackOutcome Run(Victim& victim, const TextInstance& instance,
                    std::uint64_t seed, std::uint64_t budget_cap) const override {
    AttackConfig c = config_;
    c.seed = seed;
    c.query_budget = std::min(c.query_budget, budget_cap);
    const SubstituteProvider* provider = resources_.provider.get();
    const SubstituteProvider* neighbours =
        resources_.neighbours ? resources_.neighbours.get() : provider;
    switch (c.method) {
      case Method::kBA:
      case Method::kBAm:
        return AttackBam(victim, *provider, instance, c);
      case Method::kBAm2:
        return AttackBam2(victim, *provider, instance, c);
      case Method::kGenetic:
        return AttackGenetic(victim, *provider, instance, c);
      case Method::kGSWSE:
        return AttackGswse(victim, *neighbours, instance, c);
      case Method::kTextFooler:
        return AttackTextFooler(victim, *neighbours, instance, c);
      case Method::kDeepWordBug:
        return AttackDeepWordBug(victim, instance, c);
      case Method::kCLARE:
        return AttackClare(victim, *provider, instance, c);
    }
    throw Error(ErrorCode::kValidation, "unhandled attack method");
  }

  std::string name() const override { return std::string(MethodLabel(config_.method)); }
  std::vector<AttackConfig> configs() const override { return {config_}; }

 private:
  AttackConfig config_;
  AttackResources resources_;
};

std::vector<std::string_view> SplitPlus(std::string_view spec) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t plus = spec.find('+');
    out.push_back(spec.substr(0, plus));
    if (plus == std::string_view::npos) break;
    spec.remove_prefix(plus + 1);
  }
  return out;
}

}  // namespace

std::unique_ptr<Attack> MakeSingleAttack(AttackConfig config,
                                         const AttackResources& resources) {
  ValidateConfig(config);
  const bool needs_neighbours =
      config.method == Method::kGSWSE || config.method == Method::kTextFooler;
  const bool needs_provider = config.method != Method::kDeepWordBug && !needs_neighbours;
  if (needs_provider && !resources.provider) {
    throw Error(ErrorCode::kUsage, std::string(MethodName(config.method)) +
                                       " needs a substitute provider");
  }
  if (needs_neighbours && !resources.neighbours && !resources.provider) {
    throw Error(ErrorCode::kUsage, std::string(MethodName(config.method)) +
                                       " needs embedding neighbours");
  }
  return std::make_unique<SingleAttack>(std::move(config), resources);
}

std::string MethodCatalogue() {
  std::string out;
  for (const Method m : AllMethods()) {
    if (!out.empty()) out += ", ";
    out += MethodName(m);
  }
  return out;
}

std::unique_ptr<Attack> MakeAttack(std::string_view spec,
                                   const AttackResources& resources,
                                   const AttackOptions& options) {
  std::vector<std::unique_ptr<Attack>> stages;
  for (const auto name : SplitPlus(spec)) {
    Method method;
    try {
      method = MethodFromName(name);
    } catch (const Error&) {
      throw Error(ErrorCode::kUsage, "unknown attack method '" + std::string(name) +
                                         "'; available: " + MethodCatalogue());
    }
    AttackConfig c = DefaultConfig(method);
    c.query_budget = options.query_budget;
    c.bam2_extra_iteration = options.bam2_extra_iteration;
    c.pos_check = options.pos_check;
    stages.push_back(MakeSingleAttack(c, resources));
  }
  return MakeCascade(std::move(stages));
}

}  // namespace advtext
