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

#ifndef ADVTEXT_HARNESS_RUNNER_H_
#define ADVTEXT_HARNESS_RUNNER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/attacks/registry.h"
#include "advtext/harness/dataset.h"
#include "advtext/harness/outcome_io.h"
#include "advtext/harness/report.h"
#include "advtext/scoring/semantic.h"

namespace advtext {

struct RunOptions {
  std::size_t parallelism = 1;
  std::uint64_t seed = 0;
  // Label for the Victim column; defaults to victim.name().
  std::string victim_label;
};

struct RunResult {
  std::vector<OutcomeRecord> outcomes;  // dataset order
  ReportRow row;
};

// Seed for one instance: a function of the master seed and the instance id
// only, so results do not depend on scheduling.
std::uint64_t InstanceSeed(std::uint64_t master, std::string_view id);

// Recomputes sem with |scorer| and the BODEGA product; con and char stay.
void Rescore(AttackOutcome& outcome, const SemanticScorer& scorer);

// Attacks every instance (including ones the victim already gets wrong) on
// a pool of |parallelism| threads, rescores them with |scorer| and
// aggregates one report row. An exhausted budget is a failed instance;
// any other error stops the run and is rethrown once workers finish.
// Throws Error(kEmptyDataset) for a dataset without instances.
RunResult RunAttackSet(const TaskDataset& dataset, Victim& victim,
                       const Attack& attack, const SemanticScorer& scorer,
                       const RunOptions& options);

// Scores ready-made (original, adversarial) pairs without attacking: the
// victim classifies both texts to decide con. Queries stay as recorded.
std::vector<ReportRow> ScorePairs(std::vector<OutcomeRecord>& records, Victim& victim,
                                  const SemanticScorer& scorer);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_RUNNER_H_
