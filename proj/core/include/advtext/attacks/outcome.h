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

#ifndef ADVTEXT_ATTACKS_OUTCOME_H_
#define ADVTEXT_ATTACKS_OUTCOME_H_

#include <cstdint>
#include <string>

#include "advtext/core/edit_trace.h"
#include "advtext/core/types.h"
#include "advtext/scoring/bodega.h"

namespace advtext {

// Result of attacking one instance.
//
// success == (scores.con == 1). When no edit was applied, adversarial_text
// is the serialized original and success is false. Attacks fill scores.sem
// with token overlap; the harness rescores it with the configured scorer.
struct AttackOutcome {
  explicit AttackOutcome(TextInstance original) : instance(std::move(original)) {}

  TextInstance instance;
  std::string adversarial_text;
  EditTrace trace;
  bool success = false;
  ScoreBreakdown scores;
  std::uint64_t queries_used = 0;
  // Label of the method that produced this outcome; for a cascade, the
  // stage that succeeded (or the last one tried).
  std::string method_used;
  Label original_prediction = Label::kCredible;
  Label adversarial_prediction = Label::kCredible;
  // The attack stopped because the query budget ran out.
  bool budget_exhausted = false;
};

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_OUTCOME_H_
