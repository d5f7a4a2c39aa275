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

#ifndef ADVTEXT_HARNESS_OUTCOME_IO_H_
#define ADVTEXT_HARNESS_OUTCOME_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "advtext/attacks/outcome.h"
#include "advtext/harness/report.h"

namespace advtext {

// An outcome tagged with the run it came from.
struct OutcomeRecord {
  std::string task;
  std::string victim;
  // The attack that was run, e.g. "BAm2+Genetic". The outcome's own
  // method_used names the cascade stage that produced it.
  std::string method;
  AttackOutcome outcome;
};

// One compact JSON object per line with keys in sorted order:
//   adversarial, adversarial_prediction, budget_exhausted, id, label,
//   method, original, original_prediction, queries, scores {bodega, char,
//   con, sem}, stage, success, task, trace [{after, before, iteration, kind,
//   part, position}], victim
// No timestamps, so identical runs produce identical bytes.
std::string EncodeOutcome(const OutcomeRecord& record);
void WriteOutcomes(const std::vector<OutcomeRecord>& records, std::ostream& out);

// Inverse of EncodeOutcome. Only original and adversarial are required;
// the rest default (label 0, "unknown" names, zero scores and queries,
// stage falls back to method). ReadOutcomes numbers records without an id
// by their 0-based position.
// Throws Error(kFormat) naming the 1-based line.
OutcomeRecord DecodeOutcome(const std::string& line);
std::vector<OutcomeRecord> ReadOutcomes(std::istream& in);

// Groups records by (task, victim, method) in order of first appearance
// and aggregates each group. Throws Error(kEmptyRun) for no records.
std::vector<ReportRow> SummarizeOutcomes(const std::vector<OutcomeRecord>& records);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_OUTCOME_IO_H_
