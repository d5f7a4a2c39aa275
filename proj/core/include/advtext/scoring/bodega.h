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

#ifndef ADVTEXT_SCORING_BODEGA_H_
#define ADVTEXT_SCORING_BODEGA_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "advtext/core/types.h"

namespace advtext {

// Per-instance BODEGA components. bodega == con * sem * chr.
struct ScoreBreakdown {
  int con = 0;
  double sem = 0.0;
  double chr = 0.0;
  double bodega = 0.0;

  friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

// 1 - lev(a, b) / max(|a|, |b|) with lengths in Unicode scalar values.
// Two empty strings score 1.
double CharScore(std::string_view a, std::string_view b);

// 1 when the victim's decision on the adversarial text differs from its
// decision on the original text, else 0.
int ConScore(Label original_prediction, Label adversarial_prediction);

// Product of the three components. Throws Error(kValidation) if con is not
// 0/1 or sem/chr fall outside [0, 1].
ScoreBreakdown BodegaInstance(int con, double sem, double chr);

struct InstanceScore {
  ScoreBreakdown scores;
  std::uint64_t queries = 0;
};

// One report row: arithmetic means over every instance, failures included.
struct AggregateRow {
  double bodega = 0.0;
  double success = 0.0;
  double semantic = 0.0;
  double character = 0.0;
  double queries = 0.0;
  std::size_t instances = 0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

// BODEGA is the mean of per-instance products, not the product of means.
// Throws Error(kEmptyRun) for an empty list.
AggregateRow AggregateScores(std::span<const InstanceScore> outcomes);

}  // namespace advtext

#endif  // ADVTEXT_SCORING_BODEGA_H_
