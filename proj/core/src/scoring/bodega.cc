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

#include "advtext/scoring/bodega.h"

#include <algorithm>
#include <cmath>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"
#include "advtext/scoring/levenshtein.h"

namespace advtext {

double CharScore(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::Decode(a);
  const std::u32string ub = utf8::Decode(b);
  const std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 1.0;
  const double distance = static_cast<double>(Levenshtein(ua, ub));
  return 1.0 - distance / static_cast<double>(longest);
}

int ConScore(Label original_prediction, Label adversarial_prediction) {
  return original_prediction != adversarial_prediction ? 1 : 0;
}

ScoreBreakdown BodegaInstance(int con, double sem, double chr) {
  const auto in_unit = [](double v) {
    return std::isfinite(v) && v >= 0.0 && v <= 1.0;
  };
  if (con != 0 && con != 1) {
    throw Error(ErrorCode::kValidation, "con score must be 0 or 1");
  }
  if (!in_unit(sem)) {
    throw Error(ErrorCode::kValidation, "semantic score outside [0, 1]");
  }
  if (!in_unit(chr)) {
    throw Error(ErrorCode::kValidation, "character score outside [0, 1]");
  }
  return ScoreBreakdown{con, sem, chr, static_cast<double>(con) * sem * chr};
}

AggregateRow AggregateScores(std::span<const InstanceScore> outcomes) {
  if (outcomes.empty()) {
    throw Error(ErrorCode::kEmptyRun, "no outcomes to aggregate");
  }
  AggregateRow row;
  for (const auto& o : outcomes) {
    row.bodega += o.scores.bodega;
    row.success += o.scores.con;
    row.semantic += o.scores.sem;
    row.character += o.scores.chr;
    row.queries += static_cast<double>(o.queries);
  }
  const double n = static_cast<double>(outcomes.size());
  row.bodega /= n;
  row.success /= n;
  row.semantic /= n;
  row.character /= n;
  row.queries /= n;
  row.instances = outcomes.size();
  return row;
}

}  // namespace advtext
