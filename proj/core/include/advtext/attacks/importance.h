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

#ifndef ADVTEXT_ATTACKS_IMPORTANCE_H_
#define ADVTEXT_ATTACKS_IMPORTANCE_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "advtext/attacks/budget.h"
#include "advtext/core/tokenizer.h"
#include "advtext/providers/provider.h"

namespace advtext {

inline constexpr std::string_view kUnkToken = "[UNK]";

enum class ImportanceScheme { kDIR, kNIR };

// Positions ordered most important first: gap_scores[i] belongs to
// ranked_positions[i], strictly descending, ties broken by lower index.
struct ImportanceRanking {
  std::vector<std::size_t> ranked_positions;
  std::vector<double> gap_scores;
  ImportanceScheme scheme = ImportanceScheme::kDIR;
};

// Orders (position, gap) pairs by the ranking rule.
ImportanceRanking MakeRanking(std::vector<double> gaps_by_position,
                              ImportanceScheme scheme);

// Masks each position with [UNK]; importance is how far the probability of
// the originally predicted class drops. Costs n + 1 queries, or n when
// |original| already holds the scores of the unmasked text.
ImportanceRanking RankImportanceUnk(QueryMeter& meter,
                                    const TokenizedText& tokens,
                                    const VictimScores* original = nullptr);

using CandidateFn = std::function<std::vector<CandidateSubstitute>(
    const TokenizedText& text, std::size_t position)>;

struct MaxGapRanking {
  ImportanceRanking ranking;
  // Per original position: the candidate reaching the largest gap and the
  // victim's scores for it. Empty where the slot had no candidates.
  std::vector<std::optional<CandidateSubstitute>> best;
  std::vector<VictimScores> best_scores;
  VictimScores original_scores;
};

// Tries every candidate in every slot and ranks positions by the largest
// gap toward the class opposite the original prediction. Slots without
// candidates score -infinity. Costs one query per (position, candidate),
// plus one for the original unless |original| is given.
MaxGapRanking RankImportanceMaxGapDetailed(QueryMeter& meter,
                                           const TokenizedText& tokens,
                                           const CandidateFn& candidates,
                                           const VictimScores* original = nullptr);

// Unfiltered provider candidates, k per slot.
ImportanceRanking RankImportanceMaxGap(QueryMeter& meter,
                                       const SubstituteProvider& provider,
                                       const TokenizedText& tokens,
                                       std::size_t k);

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_IMPORTANCE_H_
