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

#include "advtext/attacks/importance.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "advtext/attacks/session.h"
#include "advtext/core/error.h"

namespace advtext {

ImportanceRanking MakeRanking(std::vector<double> gaps_by_position,
                              ImportanceScheme scheme) {
  ImportanceRanking r;
  r.scheme = scheme;
  r.ranked_positions.resize(gaps_by_position.size());
  std::iota(r.ranked_positions.begin(), r.ranked_positions.end(), std::size_t{0});
  std::stable_sort(r.ranked_positions.begin(), r.ranked_positions.end(),
                   [&](std::size_t a, std::size_t b) {
                     return gaps_by_position[a] > gaps_by_position[b];
                   });
  for (const std::size_t p : r.ranked_positions) {
    r.gap_scores.push_back(gaps_by_position[p]);
  }
  return r;
}

ImportanceRanking RankImportanceUnk(QueryMeter& meter,
                                    const TokenizedText& tokens,
                                    const VictimScores* original) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyText, "nothing to rank");
  std::vector<std::string> texts;
  if (!original) texts.push_back(Detokenize(tokens));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    texts.push_back(Detokenize(tokens.WithReplacement(i, std::string(kUnkToken))));
  }
  const auto scores = meter.Classify(texts);
  const VictimScores base = original ? *original : scores.front();
  const Label predicted = PredictedLabel(base);
  const std::size_t offset = original ? 0 : 1;
  std::vector<double> drops(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    drops[i] = base.ProbabilityOf(predicted) -
               scores[offset + i].ProbabilityOf(predicted);
  }
  return MakeRanking(std::move(drops), ImportanceScheme::kDIR);
}

MaxGapRanking RankImportanceMaxGapDetailed(QueryMeter& meter,
                                           const TokenizedText& tokens,
                                           const CandidateFn& candidates,
                                           const VictimScores* original) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyText, "nothing to rank");
  MaxGapRanking out;
  out.original_scores =
      original ? *original : meter.ClassifyOne(Detokenize(tokens));
  const Label target = Opposite(PredictedLabel(out.original_scores));
  const double base = out.original_scores.ProbabilityOf(target);

  const std::size_t n = tokens.size();
  std::vector<double> gaps(n, -std::numeric_limits<double>::infinity());
  out.best.resize(n);
  out.best_scores.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto cands = candidates(tokens, pos);
    if (cands.empty()) continue;
    std::vector<std::string> texts;
    texts.reserve(cands.size());
    for (const auto& c : cands) {
      texts.push_back(Detokenize(tokens.WithReplacement(pos, c.token)));
    }
    const auto scores = meter.Classify(texts);
    for (std::size_t j = 0; j < cands.size(); ++j) {
      const double gap = scores[j].ProbabilityOf(target) - base;
      if (gap > gaps[pos]) {
        gaps[pos] = gap;
        out.best[pos] = cands[j];
        out.best_scores[pos] = scores[j];
      }
    }
  }
  out.ranking = MakeRanking(std::move(gaps), ImportanceScheme::kNIR);
  return out;
}

ImportanceRanking RankImportanceMaxGap(QueryMeter& meter,
                                       const SubstituteProvider& provider,
                                       const TokenizedText& tokens,
                                       std::size_t k) {
  const CandidateFn fn = [&](const TokenizedText& text, std::size_t pos) {
    return SanitizeCandidates(provider.Propose(text.view(), pos, k), text[pos]);
  };
  return RankImportanceMaxGapDetailed(meter, tokens, fn).ranking;
}

}  // namespace advtext
