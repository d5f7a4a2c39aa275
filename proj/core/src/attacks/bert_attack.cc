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

#include "advtext/attacks/attacks.h"
#include "advtext/attacks/importance.h"
#include "advtext/attacks/session.h"
#include "advtext/providers/filter.h"

namespace advtext {
namespace {

bool SkippedWhenFiltering(std::string_view word) {
  return IsStopword(word) || IsPunctuation(word);
}

void DropBelow(std::vector<CandidateSubstitute>& c, double threshold) {
  std::erase_if(c, [&](const CandidateSubstitute& x) { return x.score < threshold; });
}

Edit ReplaceEdit(const TokenizedText& text, std::size_t pos,
                 const std::string& after, int iteration) {
  return Edit{EditKind::kReplace, pos, {text[pos]}, {after}, iteration,
              text.PartOf(pos)};
}

// Probes |candidates| in slot |pos| of the current text and keeps the best
// one if it flips the decision or moves toward the target. Returns true
// once the decision has flipped.
bool TrySlot(AttackSession& s, std::size_t pos,
             const std::vector<CandidateSubstitute>& candidates, int iteration) {
  if (candidates.empty()) return false;
  std::vector<TokenizedText> texts;
  texts.reserve(candidates.size());
  for (const auto& c : candidates) {
    texts.push_back(s.current().WithReplacement(pos, c.token));
  }
  const auto probe = s.ProbeSequential(texts);
  if (!probe.best || !(probe.flipped || probe.gap > 0.0)) return false;
  const std::size_t i = *probe.best;
  s.Apply(texts[i], probe.scores,
          ReplaceEdit(s.current(), pos, candidates[i].token, iteration));
  return probe.flipped;
}

}  // namespace

AttackOutcome AttackBam(Victim& victim, const SubstituteProvider& provider,
                        const TextInstance& instance, const AttackConfig& config) {
  AttackSession s(victim, instance, config, std::string(MethodLabel(config.method)));
  return s.Run([&] {
    const auto ranking =
        RankImportanceUnk(s.meter(), s.original(), &s.original_scores());
    const TokenFilter filter;
    for (const std::size_t pos : ranking.ranked_positions) {
      const std::string& word = s.current()[pos];
      if (SkippedWhenFiltering(word)) continue;
      auto candidates = ApplyFilter(
          filter, SanitizeCandidates(
                      provider.Propose(s.current().view(), pos, config.substitute_k),
                      word));
      DropBelow(candidates, config.pred_threshold);
      if (TrySlot(s, pos, candidates, 0)) return;
    }
  });
}

AttackOutcome AttackBam2(Victim& victim, const SubstituteProvider& provider,
                         const TextInstance& instance, const AttackConfig& config) {
  AttackSession s(victim, instance, config, std::string(MethodLabel(Method::kBAm2)));
  const TokenFilter filter;
  const auto candidates_for = [&](int iteration) -> CandidateFn {
    return [&, iteration](const TokenizedText& text, std::size_t pos) {
      const std::string& word = text[pos];
      const bool filtered = iteration == 0;
      if (filtered && SkippedWhenFiltering(word)) {
        return std::vector<CandidateSubstitute>{};
      }
      auto c = SanitizeCandidates(
          provider.Propose(text.view(), pos, Bam2SubstituteK(iteration)), word);
      if (filtered) c = ApplyFilter(filter, std::move(c));
      DropBelow(c, config.pred_threshold);
      // Punctuation and digits carry score 0 and bypass the threshold.
      if (iteration >= kBam2PunctDigitIteration) {
        auto extra = PunctDigitCandidates();
        c.insert(c.end(), extra.begin(), extra.end());
        c = SanitizeCandidates(std::move(c), word);
      }
      return c;
    };
  };

  return s.Run([&] {
    // The ranking probes every slot with the iteration-0 candidates, so the
    // 0th iteration's choice is already known and costs nothing more.
    const auto nir = RankImportanceMaxGapDetailed(
        s.meter(), s.original(), candidates_for(0), &s.original_scores());
    const auto& order = nir.ranking.ranked_positions;
    const std::size_t top = order.front();
    if (nir.best[top] && (s.Flipped(nir.best_scores[top]) ||
                          nir.ranking.gap_scores.front() > 0.0)) {
      const auto& token = nir.best[top]->token;
      s.Apply(s.current().WithReplacement(top, token), nir.best_scores[top],
              ReplaceEdit(s.current(), top, token, 0));
      if (s.done()) return;
    }

    const int iterations = Bam2Iterations(config);
    for (int iteration = 1; iteration < iterations; ++iteration) {
      s.Reset();
      const CandidateFn candidates = candidates_for(iteration);
      const std::size_t words = std::min(Bam2WordCount(iteration), order.size());
      for (std::size_t r = 0; r < words; ++r) {
        const std::size_t pos = order[r];
        if (TrySlot(s, pos, candidates(s.current(), pos), iteration)) return;
      }
    }
  });
}

}  // namespace advtext
