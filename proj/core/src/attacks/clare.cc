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

#include "advtext/attacks/attacks.h"
#include "advtext/attacks/session.h"

namespace advtext {
namespace {

struct Proposal {
  TokenizedText text;
  Edit edit;
  double infill_score = 0.0;
};

void AddProposals(const TokenizedText& text, std::size_t pos,
                  const SubstituteProvider& infill, std::size_t k,
                  std::vector<Proposal>& out) {
  const std::string mask(kMaskToken);
  const int part = text.PartOf(pos);

  for (const auto& c : SanitizeCandidates(infill.Propose(text.view(), pos, k), text[pos])) {
    out.push_back({text.WithReplacement(pos, c.token),
                   Edit{EditKind::kReplace, pos, {text[pos]}, {c.token}, 0, part},
                   c.score});
  }

  const TokenizedText inserted = text.WithInsertionAfter(pos, mask);
  for (const auto& c : SanitizeCandidates(infill.Propose(inserted.view(), pos + 1, k), mask)) {
    out.push_back({text.WithInsertionAfter(pos, c.token),
                   Edit{EditKind::kInsert, pos + 1, {}, {c.token}, 0, part},
                   c.score});
  }

  if (!text.CanMerge(pos)) return;
  const TokenizedText merged = text.WithMerge(pos, mask);
  for (const auto& c : SanitizeCandidates(infill.Propose(merged.view(), pos, k), mask)) {
    out.push_back({text.WithMerge(pos, c.token),
                   Edit{EditKind::kMerge, pos, {text[pos], text[pos + 1]}, {c.token}, 0, part},
                   c.score});
  }
}

}  // namespace

AttackOutcome AttackClare(Victim& victim, const SubstituteProvider& infill,
                          const TextInstance& instance, const AttackConfig& config) {
  AttackSession s(victim, instance, config, std::string(MethodLabel(Method::kCLARE)));
  return s.Run([&] {
    for (int iteration = 0; iteration < config.max_iterations; ++iteration) {
      const TokenizedText text = s.current();
      std::optional<Proposal> best;
      VictimScores best_scores;
      double best_value = 0.0;
      bool best_flips = false;
      for (std::size_t pos = 0; pos < text.size(); ++pos) {
        std::vector<Proposal> proposals;
        AddProposals(text, pos, infill, config.substitute_k, proposals);
        if (proposals.empty()) continue;
        std::vector<TokenizedText> texts;
        texts.reserve(proposals.size());
        for (const auto& p : proposals) texts.push_back(p.text);
        const auto scores = s.Classify(texts);
        for (std::size_t j = 0; j < proposals.size(); ++j) {
          const double gap = s.TargetProbability(scores[j]) - s.current_target();
          const double value = gap * proposals[j].infill_score;
          const bool flips = s.Flipped(scores[j]);
          // A flipping proposal beats any that does not; within a group the
          // larger gap-times-score wins, earlier proposals on ties.
          const bool better =
              flips != best_flips ? flips
                                  : (!best ? (flips || value > 0.0) : value > best_value);
          if (better) {
            best = proposals[j];
            best_scores = scores[j];
            best_value = value;
            best_flips = flips;
          }
        }
      }
      if (!best) return;
      best->edit.iteration = iteration;
      s.Apply(std::move(best->text), best_scores, std::move(best->edit));
      if (s.done()) return;
    }
  });
}

}  // namespace advtext
