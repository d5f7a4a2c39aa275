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
#include <array>
#include <set>

#include "advtext/attacks/attacks.h"
#include "advtext/attacks/importance.h"
#include "advtext/attacks/session.h"
#include "advtext/core/utf8.h"
#include "advtext/providers/filter.h"

namespace advtext {
namespace {

bool Eligible(std::string_view word) {
  return !IsStopword(word) && !IsPunctuation(word) && !IsDigits(word);
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() + 1 &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsAlphabetic(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || c == '-' || c == '\'' ||
           static_cast<unsigned char>(c) >= 0x80;
  });
}

// Deletion importance; a word that is the only one in its part is masked
// instead, since a part may not become empty.
ImportanceRanking RankByDeletion(AttackSession& s) {
  const TokenizedText& text = s.original();
  std::vector<TokenizedText> probes;
  for (std::size_t i = 0; i < text.size(); ++i) {
    probes.push_back(text.CanDelete(i)
                         ? text.WithDeletion(i)
                         : text.WithReplacement(i, std::string(kUnkToken)));
  }
  const auto scores = s.Classify(probes);
  const Label predicted = s.original_prediction();
  const double base = s.original_scores().ProbabilityOf(predicted);
  std::vector<double> drops(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    drops[i] = base - scores[i].ProbabilityOf(predicted);
  }
  return MakeRanking(std::move(drops), ImportanceScheme::kDIR);
}

class TableProvider : public SubstituteProvider {
 public:
  explicit TableProvider(const EmbeddingTable& table) : table_(table) {}
  std::vector<CandidateSubstitute> Propose(std::span<const std::string> tokens,
                                           std::size_t position,
                                           std::size_t k) const override {
    return EmbeddingCandidates(table_, tokens[position], k);
  }
  std::string name() const override { return "embedding"; }

 private:
  const EmbeddingTable& table_;
};

}  // namespace

AttackOutcome AttackGswse(Victim& victim, const SubstituteProvider& neighbours,
                          const TextInstance& instance, const AttackConfig& config) {
  AttackSession s(victim, instance, config, std::string(MethodLabel(Method::kGSWSE)));
  return s.Run([&] {
    std::set<std::size_t> modified;
    for (int round = 0;; ++round) {
      const TokenizedText& text = s.current();
      double best_gap = 0.0;
      std::optional<std::size_t> best_pos;
      TokenizedText best_text;
      VictimScores best_scores;
      std::string best_token;
      for (std::size_t pos = 0; pos < text.size(); ++pos) {
        if (modified.count(pos) || !Eligible(text[pos])) continue;
        const auto cands = SanitizeCandidates(
            neighbours.Propose(text.view(), pos, config.substitute_k), text[pos]);
        if (cands.empty()) continue;
        std::vector<TokenizedText> texts;
        for (const auto& c : cands) texts.push_back(text.WithReplacement(pos, c.token));
        const auto scores = s.Classify(texts);
        for (std::size_t j = 0; j < cands.size(); ++j) {
          const double gap = s.TargetProbability(scores[j]) - s.current_target();
          if (gap > best_gap) {
            best_gap = gap;
            best_pos = pos;
            best_text = texts[j];
            best_scores = scores[j];
            best_token = cands[j].token;
          }
        }
      }
      if (!best_pos) return;
      modified.insert(*best_pos);
      Edit edit{EditKind::kReplace, *best_pos, {text[*best_pos]}, {best_token},
                round, text.PartOf(*best_pos)};
      s.Apply(std::move(best_text), best_scores, std::move(edit));
      if (s.done()) return;
    }
  });
}

AttackOutcome AttackGswse(Victim& victim, const EmbeddingTable& table,
                          const TextInstance& instance, const AttackConfig& config) {
  return AttackGswse(victim, TableProvider(table), instance, config);
}

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "noun";
    case PosTag::kVerb: return "verb";
    case PosTag::kAdjective: return "adjective";
    case PosTag::kOther: return "other";
  }
  return "other";
}

PosTag TagPartOfSpeech(std::string_view word) {
  const std::string w = utf8::FoldCase(word);
  if (IsStopword(w) || !IsAlphabetic(w)) return PosTag::kOther;
  if (EndsWith(w, "ly")) return PosTag::kOther;
  static constexpr std::array<std::string_view, 5> kVerb = {"ing", "ed", "ize",
                                                            "ise", "ify"};
  static constexpr std::array<std::string_view, 9> kAdjective = {
      "ous", "ful", "ive", "able", "ible", "less", "ic", "al", "ish"};
  for (const auto suffix : kVerb) {
    if (EndsWith(w, suffix)) return PosTag::kVerb;
  }
  for (const auto suffix : kAdjective) {
    if (EndsWith(w, suffix)) return PosTag::kAdjective;
  }
  return PosTag::kNoun;
}

bool PosCompatible(PosTag slot, PosTag candidate) {
  return slot == PosTag::kOther || slot == candidate;
}

AttackOutcome AttackTextFooler(Victim& victim,
                               const SubstituteProvider& neighbours,
                               const TextInstance& instance,
                               const AttackConfig& config) {
  AttackSession s(victim, instance, config,
                  std::string(MethodLabel(Method::kTextFooler)));
  return s.Run([&] {
    const auto ranking = RankByDeletion(s);
    for (const std::size_t pos : ranking.ranked_positions) {
      const std::string& word = s.current()[pos];
      if (!Eligible(word)) continue;
      const PosTag slot_tag = TagPartOfSpeech(word);
      auto cands = SanitizeCandidates(
          neighbours.Propose(s.current().view(), pos, config.substitute_k), word);
      std::erase_if(cands, [&](const CandidateSubstitute& c) {
        return c.score < config.min_candidate_score ||
               (config.pos_check &&
                !PosCompatible(slot_tag, TagPartOfSpeech(c.token)));
      });
      if (cands.empty()) continue;
      std::vector<TokenizedText> texts;
      for (const auto& c : cands) texts.push_back(s.current().WithReplacement(pos, c.token));
      const auto probe = s.ProbeSequential(texts);
      if (!probe.best || !(probe.flipped || probe.gap > 0.0)) continue;
      const std::size_t i = *probe.best;
      Edit edit{EditKind::kReplace, pos, {word}, {cands[i].token}, 0,
                s.current().PartOf(pos)};
      s.Apply(texts[i], probe.scores, std::move(edit));
      if (probe.flipped) return;
    }
  });
}

AttackOutcome AttackTextFooler(Victim& victim, const EmbeddingTable& table,
                               const TextInstance& instance,
                               const AttackConfig& config) {
  return AttackTextFooler(victim, TableProvider(table), instance, config);
}

}  // namespace advtext
