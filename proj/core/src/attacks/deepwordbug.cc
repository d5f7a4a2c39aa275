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

#include <set>

#include "advtext/attacks/attacks.h"
#include "advtext/attacks/importance.h"
#include "advtext/attacks/session.h"
#include "advtext/core/rng.h"
#include "advtext/core/utf8.h"

namespace advtext {
namespace {

constexpr std::u32string_view kAlphabet = U"abcdefghijklmnopqrstuvwxyz";

char32_t RandomLetter(Rng& rng) { return kAlphabet[rng.Uniform(kAlphabet.size())]; }

// One random edit of the given kind, or nothing when the word is too short
// for it. Kinds cycle swap, substitute, delete, insert.
std::optional<std::u32string> RandomEdit(const std::u32string& w, int kind,
                                         Rng& rng) {
  std::u32string out = w;
  switch (kind) {
    case 0: {
      if (w.size() < 2) return std::nullopt;
      const std::size_t i = rng.Uniform(w.size() - 1);
      std::swap(out[i], out[i + 1]);
      break;
    }
    case 1: {
      const std::size_t i = rng.Uniform(w.size());
      out[i] = RandomLetter(rng);
      break;
    }
    case 2: {
      if (w.size() < 2) return std::nullopt;
      out.erase(rng.Uniform(w.size()), 1);
      break;
    }
    default:
      out.insert(out.begin() + static_cast<long>(rng.Uniform(w.size() + 1)),
                 RandomLetter(rng));
  }
  if (out == w) return std::nullopt;
  return out;
}

std::vector<std::string> CharacterCandidates(std::string_view word,
                                             std::size_t count, Rng& rng) {
  const std::u32string w = utf8::Decode(word);
  std::set<std::u32string> seen;
  std::vector<std::string> out;
  // Bounded retries: short words have few distinct edits.
  for (std::size_t attempt = 0; attempt < count * 8 && out.size() < count; ++attempt) {
    auto edited = RandomEdit(w, static_cast<int>(attempt % 4), rng);
    if (edited && seen.insert(*edited).second) out.push_back(utf8::Encode(*edited));
  }
  return out;
}

}  // namespace

AttackOutcome AttackDeepWordBug(Victim& victim, const TextInstance& instance,
                                const AttackConfig& config) {
  AttackSession s(victim, instance, config,
                  std::string(MethodLabel(Method::kDeepWordBug)));
  return s.Run([&] {
    Rng rng(config.seed);
    const auto ranking =
        RankImportanceUnk(s.meter(), s.original(), &s.original_scores());
    int edited = 0;
    for (const std::size_t pos : ranking.ranked_positions) {
      if (edited >= config.max_iterations) return;
      const std::string word = s.current()[pos];
      if (IsPunctuation(word)) continue;
      const auto cands = CharacterCandidates(word, config.substitute_k, rng);
      if (cands.empty()) continue;
      std::vector<TokenizedText> texts;
      for (const auto& c : cands) texts.push_back(s.current().WithReplacement(pos, c));
      const auto probe = s.ProbeSequential(texts);
      if (!probe.best || !(probe.flipped || probe.gap > 0.0)) continue;
      const std::size_t i = *probe.best;
      s.Apply(texts[i], probe.scores,
              Edit{EditKind::kCharEdit, pos, {word}, {cands[i]}, edited,
                   s.current().PartOf(pos)});
      ++edited;
      if (probe.flipped) return;
    }
  });
}

}  // namespace advtext
