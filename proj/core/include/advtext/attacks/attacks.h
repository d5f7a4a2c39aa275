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

#ifndef ADVTEXT_ATTACKS_ATTACKS_H_
#define ADVTEXT_ATTACKS_ATTACKS_H_

#include <string_view>
#include <vector>

#include "advtext/attacks/config.h"
#include "advtext/attacks/outcome.h"
#include "advtext/core/types.h"
#include "advtext/providers/embeddings.h"
#include "advtext/providers/provider.h"
#include "advtext/victims/victim.h"

// Every attack below spends at most config.query_budget victim queries on
// the instance (one of them on the unedited text) and never throws
// kBudgetExceeded: running out ends the attack with a failed outcome.
// Other errors (provider or victim unavailable) propagate.

namespace advtext {

// BERT-Attack. Positions are visited in [UNK]-masking order; stopwords and
// punctuation are skipped. Each slot gets up to substitute_k filtered
// candidates scoring at least pred_threshold. A candidate that flips the
// decision ends the attack, otherwise the one with the largest positive gap
// is kept. Config {36, 0.3} is the stock attack, {72, 0.2} the widened one.
AttackOutcome AttackBam(Victim& victim, const SubstituteProvider& provider,
                        const TextInstance& instance, const AttackConfig& config);

// Escalating schedule over a max-gap ranking computed once up front:
//   iteration 0   top word,            k = 36, candidate filter on
//   iteration 1   top 2 words,         k = 36, filter off
//   iteration i   top i + 1 words,     k = 36 i
//   iteration 5+  punctuation and digits join every candidate list
// Each iteration starts again from the original text and applies its
// replacements greedily in rank order; the first flip ends the attack.
// The returned trace holds the edits of the last iteration run.
AttackOutcome AttackBam2(Victim& victim, const SubstituteProvider& provider,
                         const TextInstance& instance, const AttackConfig& config);

struct GeneticStats {
  // Best fitness of the initial population, then after each generation.
  std::vector<double> best_fitness;
  int generations_run = 0;
};

// Population search: individuals start as single random substitutions;
// fitness is the victim's probability of the target class. Each generation
// keeps the best individual unchanged, then breeds the rest from
// fitness-proportional parents with uniform crossover and a one-word
// mutation. Deterministic for a fixed config.seed.
AttackOutcome AttackGenetic(Victim& victim, const SubstituteProvider& provider,
                            const TextInstance& instance,
                            const AttackConfig& config,
                            GeneticStats* stats = nullptr);

// Greedy word swap over embedding neighbours: each round tries every
// neighbour at every unmodified non-stopword position and keeps the single
// best swap if it helps. A position is never modified twice.
AttackOutcome AttackGswse(Victim& victim, const SubstituteProvider& neighbours,
                          const TextInstance& instance, const AttackConfig& config);
AttackOutcome AttackGswse(Victim& victim, const EmbeddingTable& table,
                          const TextInstance& instance, const AttackConfig& config);

enum class PosTag { kNoun, kVerb, kAdjective, kOther };
std::string_view PosTagName(PosTag tag);
// Suffix heuristic: -ing/-ed/-ize/-ise/-ify are verbs, -ous/-ful/-ive/
// -able/-ible/-less/-ic/-al/-ish adjectives, -ly and function words other,
// anything else a noun.
PosTag TagPartOfSpeech(std::string_view word);
// A slot tagged other accepts anything; otherwise tags must agree.
bool PosCompatible(PosTag slot, PosTag candidate);

// TextFooler with a coarse tagger. Importance is the probability drop when
// a word is deleted; neighbours below min_candidate_score or with a
// different part of speech (when pos_check is set) are skipped.
AttackOutcome AttackTextFooler(Victim& victim,
                               const SubstituteProvider& neighbours,
                               const TextInstance& instance,
                               const AttackConfig& config);
AttackOutcome AttackTextFooler(Victim& victim, const EmbeddingTable& table,
                               const TextInstance& instance,
                               const AttackConfig& config);

// Character-level edits (adjacent swap, substitution, deletion, insertion)
// on words in [UNK]-masking order. substitute_k random edits are tried per
// word; at most max_iterations words are changed.
AttackOutcome AttackDeepWordBug(Victim& victim, const TextInstance& instance,
                                const AttackConfig& config);

// Mask-then-infill with three perturbations per position: replace the
// word, insert a word after it, or merge it with its right neighbour. Each
// proposal scores victim gap times infill score; the best positive one is
// applied until the decision flips or max_iterations is reached.
AttackOutcome AttackClare(Victim& victim, const SubstituteProvider& infill,
                          const TextInstance& instance, const AttackConfig& config);

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_ATTACKS_H_
