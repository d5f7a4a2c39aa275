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
#include "advtext/attacks/session.h"
#include "advtext/core/rng.h"
#include "advtext/providers/filter.h"

namespace advtext {
namespace {

struct Slot {
  std::size_t position;
  std::vector<CandidateSubstitute> candidates;
};

struct Individual {
  TokenizedText text;
  VictimScores scores;
  double fitness = 0.0;
};

EditTrace DiffTrace(const TokenizedText& original, const TokenizedText& text,
                    int generation) {
  EditTrace trace;
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] != text[i]) {
      trace.edits.push_back(Edit{EditKind::kReplace, i, {original[i]}, {text[i]},
                                 generation, original.PartOf(i)});
    }
  }
  return trace;
}

TokenizedText Mutate(const TokenizedText& text, const std::vector<Slot>& slots,
                     Rng& rng) {
  const Slot& slot = slots[rng.Uniform(slots.size())];
  const auto& c = slot.candidates[rng.Uniform(slot.candidates.size())];
  return text.WithReplacement(slot.position, c.token);
}

// Fitness-proportional pick; uniform when every fitness is zero.
std::size_t PickParent(const std::vector<Individual>& population, Rng& rng) {
  double total = 0.0;
  for (const auto& ind : population) total += ind.fitness;
  if (!(total > 0.0)) return rng.Uniform(population.size());
  const double u = rng.UniformDouble() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    acc += population[i].fitness;
    if (u < acc) return i;
  }
  return population.size() - 1;
}

TokenizedText Crossover(const TokenizedText& a, const TokenizedText& b,
                        const std::vector<Slot>& slots, Rng& rng) {
  TokenizedText child = a;
  for (const auto& slot : slots) {
    if (rng.Uniform(2) == 1 && b[slot.position] != a[slot.position]) {
      child = child.WithReplacement(slot.position, b[slot.position]);
    }
  }
  return child;
}

}  // namespace

AttackOutcome AttackGenetic(Victim& victim, const SubstituteProvider& provider,
                            const TextInstance& instance,
                            const AttackConfig& config, GeneticStats* stats) {
  AttackSession s(victim, instance, config, std::string(MethodLabel(Method::kGenetic)));
  GeneticStats local;
  GeneticStats& st = stats ? *stats : local;
  st = {};

  return s.Run([&] {
    Rng rng(config.seed);
    const TokenizedText& original = s.original();
    const TokenFilter filter;
    std::vector<Slot> slots;
    for (std::size_t pos = 0; pos < original.size(); ++pos) {
      if (IsStopword(original[pos]) || IsPunctuation(original[pos])) continue;
      auto c = ApplyFilter(
          filter, SanitizeCandidates(
                      provider.Propose(original.view(), pos, config.substitute_k),
                      original[pos]));
      if (!c.empty()) slots.push_back(Slot{pos, std::move(c)});
    }
    if (slots.empty()) return;

    const auto evaluate = [&](std::vector<TokenizedText> texts, int generation,
                              std::vector<Individual>& into) {
      const auto scores = s.Classify(texts);
      for (std::size_t i = 0; i < texts.size(); ++i) {
        into.push_back(Individual{std::move(texts[i]), scores[i],
                                  s.TargetProbability(scores[i])});
        const Individual& ind = into.back();
        if (s.Flipped(ind.scores)) {
          s.SetState(ind.text, ind.scores, DiffTrace(original, ind.text, generation));
          return true;
        }
      }
      return false;
    };
    const auto best_of = [](const std::vector<Individual>& pop) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness > pop[best].fitness) best = i;
      }
      return best;
    };

    std::vector<TokenizedText> initial;
    for (std::size_t i = 0; i < config.population_size; ++i) {
      initial.push_back(Mutate(original, slots, rng));
    }
    std::vector<Individual> population;
    if (evaluate(std::move(initial), 0, population)) return;

    for (int g = 1; g <= config.generations; ++g) {
      const Individual& elite = population[best_of(population)];
      st.best_fitness.push_back(elite.fitness);
      s.SetState(elite.text, elite.scores, DiffTrace(original, elite.text, g - 1));

      std::vector<TokenizedText> children;
      for (std::size_t i = 1; i < config.population_size; ++i) {
        const auto& p1 = population[PickParent(population, rng)].text;
        const auto& p2 = population[PickParent(population, rng)].text;
        children.push_back(Mutate(Crossover(p1, p2, slots, rng), slots, rng));
      }
      std::vector<Individual> next{elite};
      st.generations_run = g;
      const bool flipped = evaluate(std::move(children), g, next);
      population = std::move(next);
      if (flipped) {
        st.best_fitness.push_back(population[best_of(population)].fitness);
        return;
      }
    }
    const Individual& best = population[best_of(population)];
    st.best_fitness.push_back(best.fitness);
    s.SetState(best.text, best.scores,
               DiffTrace(original, best.text, config.generations));
  });
}

}  // namespace advtext
