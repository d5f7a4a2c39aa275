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

#include "advtext/harness/runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "advtext/core/error.h"
#include "advtext/core/rng.h"

namespace advtext {

std::uint64_t InstanceSeed(std::uint64_t master, std::string_view id) {
  return DeriveSeed(master, StableHash(id));
}

void Rescore(AttackOutcome& outcome, const SemanticScorer& scorer) {
  const std::string original = outcome.instance.Serialized();
  const double sem = scorer.Score(original, outcome.adversarial_text);
  outcome.scores = BodegaInstance(outcome.scores.con, sem, outcome.scores.chr);
}

RunResult RunAttackSet(const TaskDataset& dataset, Victim& victim,
                       const Attack& attack, const SemanticScorer& scorer,
                       const RunOptions& options) {
  if (dataset.instances.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset '" + dataset.name + "' is empty");
  }
  const std::size_t n = dataset.instances.size();
  std::vector<std::optional<AttackOutcome>> slots(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  const auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      const TextInstance& inst = dataset.instances[i];
      try {
        AttackOutcome out = attack.Run(victim, inst, InstanceSeed(options.seed, inst.id()));
        Rescore(out, scorer);
        slots[i] = std::move(out);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.parallelism, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  RunResult result;
  const std::string victim_label =
      options.victim_label.empty() ? victim.name() : options.victim_label;
  std::vector<InstanceScore> scores;
  for (auto& slot : slots) {
    scores.push_back(InstanceScore{slot->scores, slot->queries_used});
    result.outcomes.push_back(
        OutcomeRecord{dataset.name, victim_label, attack.name(), std::move(*slot)});
  }
  result.row = ReportRow{dataset.name, victim_label, attack.name(), AggregateScores(scores)};
  return result;
}

std::vector<ReportRow> ScorePairs(std::vector<OutcomeRecord>& records, Victim& victim,
                                  const SemanticScorer& scorer) {
  for (auto& r : records) {
    AttackOutcome& o = r.outcome;
    const std::string original = o.instance.Serialized();
    const std::vector<std::string> texts{original, o.adversarial_text};
    const auto preds = victim.Classify(texts);
    o.original_prediction = PredictedLabel(preds[0]);
    o.adversarial_prediction = PredictedLabel(preds[1]);
    const int con = ConScore(o.original_prediction, o.adversarial_prediction);
    o.success = con == 1;
    o.scores = BodegaInstance(con, scorer.Score(original, o.adversarial_text),
                              CharScore(original, o.adversarial_text));
  }
  return SummarizeOutcomes(records);
}

}  // namespace advtext
