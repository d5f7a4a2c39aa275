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

#ifndef ADVTEXT_ATTACKS_SESSION_H_
#define ADVTEXT_ATTACKS_SESSION_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/attacks/budget.h"
#include "advtext/attacks/config.h"
#include "advtext/attacks/outcome.h"
#include "advtext/core/edit_trace.h"
#include "advtext/core/tokenizer.h"

namespace advtext {

// Drops candidates that are empty, contain whitespace, equal |current|, or
// repeat an earlier entry. Order is preserved.
std::vector<CandidateSubstitute> SanitizeCandidates(
    std::vector<CandidateSubstitute> candidates, std::string_view current);

// Shared bookkeeping for one attack on one instance: the budgeted victim,
// the original prediction, and the text as edited so far. Construction
// spends one query on the original text.
class AttackSession {
 public:
  AttackSession(Victim& victim, const TextInstance& instance,
                const AttackConfig& config, std::string method_label);

  QueryMeter& meter() { return meter_; }
  const AttackConfig& config() const { return config_; }
  const TextInstance& instance() const { return instance_; }
  const TokenizedText& original() const { return original_; }
  const VictimScores& original_scores() const { return original_scores_; }
  Label original_prediction() const { return original_prediction_; }
  // The class an attack pushes toward.
  Label target() const { return Opposite(original_prediction_); }

  double TargetProbability(const VictimScores& s) const {
    return s.ProbabilityOf(target());
  }
  bool Flipped(const VictimScores& s) const {
    return PredictedLabel(s) != original_prediction_;
  }

  const TokenizedText& current() const { return current_; }
  const VictimScores& current_scores() const { return current_scores_; }
  double current_target() const { return TargetProbability(current_scores_); }
  const EditTrace& trace() const { return trace_; }
  bool done() const { return Flipped(current_scores_); }

  void Apply(TokenizedText next, const VictimScores& scores, Edit edit);
  void SetState(TokenizedText next, const VictimScores& scores, EditTrace trace);
  // Back to the unedited text with an empty trace.
  void Reset();

  std::vector<VictimScores> Classify(const std::vector<TokenizedText>& texts);

  struct Probe {
    std::optional<std::size_t> best;  // index of the largest gap
    double gap = 0.0;                 // relative to current()
    VictimScores scores;
    bool flipped = false;
  };
  // Queries |texts| one by one and stops at the first one that flips the
  // decision. Otherwise reports the largest gap (first on ties).
  Probe ProbeSequential(const std::vector<TokenizedText>& texts);

  AttackOutcome Finish() const;

  // Runs |body| and turns an exhausted budget into a failed outcome built
  // from the current state.
  AttackOutcome Run(const std::function<void()>& body);

 private:
  const AttackConfig& config_;
  const TextInstance& instance_;
  std::string method_label_;
  QueryMeter meter_;
  TokenizedText original_;
  VictimScores original_scores_;
  Label original_prediction_;
  TokenizedText current_;
  VictimScores current_scores_;
  EditTrace trace_;
  bool exhausted_ = false;
};

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_SESSION_H_
