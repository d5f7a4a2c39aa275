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

#include "advtext/attacks/session.h"

#include <algorithm>
#include <set>

#include "advtext/core/error.h"
#include "advtext/scoring/semantic.h"

namespace advtext {
namespace {

bool HasSpace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

}  // namespace

std::vector<CandidateSubstitute> SanitizeCandidates(
    std::vector<CandidateSubstitute> candidates, std::string_view current) {
  std::set<std::string, std::less<>> seen;
  std::vector<CandidateSubstitute> out;
  out.reserve(candidates.size());
  for (auto& c : candidates) {
    if (c.token.empty() || c.token == current || HasSpace(c.token)) continue;
    if (!seen.insert(c.token).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

AttackSession::AttackSession(Victim& victim, const TextInstance& instance,
                             const AttackConfig& config,
                             std::string method_label)
    : config_(config),
      instance_(instance),
      method_label_(std::move(method_label)),
      meter_(victim, config.query_budget),
      original_(Tokenize(instance)) {
  ValidateConfig(config);
  original_scores_ = meter_.ClassifyOne(Detokenize(original_));
  original_prediction_ = PredictedLabel(original_scores_);
  current_ = original_;
  current_scores_ = original_scores_;
}

void AttackSession::Apply(TokenizedText next, const VictimScores& scores,
                          Edit edit) {
  current_ = std::move(next);
  current_scores_ = scores;
  trace_.edits.push_back(std::move(edit));
}

void AttackSession::SetState(TokenizedText next, const VictimScores& scores,
                             EditTrace trace) {
  current_ = std::move(next);
  current_scores_ = scores;
  trace_ = std::move(trace);
}

void AttackSession::Reset() {
  current_ = original_;
  current_scores_ = original_scores_;
  trace_ = {};
}

std::vector<VictimScores> AttackSession::Classify(
    const std::vector<TokenizedText>& texts) {
  std::vector<std::string> strings;
  strings.reserve(texts.size());
  for (const auto& t : texts) strings.push_back(Detokenize(t));
  return meter_.Classify(strings);
}

AttackSession::Probe AttackSession::ProbeSequential(
    const std::vector<TokenizedText>& texts) {
  Probe probe;
  const double base = current_target();
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const VictimScores s = meter_.ClassifyOne(Detokenize(texts[i]));
    const double gap = TargetProbability(s) - base;
    if (Flipped(s)) {
      probe = Probe{i, gap, s, true};
      return probe;
    }
    if (!probe.best || gap > probe.gap) probe = Probe{i, gap, s, false};
  }
  return probe;
}

AttackOutcome AttackSession::Finish() const {
  AttackOutcome out(instance_);
  out.method_used = method_label_;
  out.queries_used = meter_.used();
  out.budget_exhausted = exhausted_;
  out.original_prediction = original_prediction_;
  const std::string original_text = instance_.Serialized();
  if (trace_.empty()) {
    out.adversarial_text = original_text;
    out.adversarial_prediction = original_prediction_;
    out.success = false;
  } else {
    out.adversarial_text = Detokenize(current_);
    out.trace = trace_;
    out.adversarial_prediction = PredictedLabel(current_scores_);
    out.success = Flipped(current_scores_);
  }
  const int con = out.success ? 1 : 0;
  const double sem = TokenOverlapScorer().Score(original_text, out.adversarial_text);
  out.scores = BodegaInstance(con, sem, CharScore(original_text, out.adversarial_text));
  return out;
}

AttackOutcome AttackSession::Run(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    exhausted_ = true;
    // The state may hold a partial edit set; it did not flip the decision.
  }
  return Finish();
}

}  // namespace advtext
