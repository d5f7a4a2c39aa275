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

#include "mocks.h"

#include <algorithm>
#include <cmath>

#include "advtext/core/tokenizer.h"
#include "advtext/core/utf8.h"

namespace advtext::testing {

std::vector<VictimScores> FunctionVictim::ClassifyBatch(std::span<const std::string> texts,
                                                        std::uint64_t& /*charged*/) {
  std::vector<VictimScores> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    if (recording_) {
      std::lock_guard lock(mu_);
      sent_.push_back(t);
    }
    out.push_back(fn_(t));
  }
  return out;
}

VictimScores FromNonCredible(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return VictimScores{1.0 - p, p};
}

namespace {

std::set<std::string> FoldedSet(const std::string& text) {
  std::set<std::string> out;
  const TokenizedText tokens = Tokenize(text);
  for (const auto& t : tokens.tokens()) out.insert(utf8::FoldCase(t));
  return out;
}

}  // namespace

ScoreFn ThresholdScore(std::set<std::string> triggers, std::size_t needed) {
  return [triggers = std::move(triggers), needed](const std::string& text) {
    std::size_t hits = 0;
    for (const auto& t : FoldedSet(text)) hits += triggers.count(t);
    if (hits >= needed) return FromNonCredible(0.2);
    // Stays above 0.5 until the boundary, falling a little per trigger.
    const double step = 0.3 / static_cast<double>(needed);
    return FromNonCredible(0.9 - step * static_cast<double>(hits));
  };
}

ScoreFn KeywordScore(std::map<std::string, double> weights, double bias) {
  return [weights = std::move(weights), bias](const std::string& text) {
    double logit = bias;
    for (const auto& t : FoldedSet(text)) {
      const auto it = weights.find(t);
      if (it != weights.end()) logit += it->second;
    }
    return FromNonCredible(1.0 / (1.0 + std::exp(-logit)));
  };
}

std::shared_ptr<FunctionProvider> ListProvider(std::vector<std::string> words) {
  return std::make_shared<FunctionProvider>(
      [words = std::move(words)](std::span<const std::string> tokens, std::size_t position,
                                 std::size_t k) {
        std::vector<CandidateSubstitute> out;
        const double n = static_cast<double>(words.size());
        for (std::size_t i = 0; i < words.size() && out.size() < k; ++i) {
          if (words[i] == tokens[position]) continue;
          out.push_back({words[i], 1.0 - static_cast<double>(i) / n});
        }
        return out;
      });
}

}  // namespace advtext::testing
