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

#ifndef ADVTEXT_VICTIMS_LINEAR_VICTIM_H_
#define ADVTEXT_VICTIMS_LINEAR_VICTIM_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "advtext/core/types.h"
#include "advtext/victims/victim.h"

namespace advtext {

inline constexpr std::size_t kDefaultMaxTokens = 512;

// Bag-of-words logistic regression over case-folded token presence.
// p(non-credible) = sigmoid(bias + sum of weights of the distinct
// in-vocabulary tokens among the first max_tokens tokens).
//
// File format (text, one item per line):
//   linear-victim v1
//   bias <decimal>
//   vocab <N>
//   <token>\t<index>        N lines, indices 0..N-1
//   weights <N>
//   <decimal>               N lines, weight of index 0..N-1
class LinearVictimModel {
 public:
  // |vocabulary[i]| is the token with weight index i. Throws
  // Error(kValidation) on size mismatch or duplicate tokens.
  LinearVictimModel(std::vector<std::string> vocabulary,
                    std::vector<double> weights, double bias);

  VictimScores Score(std::string_view text,
                     std::size_t max_tokens = kDefaultMaxTokens) const;
  double Logit(std::string_view text,
               std::size_t max_tokens = kDefaultMaxTokens) const;

  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }

  void Save(std::ostream& out) const;
  void SaveFile(const std::filesystem::path& path) const;
  // Throws Error(kFormat) for malformed content, Error(kIo) if unreadable.
  static LinearVictimModel Load(std::istream& in);
  static LinearVictimModel LoadFile(const std::filesystem::path& path);

  friend bool operator==(const LinearVictimModel& a,
                         const LinearVictimModel& b) {
    return a.vocabulary_ == b.vocabulary_ && a.weights_ == b.weights_ &&
           a.bias_ == b.bias_;
  }

 private:
  std::vector<std::string> vocabulary_;
  std::vector<double> weights_;
  double bias_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct TrainingConfig {
  int epochs = 40;
  double learning_rate = 0.5;
  std::uint64_t seed = 1;
};

struct TrainingResult {
  LinearVictimModel model;
  double training_accuracy = 0.0;
};

// Stochastic gradient descent on the logistic loss, zero-initialised, one
// seeded shuffle per epoch. The same corpus, config and seed always produce
// the same model bit for bit.
// Throws Error(kDegenerateCorpus) unless both labels occur.
TrainingResult TrainLinearVictim(std::span<const TextInstance> corpus,
                                 const TrainingConfig& config);

// Case-folded token set used as features; exposed for tests.
std::vector<std::string> LinearFeatures(std::string_view text,
                                        std::size_t max_tokens);

class LinearVictim : public Victim {
 public:
  explicit LinearVictim(std::shared_ptr<const LinearVictimModel> model,
                        std::size_t batch_limit = kDefaultBatchLimit,
                        std::size_t max_tokens = kDefaultMaxTokens);

  std::string name() const override { return "builtin"; }
  const LinearVictimModel& model() const { return *model_; }

 protected:
  std::vector<VictimScores> ClassifyBatch(std::span<const std::string> texts,
                                          std::uint64_t& charged) override;

 private:
  std::shared_ptr<const LinearVictimModel> model_;
  std::size_t max_tokens_;
};

}  // namespace advtext

#endif  // ADVTEXT_VICTIMS_LINEAR_VICTIM_H_
