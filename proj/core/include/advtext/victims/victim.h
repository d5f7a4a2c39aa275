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

#ifndef ADVTEXT_VICTIMS_VICTIM_H_
#define ADVTEXT_VICTIMS_VICTIM_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "advtext/core/types.h"

namespace advtext {

inline constexpr std::size_t kDefaultBatchLimit = 64;
inline constexpr std::size_t kDefaultMaxTextBytes = std::size_t{1} << 20;

// Black-box classifier under attack. Attacks see only Classify(); model
// internals stay behind concrete subclasses.
//
// Classify() splits input into batches of at most batch_limit() texts and
// adds every text sent (including retried ones) to a process-wide query
// counter that is never reset. Safe to call concurrently.
class Victim {
 public:
  explicit Victim(std::size_t batch_limit = kDefaultBatchLimit,
                  std::size_t max_text_bytes = kDefaultMaxTextBytes);
  virtual ~Victim() = default;

  Victim(const Victim&) = delete;
  Victim& operator=(const Victim&) = delete;

  // One VictimScores per text, in order. An empty batch is a no-op.
  // |charged| receives the number of queries this call added to queries().
  // Throws Error(kTextTooLong) before sending anything if a text is longer
  // than max_text_bytes().
  std::vector<VictimScores> Classify(std::span<const std::string> texts,
                                     std::uint64_t* charged = nullptr);
  VictimScores ClassifyOne(const std::string& text);

  std::uint64_t queries() const { return queries_.load(); }
  std::size_t batch_limit() const { return batch_limit_; }
  std::size_t max_text_bytes() const { return max_text_bytes_; }

  virtual std::string name() const = 0;

 protected:
  // Scores a non-empty batch of at most batch_limit() texts. |charged| is
  // preset to texts.size(); backends that retry add the extra texts sent.
  virtual std::vector<VictimScores> ClassifyBatch(
      std::span<const std::string> texts, std::uint64_t& charged) = 0;

 private:
  std::size_t batch_limit_;
  std::size_t max_text_bytes_;
  std::atomic<std::uint64_t> queries_{0};
};

}  // namespace advtext

#endif  // ADVTEXT_VICTIMS_VICTIM_H_
