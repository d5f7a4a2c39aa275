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

#include "advtext/victims/victim.h"

#include <algorithm>

#include "advtext/core/error.h"

namespace advtext {

Victim::Victim(std::size_t batch_limit, std::size_t max_text_bytes)
    : batch_limit_(batch_limit), max_text_bytes_(max_text_bytes) {
  if (batch_limit_ == 0) {
    throw Error(ErrorCode::kValidation, "batch limit must be positive");
  }
}

std::vector<VictimScores> Victim::Classify(std::span<const std::string> texts,
                                           std::uint64_t* charged) {
  if (charged) *charged = 0;
  for (const auto& text : texts) {
    if (text.size() > max_text_bytes_) {
      throw Error(ErrorCode::kTextTooLong,
                  std::to_string(text.size()) + "-byte text exceeds limit of " +
                      std::to_string(max_text_bytes_));
    }
  }
  std::vector<VictimScores> out;
  out.reserve(texts.size());
  for (std::size_t begin = 0; begin < texts.size(); begin += batch_limit_) {
    const std::size_t n = std::min(batch_limit_, texts.size() - begin);
    std::uint64_t batch_charged = n;
    std::vector<VictimScores> scores;
    try {
      scores = ClassifyBatch(texts.subspan(begin, n), batch_charged);
    } catch (...) {
      // Texts that reached the backend count even when the call failed.
      queries_.fetch_add(batch_charged);
      if (charged) *charged += batch_charged;
      throw;
    }
    queries_.fetch_add(batch_charged);
    if (charged) *charged += batch_charged;
    if (scores.size() != n) {
      throw Error(ErrorCode::kProtocol, "victim returned " +
                                            std::to_string(scores.size()) +
                                            " scores for " + std::to_string(n) +
                                            " texts");
    }
    out.insert(out.end(), scores.begin(), scores.end());
  }
  return out;
}

VictimScores Victim::ClassifyOne(const std::string& text) {
  return Classify(std::span(&text, 1)).front();
}

}  // namespace advtext
