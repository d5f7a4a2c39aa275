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

#ifndef ADVTEXT_PROVIDERS_PROVIDER_H_
#define ADVTEXT_PROVIDERS_PROVIDER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/core/types.h"

namespace advtext {

// Placeholder occupying a slot that has no current word: a fresh insertion
// point, or the single slot left after masking a bigram.
inline constexpr std::string_view kMaskToken = "[MASK]";

// Source of replacement candidates for one token slot.
//
// Propose() receives the whole context and the slot index. The slot holds
// either the word being replaced or kMaskToken. Results are ordered best
// first, hold at most |k| entries, carry scores in [0, 1], and never repeat
// the slot's current token. Implementations are immutable after
// construction and safe to share between threads.
class SubstituteProvider {
 public:
  virtual ~SubstituteProvider() = default;

  virtual std::vector<CandidateSubstitute> Propose(
      std::span<const std::string> tokens, std::size_t position,
      std::size_t k) const = 0;

  virtual std::string name() const = 0;
};

}  // namespace advtext

#endif  // ADVTEXT_PROVIDERS_PROVIDER_H_
