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

#ifndef ADVTEXT_SCORING_LEVENSHTEIN_H_
#define ADVTEXT_SCORING_LEVENSHTEIN_H_

#include <cstddef>
#include <string_view>

namespace advtext {

// Minimum number of single-character insertions, deletions and
// substitutions turning |a| into |b|, counted over Unicode scalar values.
// Throws Error(kValidation) on invalid UTF-8.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// Same over already-decoded code points. Bit-parallel in O(|a|) words when
// the shorter side has at most 64 code points, otherwise a one-row dynamic
// programme in O(|a|·|b|) time and O(min(|a|, |b|)) memory.
std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);

}  // namespace advtext

#endif  // ADVTEXT_SCORING_LEVENSHTEIN_H_
