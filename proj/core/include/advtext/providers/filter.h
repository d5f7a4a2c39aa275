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

#ifndef ADVTEXT_PROVIDERS_FILTER_H_
#define ADVTEXT_PROVIDERS_FILTER_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/core/types.h"

namespace advtext {

// The embedded English stopword list (lower case). See docs/stopwords.md.
const std::set<std::string, std::less<>>& DefaultStopwords();

// Case-folded membership test against DefaultStopwords().
bool IsStopword(std::string_view token);

struct TokenFilter {
  std::set<std::string, std::less<>> stopwords = DefaultStopwords();
  // Drop word-piece continuations such as "##ing".
  bool exclude_subwords = true;
  bool allow_punct_digits = false;

  bool Accepts(std::string_view token) const;
};

inline constexpr std::string_view kSubwordMarker = "##";

// Keeps candidates the filter accepts, preserving order. Idempotent.
std::vector<CandidateSubstitute> ApplyFilter(
    const TokenFilter& filter, std::vector<CandidateSubstitute> candidates);

// . , ; : ! ? ' " ( ) - followed by the digits 0-9, each scored 0.0.
std::vector<CandidateSubstitute> PunctDigitCandidates();

}  // namespace advtext

#endif  // ADVTEXT_PROVIDERS_FILTER_H_
