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

#include "advtext/providers/filter.h"

#include <algorithm>

#include "advtext/core/tokenizer.h"
#include "advtext/core/utf8.h"

namespace advtext {

const std::set<std::string, std::less<>>& DefaultStopwords() {
  static const std::set<std::string, std::less<>> kWords = {
      "a",          "about",    "above",   "after",      "again",
      "against",    "ain",      "all",     "am",         "an",
      "and",        "any",      "are",     "aren",       "as",
      "at",         "be",       "because", "been",       "before",
      "being",      "below",    "between", "both",       "but",
      "by",         "can",      "couldn",  "d",          "did",
      "didn",       "do",       "does",    "doesn",      "doing",
      "don",        "down",     "during",  "each",       "few",
      "for",        "from",     "further", "had",        "hadn",
      "has",        "hasn",     "have",    "haven",      "having",
      "he",         "her",      "here",    "hers",       "herself",
      "him",        "himself",  "his",     "how",        "i",
      "if",         "in",       "into",    "is",         "isn",
      "it",         "its",      "itself",  "just",       "ll",
      "m",          "ma",       "me",      "mightn",     "more",
      "most",       "mustn",    "my",      "myself",     "needn",
      "no",         "nor",      "not",     "now",        "o",
      "of",         "off",      "on",      "once",       "only",
      "or",         "other",    "our",     "ours",       "ourselves",
      "out",        "over",     "own",     "re",         "s",
      "same",       "shan",     "she",     "should",     "shouldn",
      "so",         "some",     "such",    "t",          "than",
      "that",       "the",      "their",   "theirs",     "them",
      "themselves", "then",     "there",   "these",      "they",
      "this",       "those",    "through", "to",         "too",
      "under",      "until",    "up",      "ve",         "very",
      "was",        "wasn",     "we",      "were",       "weren",
      "what",       "when",     "where",   "which",      "while",
      "who",        "whom",     "why",     "will",       "with",
      "won",        "wouldn",   "y",       "you",        "your",
      "yours",      "yourself", "yourselves",
  };
  return kWords;
}

bool IsStopword(std::string_view token) {
  return DefaultStopwords().contains(utf8::FoldCase(token));
}

bool TokenFilter::Accepts(std::string_view token) const {
  if (token.empty()) return false;
  if (stopwords.contains(utf8::FoldCase(token))) return false;
  if (exclude_subwords && token.starts_with(kSubwordMarker)) return false;
  if (!allow_punct_digits && (IsPunctuation(token) || IsDigits(token))) {
    return false;
  }
  return true;
}

std::vector<CandidateSubstitute> ApplyFilter(
    const TokenFilter& filter, std::vector<CandidateSubstitute> candidates) {
  std::erase_if(candidates, [&](const CandidateSubstitute& c) {
    return !filter.Accepts(c.token);
  });
  return candidates;
}

std::vector<CandidateSubstitute> PunctDigitCandidates() {
  static constexpr std::string_view kMarks[] = {
      ".", ",", ";", ":", "!", "?", "'", "\"", "(", ")", "-"};
  std::vector<CandidateSubstitute> out;
  for (const auto mark : kMarks) out.push_back({std::string(mark), 0.0});
  for (char d = '0'; d <= '9'; ++d) out.push_back({std::string(1, d), 0.0});
  return out;
}

}  // namespace advtext
