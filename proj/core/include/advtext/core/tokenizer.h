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

#ifndef ADVTEXT_CORE_TOKENIZER_H_
#define ADVTEXT_CORE_TOKENIZER_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/core/types.h"

namespace advtext {

// Word-level view of a one- or two-part text. Value type: the With*()
// editors return a modified copy and keep the part boundary consistent.
class TokenizedText {
 public:
  TokenizedText() = default;
  // |part_boundary| is the index of the first token of part two, if any.
  // Throws Error(kValidation) when a part would be empty or a token is empty.
  TokenizedText(std::vector<std::string> tokens,
                std::optional<std::size_t> part_boundary,
                std::string source_id = {});

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::span<const std::string> view() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  std::optional<std::size_t> part_boundary() const { return part_boundary_; }
  const std::string& source_id() const { return source_id_; }

  // 0 for the first part, 1 for the second.
  int PartOf(std::size_t index) const;

  TokenizedText WithReplacement(std::size_t index, std::string token) const;
  // Inserts |token| directly after |index|, in the same part as |index|.
  TokenizedText WithInsertionAfter(std::size_t index, std::string token) const;
  // Replaces the bigram (index, index + 1) with a single token.
  TokenizedText WithMerge(std::size_t index, std::string token) const;
  // A bigram can merge only when both tokens belong to the same part.
  bool CanMerge(std::size_t index) const;
  // Drops one token. Not allowed when it would empty its part.
  TokenizedText WithDeletion(std::size_t index) const;
  bool CanDelete(std::size_t index) const;

  // Tokenizer output for one part; opaque outside tokenizer.cc.
  struct Pieces;

  friend bool operator==(const TokenizedText& a, const TokenizedText& b) {
    return a.tokens_ == b.tokens_ && a.part_boundary_ == b.part_boundary_;
  }

 private:
  friend TokenizedText Tokenize(std::string_view text);
  friend TokenizedText Tokenize(const TextInstance& instance);
  friend std::string Detokenize(const TokenizedText& text);
  static TokenizedText FromPieces(std::vector<Pieces> parts,
                                  std::string source_id);

  std::vector<std::string> tokens_;
  // Whitespace that preceded each token in the source text; nullopt for
  // tokens built by hand or introduced by an edit.
  std::vector<std::optional<std::string>> gaps_;
  // Whitespace after the last token of each part.
  std::array<std::string, 2> tails_;
  std::optional<std::size_t> part_boundary_;
  std::string source_id_;
};

// Splits on whitespace and detaches leading/trailing punctuation
// (. , ; : ! ? ( ) ") into separate tokens. Casing is preserved. A tab in
// |text| is read as the part separator of a serialized pair.
// Throws Error(kEmptyText) when nothing but whitespace remains.
TokenizedText Tokenize(std::string_view text);
TokenizedText Tokenize(const TextInstance& instance);

// Tokens that came out of Tokenize() get their original whitespace back, so
// Detokenize(Tokenize(s)) == s and untouched regions of an edited text stay
// byte-identical. Other tokens are space-joined with punctuation re-attached:
// no space before . , ; : ! ? ) and none after (; double quotes alternate
// open/close. Parts are rejoined with a tab.
std::string Detokenize(const TokenizedText& text);
std::string DetokenizeTokens(std::span<const std::string> tokens);

// Collapses whitespace runs inside each tab-separated part and trims them.
std::string NormalizeWhitespace(std::string_view text);

// True for tokens made only of ASCII punctuation characters.
bool IsPunctuation(std::string_view token);
// True for tokens made only of ASCII digits.
bool IsDigits(std::string_view token);

}  // namespace advtext

#endif  // ADVTEXT_CORE_TOKENIZER_H_
