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

#include "advtext/core/tokenizer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"

namespace advtext {

struct TokenizedText::Pieces {
  std::vector<std::string> tokens;
  std::vector<std::string> gaps;
  std::string tail;
};

namespace {

using Pieces = TokenizedText::Pieces;

constexpr std::string_view kDetachable = ".,;:!?()\"";

bool IsDetachable(char c) {
  return kDetachable.find(c) != std::string_view::npos;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
         c == '\t';
}


// Appends the pieces of one whitespace-free word. Every piece after the
// first is glued to its predecessor, so its recorded gap is empty.
void SplitWord(std::string_view word, std::string gap, Pieces& out) {
  const auto push = [&](std::string_view piece) {
    out.tokens.emplace_back(piece);
    out.gaps.push_back(std::move(gap));
    gap.clear();
  };
  std::size_t begin = 0;
  std::size_t end = word.size();
  while (begin < end && IsDetachable(word[begin])) {
    push(word.substr(begin, 1));
    ++begin;
  }
  std::size_t trail = end;
  while (trail > begin && IsDetachable(word[trail - 1])) --trail;
  if (trail > begin) push(word.substr(begin, trail - begin));
  for (std::size_t i = trail; i < end; ++i) push(word.substr(i, 1));
}

Pieces TokenizePart(std::string_view part) {
  Pieces pieces;
  std::size_t i = 0;
  while (i < part.size()) {
    const std::size_t space_start = i;
    while (i < part.size() && IsSpace(part[i])) ++i;
    std::size_t j = i;
    while (j < part.size() && !IsSpace(part[j])) ++j;
    if (j > i) {
      SplitWord(part.substr(i, j - i),
                std::string(part.substr(space_start, i - space_start)),
                pieces);
    } else {
      pieces.tail = std::string(part.substr(space_start));
    }
    i = j;
  }
  return pieces;
}

bool NoSpaceBefore(std::string_view token) {
  return token.size() == 1 && std::string_view(".,;:!?)").find(token[0]) !=
                                  std::string_view::npos;
}

}  // namespace

TokenizedText::TokenizedText(std::vector<std::string> tokens,
                             std::optional<std::size_t> part_boundary,
                             std::string source_id)
    : tokens_(std::move(tokens)),
      gaps_(tokens_.size()),
      part_boundary_(part_boundary),
      source_id_(std::move(source_id)) {
  if (tokens_.empty()) {
    throw Error(ErrorCode::kValidation, "tokenized text must not be empty");
  }
  if (part_boundary_ &&
      (*part_boundary_ == 0 || *part_boundary_ >= tokens_.size())) {
    throw Error(ErrorCode::kValidation, "part boundary leaves a part empty");
  }
  for (const auto& t : tokens_) {
    if (t.empty()) throw Error(ErrorCode::kValidation, "empty token");
  }
}

int TokenizedText::PartOf(std::size_t index) const {
  return part_boundary_ && index >= *part_boundary_ ? 1 : 0;
}

// Replacing a token keeps the whitespace in front of it.
TokenizedText TokenizedText::WithReplacement(std::size_t index,
                                             std::string token) const {
  if (index >= tokens_.size()) {
    throw Error(ErrorCode::kValidation, "replacement index out of range");
  }
  TokenizedText out = *this;
  out.tokens_[index] = std::move(token);
  if (out.tokens_[index].empty()) {
    throw Error(ErrorCode::kValidation, "empty replacement token");
  }
  return out;
}

TokenizedText TokenizedText::WithInsertionAfter(std::size_t index,
                                                std::string token) const {
  if (index >= tokens_.size()) {
    throw Error(ErrorCode::kValidation, "insertion index out of range");
  }
  if (token.empty()) throw Error(ErrorCode::kValidation, "empty token");
  TokenizedText out = *this;
  const auto at = static_cast<long>(index) + 1;
  out.tokens_.insert(out.tokens_.begin() + at, std::move(token));
  out.gaps_.insert(out.gaps_.begin() + at, std::nullopt);
  if (out.part_boundary_ && index < *out.part_boundary_) ++*out.part_boundary_;
  return out;
}

bool TokenizedText::CanMerge(std::size_t index) const {
  return index + 1 < tokens_.size() && PartOf(index) == PartOf(index + 1);
}

TokenizedText TokenizedText::WithMerge(std::size_t index,
                                       std::string token) const {
  if (!CanMerge(index)) {
    throw Error(ErrorCode::kValidation, "bigram cannot be merged");
  }
  if (token.empty()) throw Error(ErrorCode::kValidation, "empty token");
  TokenizedText out = *this;
  const auto next = static_cast<long>(index) + 1;
  out.tokens_[index] = std::move(token);
  out.tokens_.erase(out.tokens_.begin() + next);
  out.gaps_.erase(out.gaps_.begin() + next);
  if (out.part_boundary_ && index < *out.part_boundary_) --*out.part_boundary_;
  return out;
}

TokenizedText TokenizedText::WithDeletion(std::size_t index) const {
  if (!CanDelete(index)) {
    throw Error(ErrorCode::kValidation, "token cannot be deleted");
  }
  TokenizedText out = *this;
  const auto at = static_cast<long>(index);
  out.tokens_.erase(out.tokens_.begin() + at);
  out.gaps_.erase(out.gaps_.begin() + at);
  if (out.part_boundary_ && index < *out.part_boundary_) --*out.part_boundary_;
  return out;
}

bool TokenizedText::CanDelete(std::size_t index) const {
  if (index >= tokens_.size() || tokens_.size() < 2) return false;
  if (!part_boundary_) return true;
  const std::size_t part_size =
      PartOf(index) == 0 ? *part_boundary_ : tokens_.size() - *part_boundary_;
  return part_size > 1;
}

TokenizedText Tokenize(std::string_view text) {
  if (!utf8::IsValid(text)) {
    throw Error(ErrorCode::kValidation, "text is not valid UTF-8");
  }
  const std::size_t tab = text.find(kPartSeparator);
  std::vector<Pieces> parts{TokenizePart(text.substr(0, tab))};
  if (tab != std::string_view::npos) {
    parts.push_back(TokenizePart(text.substr(tab + 1)));
  }
  // A pair with one blank side degrades to a single part.
  std::erase_if(parts, [](const Pieces& p) { return p.tokens.empty(); });
  if (parts.empty()) throw Error(ErrorCode::kEmptyText, "text is empty");
  return TokenizedText::FromPieces(std::move(parts), {});
}

TokenizedText Tokenize(const TextInstance& instance) {
  std::vector<Pieces> parts;
  for (const auto& part : instance.parts()) parts.push_back(TokenizePart(part));
  for (const auto& p : parts) {
    if (p.tokens.empty()) throw Error(ErrorCode::kEmptyText, "text is empty");
  }
  return TokenizedText::FromPieces(std::move(parts), instance.id());
}

TokenizedText TokenizedText::FromPieces(std::vector<Pieces> parts,
                                        std::string source_id) {
  std::vector<std::string> tokens;
  std::optional<std::size_t> boundary;
  std::vector<std::optional<std::string>> gaps;
  std::array<std::string, 2> tails;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p == 1) boundary = tokens.size();
    for (std::size_t i = 0; i < parts[p].tokens.size(); ++i) {
      tokens.push_back(std::move(parts[p].tokens[i]));
      gaps.emplace_back(std::move(parts[p].gaps[i]));
    }
    tails[p] = std::move(parts[p].tail);
  }
  TokenizedText out(std::move(tokens), boundary, std::move(source_id));
  out.gaps_ = std::move(gaps);
  out.tails_ = std::move(tails);
  return out;
}

namespace {

// Rebuilds one part. A token with a recorded gap gets it back verbatim;
// tokens introduced by edits get the punctuation-aware default spacing.
std::string JoinPart(std::span<const std::string> tokens,
                     std::span<const std::optional<std::string>> gaps,
                     std::string_view tail) {
  std::string out;
  bool suppress_next_space = true;
  bool quote_open = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    bool space = !suppress_next_space;
    suppress_next_space = false;
    if (NoSpaceBefore(token)) space = false;
    if (token == "\"") {
      if (quote_open) {
        space = false;
      } else {
        suppress_next_space = true;
      }
      quote_open = !quote_open;
    } else if (token == "(") {
      suppress_next_space = true;
    }
    if (i < gaps.size() && gaps[i]) {
      out += *gaps[i];
    } else if (space) {
      out.push_back(' ');
    }
    out += token;
  }
  out += tail;
  return out;
}

}  // namespace

std::string DetokenizeTokens(std::span<const std::string> tokens) {
  return JoinPart(tokens, {}, {});
}

std::string Detokenize(const TokenizedText& text) {
  const std::span<const std::string> tokens = text.tokens();
  const std::span<const std::optional<std::string>> gaps = text.gaps_;
  if (!text.part_boundary()) return JoinPart(tokens, gaps, text.tails_[0]);
  const std::size_t b = *text.part_boundary();
  std::string out = JoinPart(tokens.first(b), gaps.first(b), text.tails_[0]);
  out.push_back(kPartSeparator);
  out += JoinPart(tokens.subspan(b), gaps.subspan(b), text.tails_[1]);
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  bool at_part_start = true;
  for (const char c : text) {
    if (c == kPartSeparator) {
      out.push_back(c);
      pending_space = false;
      at_part_start = true;
    } else if (IsSpace(c)) {
      pending_space = !at_part_start;
    } else {
      if (pending_space) out.push_back(' ');
      out.push_back(c);
      pending_space = false;
      at_part_start = false;
    }
  }
  return out;
}

bool IsPunctuation(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  });
}

bool IsDigits(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace advtext
