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

#include "advtext/scoring/semantic.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "advtext/core/error.h"
#include "advtext/core/tokenizer.h"
#include "advtext/core/utf8.h"

namespace advtext {
namespace {

std::vector<std::string> FoldedTokens(std::string_view text) {
  std::vector<std::string> out;
  try {
    const TokenizedText tokens = Tokenize(text);
    for (const auto& t : tokens.tokens()) out.push_back(utf8::FoldCase(t));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyText) throw;
  }
  return out;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\v' ||
         c == '\f';
}

std::string Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

double SemanticScorer::Score(std::string_view a, std::string_view b) const {
  if (a == b) return 1.0;
  const double s = ScoreDistinct(a, b);
  if (!std::isfinite(s)) return 0.0;
  return std::clamp(s, 0.0, 1.0);
}

double TokenOverlapScorer::ScoreDistinct(std::string_view a,
                                         std::string_view b) const {
  const auto ta = FoldedTokens(a);
  const auto tb = FoldedTokens(b);
  if (ta.empty() && tb.empty()) return 1.0;
  if (ta.empty() || tb.empty()) return 0.0;
  std::map<std::string, int> counts;
  for (const auto& t : ta) ++counts[t];
  std::size_t overlap = 0;
  for (const auto& t : tb) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(tb.size());
  const double recall = static_cast<double>(overlap) / static_cast<double>(ta.size());
  return 2.0 * precision * recall / (precision + recall);
}

EmbeddingCosineScorer::EmbeddingCosineScorer(
    std::shared_ptr<const EmbeddingTable> table)
    : table_(std::move(table)) {}

double EmbeddingCosineScorer::ScoreDistinct(std::string_view a,
                                            std::string_view b) const {
  const auto mean = [&](std::string_view text) {
    std::vector<double> m(table_->dimension(), 0.0);
    int count = 0;
    for (const auto& t : FoldedTokens(text)) {
      const auto row = table_->Find(t);
      if (!row) continue;
      const auto v = table_->Vector(*row);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += v[i];
      ++count;
    }
    return std::make_pair(m, count);
  };
  const auto [ma, na] = mean(a);
  const auto [mb, nb] = mean(b);
  if (na == 0 || nb == 0) return 0.0;
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    dot += ma[i] * mb[i];
    norm_a += ma[i] * ma[i];
    norm_b += mb[i] * mb[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / std::sqrt(norm_a * norm_b);
}

RemoteScorer::RemoteScorer(std::shared_ptr<protocol::ProtocolClient> client)
    : client_(std::move(client)) {}

double RemoteScorer::ScoreDistinct(std::string_view a,
                                   std::string_view b) const {
  const auto call = [&](const std::string& x, const std::string& y) {
    try {
      return client_->Semantic(x, y);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kTransport) {
        throw Error(ErrorCode::kScorerUnavailable, e.what());
      }
      throw;
    }
  };
  const auto sa = SplitSentences(a);
  const auto sb = SplitSentences(b);
  if (sa.size() < 2 || sa.size() != sb.size()) {
    return call(std::string(a), std::string(b));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    total += sa[i] == sb[i] ? 1.0 : call(sa[i], sb[i]);
  }
  return total / static_cast<double>(sa.size());
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  const auto emit = [&](std::size_t end) {
    auto piece = Trim(text.substr(start, end - start));
    if (!piece.empty()) out.push_back(std::move(piece));
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\t') {
      emit(i);
    } else if ((c == '.' || c == '!' || c == '?') && i + 1 < text.size() &&
               IsSpace(text[i + 1])) {
      emit(i + 1);
    }
  }
  emit(text.size());
  return out;
}

}  // namespace advtext
