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

#ifndef ADVTEXT_PROVIDERS_EMBEDDINGS_H_
#define ADVTEXT_PROVIDERS_EMBEDDINGS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "advtext/providers/provider.h"

namespace advtext {

// Word vectors, L2-normalised at load time. Row-major storage.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  // Normalises every row. Throws Error(kFormat) on ragged rows, zero
  // vectors, or duplicate tokens.
  EmbeddingTable(std::vector<std::string> tokens,
                 std::vector<std::vector<double>> vectors);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  // Messages collected while loading (e.g. duplicate tokens skipped).
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Exact match first, then the case-folded token.
  std::optional<std::size_t> Find(std::string_view token) const;
  std::span<const double> Vector(std::size_t row) const;
  double Cosine(std::size_t a, std::size_t b) const;

 private:
  friend EmbeddingTable LoadEmbeddings(std::istream& in);

  std::size_t dimension_ = 0;
  std::vector<std::string> tokens_;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> warnings_;
};

// Standard text word-vector format: "<token> <d1> ... <dD>" per line. An
// optional word2vec-style "<count> <dim>" first line is skipped. Duplicate
// tokens keep their first row and record a warning; zero vectors are dropped
// the same way.
// Throws Error(kFormat) on inconsistent dimensions, Error(kIo) if unreadable.
EmbeddingTable LoadEmbeddings(std::istream& in);
EmbeddingTable LoadEmbeddings(const std::filesystem::path& path);

// The k nearest neighbours of |token| by cosine, best first, ties broken by
// token. The token itself is excluded; scores are cosines clamped to [0, 1];
// an out-of-vocabulary token yields no candidates.
std::vector<CandidateSubstitute> EmbeddingCandidates(const EmbeddingTable& table,
                                                     std::string_view token,
                                                     std::size_t k);

class EmbeddingProvider : public SubstituteProvider {
 public:
  explicit EmbeddingProvider(std::shared_ptr<const EmbeddingTable> table);

  std::vector<CandidateSubstitute> Propose(std::span<const std::string> tokens,
                                           std::size_t position,
                                           std::size_t k) const override;
  std::string name() const override { return "embedding"; }
  const EmbeddingTable& table() const { return *table_; }

 private:
  std::shared_ptr<const EmbeddingTable> table_;
  // Neighbour lists are pure functions of (token, k); memoised.
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<std::string, std::size_t>,
                   std::vector<CandidateSubstitute>>
      cache_;
};

}  // namespace advtext

#endif  // ADVTEXT_PROVIDERS_EMBEDDINGS_H_
