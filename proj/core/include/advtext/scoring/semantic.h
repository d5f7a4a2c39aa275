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

#ifndef ADVTEXT_SCORING_SEMANTIC_H_
#define ADVTEXT_SCORING_SEMANTIC_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/protocol/client.h"
#include "advtext/providers/embeddings.h"

namespace advtext {

// Meaning-preservation score between an original and a modified text.
// Every implementation returns exactly 1.0 for identical inputs and clamps
// its output to [0, 1]. Score() is safe to call concurrently.
class SemanticScorer {
 public:
  virtual ~SemanticScorer() = default;
  double Score(std::string_view a, std::string_view b) const;
  virtual std::string name() const = 0;

 protected:
  virtual double ScoreDistinct(std::string_view a, std::string_view b) const = 0;
};

// F1 of the case-folded token multisets of a and b. The default scorer.
class TokenOverlapScorer : public SemanticScorer {
 public:
  std::string name() const override { return "overlap"; }

 protected:
  double ScoreDistinct(std::string_view a, std::string_view b) const override;
};

// Cosine of the mean word vectors, clamped to [0, 1]. A text with no
// in-vocabulary token scores 0 against anything but itself.
class EmbeddingCosineScorer : public SemanticScorer {
 public:
  explicit EmbeddingCosineScorer(std::shared_ptr<const EmbeddingTable> table);
  std::string name() const override { return "embedding"; }

 protected:
  double ScoreDistinct(std::string_view a, std::string_view b) const override;

 private:
  std::shared_ptr<const EmbeddingTable> table_;
};

// Delegates to a protocol server (e.g. one backed by BLEURT). Both texts are
// split into sentences; when the counts match, aligned pairs are scored and
// averaged, otherwise the full texts are scored in one request.
// Transport failure throws Error(kScorerUnavailable).
class RemoteScorer : public SemanticScorer {
 public:
  explicit RemoteScorer(std::shared_ptr<protocol::ProtocolClient> client);
  std::string name() const override { return "remote"; }

 protected:
  double ScoreDistinct(std::string_view a, std::string_view b) const override;

 private:
  std::shared_ptr<protocol::ProtocolClient> client_;
};

// Splits after '.', '!' or '?' when followed by whitespace, and at tabs.
// Pieces are trimmed; empty pieces are dropped.
std::vector<std::string> SplitSentences(std::string_view text);

}  // namespace advtext

#endif  // ADVTEXT_SCORING_SEMANTIC_H_
