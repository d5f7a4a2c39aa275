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

#ifndef ADVTEXT_PROVIDERS_STATIC_TABLE_H_
#define ADVTEXT_PROVIDERS_STATIC_TABLE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/providers/provider.h"

namespace advtext {

// token -> ordered synonym list. Keys may also be mask patterns such as
// "very [MASK]" or "[MASK] have", which StaticProvider consults for slots
// holding kMaskToken.
using SynonymTable = std::map<std::string, std::vector<std::string>, std::less<>>;

// One "key<TAB>syn1,syn2,..." entry per line; blank lines and lines starting
// with '#' are skipped; a repeated key keeps its first entry.
// Throws Error(kFormat) for lines without a tab, Error(kIo) if unreadable.
SynonymTable LoadSynonymTable(std::istream& in);
SynonymTable LoadSynonymTable(const std::filesystem::path& path);

// Up to k synonyms of |token| in file order. The i-th listed synonym of an
// n-long list scores 1 - i/n. The token itself is never returned.
std::vector<CandidateSubstitute> StaticCandidates(const SynonymTable& table,
                                                  std::string_view token,
                                                  std::size_t k);

// Table-backed stand-in for a masked language model. A regular slot looks up
// its token (exact, then case-folded). A kMaskToken slot tries
// "<left> [MASK]", then "[MASK] <right>", then "[MASK]".
class StaticProvider : public SubstituteProvider {
 public:
  explicit StaticProvider(std::shared_ptr<const SynonymTable> table);

  std::vector<CandidateSubstitute> Propose(std::span<const std::string> tokens,
                                           std::size_t position,
                                           std::size_t k) const override;
  std::string name() const override { return "static"; }

 private:
  std::shared_ptr<const SynonymTable> table_;
};

}  // namespace advtext

#endif  // ADVTEXT_PROVIDERS_STATIC_TABLE_H_
