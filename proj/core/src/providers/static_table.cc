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

#include "advtext/providers/static_table.h"

#include <fstream>
#include <istream>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"

namespace advtext {

SynonymTable LoadSynonymTable(std::istream& in) {
  SynonymTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kFormat, "synonym table line " +
                                          std::to_string(line_no) +
                                          ": expected 'token<TAB>syn1,syn2'");
    }
    std::vector<std::string> synonyms;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      if (!item.empty()) synonyms.emplace_back(item);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    table.emplace(line.substr(0, tab), std::move(synonyms));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in synonym table");
  return table;
}

SynonymTable LoadSynonymTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return LoadSynonymTable(in);
}

std::vector<CandidateSubstitute> StaticCandidates(const SynonymTable& table,
                                                  std::string_view token,
                                                  std::size_t k) {
  auto it = table.find(token);
  if (it == table.end()) it = table.find(utf8::FoldCase(token));
  if (it == table.end()) return {};
  const auto& synonyms = it->second;
  const double n = static_cast<double>(synonyms.size());
  std::vector<CandidateSubstitute> out;
  for (std::size_t i = 0; i < synonyms.size() && out.size() < k; ++i) {
    if (synonyms[i] == token) continue;
    out.push_back({synonyms[i], 1.0 - static_cast<double>(i) / n});
  }
  return out;
}

StaticProvider::StaticProvider(std::shared_ptr<const SynonymTable> table)
    : table_(std::move(table)) {}

std::vector<CandidateSubstitute> StaticProvider::Propose(
    std::span<const std::string> tokens, std::size_t position,
    std::size_t k) const {
  if (position >= tokens.size()) return {};
  const std::string& slot = tokens[position];
  if (slot != kMaskToken) return StaticCandidates(*table_, slot, k);

  const std::string mask(kMaskToken);
  std::vector<std::string> keys;
  if (position > 0) keys.push_back(tokens[position - 1] + " " + mask);
  if (position + 1 < tokens.size()) {
    keys.push_back(mask + " " + tokens[position + 1]);
  }
  keys.push_back(mask);
  for (const auto& key : keys) {
    auto found = StaticCandidates(*table_, key, k);
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace advtext
