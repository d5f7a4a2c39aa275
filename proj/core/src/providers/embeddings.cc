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

#include "advtext/providers/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"

namespace advtext {
namespace {

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool ParseNumber(std::string_view s, double& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() &&
         std::isfinite(out);
}

double Norm(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

EmbeddingTable::EmbeddingTable(std::vector<std::string> tokens,
                               std::vector<std::vector<double>> vectors) {
  if (tokens.size() != vectors.size()) {
    throw Error(ErrorCode::kFormat, "token and vector counts differ");
  }
  if (!vectors.empty()) dimension_ = vectors.front().size();
  if (!vectors.empty() && dimension_ == 0) {
    throw Error(ErrorCode::kFormat, "vectors must have positive dimension");
  }
  tokens_ = std::move(tokens);
  data_.reserve(tokens_.size() * dimension_);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    const auto& v = vectors[r];
    if (v.size() != dimension_) {
      throw Error(ErrorCode::kFormat,
                  "vector for '" + tokens_[r] + "' has dimension " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(dimension_));
    }
    const double norm = Norm(v);
    if (norm == 0.0) {
      throw Error(ErrorCode::kFormat, "zero vector for '" + tokens_[r] + "'");
    }
    for (const double x : v) data_.push_back(x / norm);
    if (!index_.emplace(tokens_[r], r).second) {
      throw Error(ErrorCode::kFormat, "duplicate token '" + tokens_[r] + "'");
    }
  }
}

std::optional<std::size_t> EmbeddingTable::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) it = index_.find(utf8::FoldCase(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingTable::Vector(std::size_t row) const {
  return std::span(data_).subspan(row * dimension_, dimension_);
}

double EmbeddingTable::Cosine(std::size_t a, std::size_t b) const {
  const auto va = Vector(a);
  const auto vb = Vector(b);
  return std::inner_product(va.begin(), va.end(), vb.begin(), 0.0);
}

EmbeddingTable LoadEmbeddings(std::istream& in) {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;
  std::vector<std::string> warnings;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t dimension = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = SplitSpaces(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2) {
      double a = 0, b = 0;
      if (ParseNumber(fields[0], a) && ParseNumber(fields[1], b)) continue;
    }
    if (fields.size() < 2) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(line_no) + ": no vector values");
    }
    std::vector<double> v(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!ParseNumber(fields[i], v[i - 1])) {
        throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) +
                                            ": bad number '" +
                                            std::string(fields[i]) + "'");
      }
    }
    if (dimension == 0) dimension = v.size();
    if (v.size() != dimension) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(line_no) + ": dimension " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(dimension));
    }
    std::string token(fields[0]);
    if (seen.contains(token)) {
      warnings.push_back("line " + std::to_string(line_no) +
                         ": duplicate token '" + token + "' ignored");
      continue;
    }
    if (Norm(v) == 0.0) {
      warnings.push_back("line " + std::to_string(line_no) +
                         ": zero vector for '" + token + "' ignored");
      continue;
    }
    seen.emplace(token, tokens.size());
    tokens.push_back(std::move(token));
    vectors.push_back(std::move(v));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in embedding file");
  EmbeddingTable table(std::move(tokens), std::move(vectors));
  table.warnings_ = std::move(warnings);
  return table;
}

EmbeddingTable LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return LoadEmbeddings(in);
}

std::vector<CandidateSubstitute> EmbeddingCandidates(const EmbeddingTable& table,
                                                     std::string_view token,
                                                     std::size_t k) {
  const auto row = table.Find(token);
  if (!row || k == 0) return {};
  const std::string folded = utf8::FoldCase(token);
  struct Scored {
    double cosine;
    std::size_t row;
  };
  std::vector<Scored> scored;
  scored.reserve(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& t = table.tokens()[r];
    if (r == *row || t == token || t == folded) continue;
    scored.push_back({table.Cosine(*row, r), r});
  }
  const auto better = [&](const Scored& a, const Scored& b) {
    if (a.cosine != b.cosine) return a.cosine > b.cosine;
    return table.tokens()[a.row] < table.tokens()[b.row];
  };
  const std::size_t n = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(n),
                    scored.end(), better);
  std::vector<CandidateSubstitute> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({table.tokens()[scored[i].row],
                   std::clamp(scored[i].cosine, 0.0, 1.0)});
  }
  return out;
}

EmbeddingProvider::EmbeddingProvider(
    std::shared_ptr<const EmbeddingTable> table)
    : table_(std::move(table)) {}

std::vector<CandidateSubstitute> EmbeddingProvider::Propose(
    std::span<const std::string> tokens, std::size_t position,
    std::size_t k) const {
  if (position >= tokens.size()) return {};
  const std::string& token = tokens[position];
  if (token == kMaskToken) return {};
  const auto key = std::make_pair(token, k);
  {
    std::lock_guard lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto candidates = EmbeddingCandidates(*table_, token, k);
  std::lock_guard lock(cache_mu_);
  return cache_.emplace(key, std::move(candidates)).first->second;
}

}  // namespace advtext
