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

#include "advtext/victims/linear_victim.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "advtext/core/error.h"
#include "advtext/core/rng.h"
#include "advtext/core/tokenizer.h"
#include "advtext/core/utf8.h"

namespace advtext {
namespace {

constexpr std::string_view kHeader = "linear-victim v1";

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

[[noreturn]] void BadFormat(int line, const std::string& what) {
  throw Error(ErrorCode::kFormat,
              "model file line " + std::to_string(line) + ": " + what);
}

double ParseDouble(std::string_view s, int line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() ||
      !std::isfinite(v)) {
    BadFormat(line, "expected a decimal number, got '" + std::string(s) + "'");
  }
  return v;
}

std::size_t ParseCount(std::string_view s, int line) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    BadFormat(line, "expected a non-negative integer, got '" + std::string(s) +
                        "'");
  }
  return v;
}

// Reads "<keyword> <value>".
std::string_view KeywordValue(const std::string& text, std::string_view keyword,
                              int line) {
  if (text.rfind(keyword, 0) != 0 || text.size() <= keyword.size() + 1 ||
      text[keyword.size()] != ' ') {
    BadFormat(line, "expected '" + std::string(keyword) + " <value>'");
  }
  return std::string_view(text).substr(keyword.size() + 1);
}

}  // namespace

std::vector<std::string> LinearFeatures(std::string_view text,
                                        std::size_t max_tokens) {
  std::vector<std::string> features;
  TokenizedText tokens;
  try {
    tokens = Tokenize(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyText) return features;
    throw;
  }
  const std::size_t n = std::min(tokens.size(), max_tokens);
  features.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    features.push_back(utf8::FoldCase(tokens[i]));
  }
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());
  return features;
}

LinearVictimModel::LinearVictimModel(std::vector<std::string> vocabulary,
                                     std::vector<double> weights, double bias)
    : vocabulary_(std::move(vocabulary)),
      weights_(std::move(weights)),
      bias_(bias) {
  if (vocabulary_.size() != weights_.size()) {
    throw Error(ErrorCode::kValidation, "vocabulary and weights differ in size");
  }
  index_.reserve(vocabulary_.size());
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    if (!index_.emplace(vocabulary_[i], i).second) {
      throw Error(ErrorCode::kValidation,
                  "duplicate vocabulary token '" + vocabulary_[i] + "'");
    }
  }
}

double LinearVictimModel::Logit(std::string_view text,
                                std::size_t max_tokens) const {
  double z = bias_;
  for (const auto& f : LinearFeatures(text, max_tokens)) {
    const auto it = index_.find(f);
    if (it != index_.end()) z += weights_[it->second];
  }
  return z;
}

VictimScores LinearVictimModel::Score(std::string_view text,
                                      std::size_t max_tokens) const {
  const double p = Sigmoid(Logit(text, max_tokens));
  return VictimScores{1.0 - p, p};
}

void LinearVictimModel::Save(std::ostream& out) const {
  out << kHeader << '\n';
  out << "bias " << FormatDouble(bias_) << '\n';
  out << "vocab " << vocabulary_.size() << '\n';
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    out << vocabulary_[i] << '\t' << i << '\n';
  }
  out << "weights " << weights_.size() << '\n';
  for (const double w : weights_) out << FormatDouble(w) << '\n';
}

void LinearVictimModel::SaveFile(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  Save(out);
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

LinearVictimModel LinearVictimModel::Load(std::istream& in) {
  int line_no = 0;
  std::string line;
  const auto next = [&]() -> const std::string& {
    ++line_no;
    if (!std::getline(in, line)) BadFormat(line_no, "unexpected end of file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };

  if (next() != kHeader) BadFormat(line_no, "expected header 'linear-victim v1'");
  const double bias = ParseDouble(KeywordValue(next(), "bias", line_no), line_no);
  const std::size_t n = ParseCount(KeywordValue(next(), "vocab", line_no), line_no);

  std::vector<std::string> vocabulary(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& l = next();
    const auto tab = l.find('\t');
    if (tab == std::string::npos || tab == 0) {
      BadFormat(line_no, "expected '<token>\\t<index>'");
    }
    const std::size_t index =
        ParseCount(std::string_view(l).substr(tab + 1), line_no);
    if (index >= n || seen[index]) {
      BadFormat(line_no, "index out of range or repeated");
    }
    seen[index] = true;
    vocabulary[index] = l.substr(0, tab);
  }
  const std::size_t m =
      ParseCount(KeywordValue(next(), "weights", line_no), line_no);
  if (m != n) BadFormat(line_no, "weights count differs from vocab count");
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = ParseDouble(next(), line_no);
  try {
    return LinearVictimModel(std::move(vocabulary), std::move(weights), bias);
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
}

LinearVictimModel LinearVictimModel::LoadFile(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return Load(in);
}

TrainingResult TrainLinearVictim(std::span<const TextInstance> corpus,
                                 const TrainingConfig& config) {
  std::set<Label> labels;
  for (const auto& inst : corpus) labels.insert(inst.label());
  if (labels.size() < 2) {
    throw Error(ErrorCode::kDegenerateCorpus,
                "training corpus must contain both labels");
  }

  std::map<std::string, std::size_t> vocab_map;
  std::vector<std::vector<std::string>> docs;
  docs.reserve(corpus.size());
  for (const auto& inst : corpus) {
    docs.push_back(LinearFeatures(inst.Serialized(), kDefaultMaxTokens));
    for (const auto& f : docs.back()) vocab_map.emplace(f, 0);
  }
  std::vector<std::string> vocabulary;
  vocabulary.reserve(vocab_map.size());
  for (auto& [token, index] : vocab_map) {
    index = vocabulary.size();
    vocabulary.push_back(token);
  }
  std::vector<std::vector<std::size_t>> features(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& f : docs[d]) features[d].push_back(vocab_map.at(f));
  }

  std::vector<double> weights(vocabulary.size(), 0.0);
  double bias = 0.0;
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.Uniform(i)]);
    }
    for (const std::size_t d : order) {
      double z = bias;
      for (const auto f : features[d]) z += weights[f];
      const double y = corpus[d].label() == Label::kNonCredible ? 1.0 : 0.0;
      const double step = config.learning_rate * (y - Sigmoid(z));
      bias += step;
      for (const auto f : features[d]) weights[f] += step;
    }
  }

  LinearVictimModel model(std::move(vocabulary), std::move(weights), bias);
  std::size_t correct = 0;
  for (const auto& inst : corpus) {
    if (PredictedLabel(model.Score(inst.Serialized())) == inst.label()) {
      ++correct;
    }
  }
  const double accuracy =
      static_cast<double>(correct) / static_cast<double>(corpus.size());
  return TrainingResult{std::move(model), accuracy};
}

LinearVictim::LinearVictim(std::shared_ptr<const LinearVictimModel> model,
                           std::size_t batch_limit, std::size_t max_tokens)
    : Victim(batch_limit), model_(std::move(model)), max_tokens_(max_tokens) {}

std::vector<VictimScores> LinearVictim::ClassifyBatch(
    std::span<const std::string> texts, std::uint64_t& /*charged*/) {
  std::vector<VictimScores> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(model_->Score(t, max_tokens_));
  return out;
}

}  // namespace advtext
