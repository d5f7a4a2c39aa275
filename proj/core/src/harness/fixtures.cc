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

#include "advtext/harness/fixtures.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "advtext/core/error.h"
#include "advtext/core/rng.h"

namespace advtext {
namespace {

const std::vector<std::string>& Fillers() {
  static const std::vector<std::string> v = {
      "city",    "council", "water",   "school",   "market",   "people",
      "week",    "government", "health", "company", "price",   "vaccine",
      "election", "weather", "road",   "hospital", "plan",     "budget",
      "police",  "river",   "tax",     "energy",   "farmers",  "teachers",
      "bridge",  "festival", "museum", "train",    "airport",  "village",
      "doctors", "workers", "children", "library", "harbour",  "clinic"};
  return v;
}

const std::vector<std::string>& FunctionWords() {
  static const std::vector<std::string> v = {"the", "a", "in", "on", "of",
                                             "and", "for", "this", "new", "about"};
  return v;
}

template <typename T>
const T& Pick(const std::vector<T>& v, Rng& rng) {
  return v[rng.Uniform(v.size())];
}

double Gaussian(Rng& rng) {
  // Box-Muller; two uniforms per draw keeps the stream layout simple.
  const double u1 = 1.0 - rng.UniformDouble();
  const double u2 = rng.UniformDouble();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string Sentence(Label label, Rng& rng) {
  const auto& markers =
      label == Label::kCredible ? CredibleMarkers() : NonCredibleMarkers();
  std::vector<std::string> words;
  const std::size_t fillers = 5 + rng.Uniform(5);
  for (std::size_t i = 0; i < fillers; ++i) {
    words.push_back(rng.Uniform(3) == 0 ? Pick(FunctionWords(), rng)
                                        : Pick(Fillers(), rng));
  }
  const std::size_t marker_count = rng.Uniform(10) < 7 ? 1 : 2;
  for (std::size_t m = 0; m < marker_count; ++m) {
    const std::size_t at = rng.Uniform(words.size() + 1);
    words.insert(words.begin() + static_cast<long>(at), Pick(markers, rng));
  }
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out + ".";
}

std::string Shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

const std::vector<std::string>& CredibleMarkers() {
  static const std::vector<std::string> v = {
      "confirmed", "official",  "verified", "documented", "published", "announced",
      "according", "study",     "researchers", "evidence", "statement", "data",
      "analysis",  "survey",    "records",  "audit"};
  return v;
}

const std::vector<std::string>& NonCredibleMarkers() {
  static const std::vector<std::string> v = {
      "shocking", "secret",  "miracle",  "hoax",   "exposed",  "unbelievable",
      "banned",   "conspiracy", "hidden", "insane", "outrageous", "leaked",
      "rigged",   "scandal", "bombshell", "censored"};
  return v;
}

SyntheticFixtures MakeSyntheticFixtures(const FixtureOptions& options) {
  if (options.instances < 2 || options.dimension < 4) {
    throw Error(ErrorCode::kValidation, "fixtures need >= 2 instances and dimension >= 4");
  }
  SyntheticFixtures fx;
  Rng rng(options.seed);
  fx.corpus.name = "synthetic";
  for (std::size_t i = 0; i < options.instances; ++i) {
    const Label label = i % 2 == 0 ? Label::kCredible : Label::kNonCredible;
    std::vector<std::string> parts{Sentence(label, rng)};
    if (rng.UniformDouble() < options.pair_fraction) parts.push_back(Sentence(label, rng));
    fx.corpus.instances.emplace_back(std::to_string(i), std::move(parts), label);
  }

  // Markers: a shared direction plus small noise. Other words: noise only,
  // in the dimensions the marker direction does not use.
  Rng erng = rng.Split(1);
  const std::size_t d = options.dimension;
  const auto add = [&](const std::string& token, bool marker) {
    std::vector<double> v(d, 0.0);
    if (marker) {
      v[0] = 1.0;
      for (std::size_t k = 1; k < d / 2; ++k) v[k] = 0.15 * Gaussian(erng);
    } else {
      for (std::size_t k = d / 2; k < d; ++k) v[k] = Gaussian(erng);
      v[1] = 0.05 * Gaussian(erng);
    }
    fx.embedding_tokens.push_back(token);
    fx.embedding_vectors.push_back(std::move(v));
  };
  for (const auto& w : CredibleMarkers()) add(w, true);
  for (const auto& w : NonCredibleMarkers()) add(w, true);
  for (const auto& w : Fillers()) add(w, false);
  for (const auto& w : FunctionWords()) add(w, false);

  std::vector<std::string> all_markers = CredibleMarkers();
  all_markers.insert(all_markers.end(), NonCredibleMarkers().begin(),
                     NonCredibleMarkers().end());
  const auto list_for = [&](const std::vector<std::string>& own,
                            const std::vector<std::string>& other,
                            const std::string& self) {
    std::vector<std::string> syn = other;
    for (const auto& w : own) {
      if (w != self) syn.push_back(w);
    }
    return syn;
  };
  for (const auto& w : CredibleMarkers()) {
    fx.synonyms[w] = list_for(CredibleMarkers(), NonCredibleMarkers(), w);
  }
  for (const auto& w : NonCredibleMarkers()) {
    fx.synonyms[w] = list_for(NonCredibleMarkers(), CredibleMarkers(), w);
  }
  fx.synonyms["[MASK]"] = all_markers;
  return fx;
}

void WriteEmbeddings(const std::vector<std::string>& tokens,
                     const std::vector<std::vector<double>>& vectors,
                     std::ostream& out) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out << tokens[i];
    for (const double x : vectors[i]) out << ' ' << Shortest(x);
    out << '\n';
  }
}

void WriteSynonymTable(const SynonymTable& table, std::ostream& out) {
  for (const auto& [key, syns] : table) {
    out << key << '\t';
    for (std::size_t i = 0; i < syns.size(); ++i) out << (i ? "," : "") << syns[i];
    out << '\n';
  }
}

void WriteFixtureFiles(const SyntheticFixtures& fx, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  const auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("corpus.tsv");
    WriteDataset(fx.corpus, f);
  }
  {
    auto f = open("embeddings.txt");
    WriteEmbeddings(fx.embedding_tokens, fx.embedding_vectors, f);
  }
  {
    auto f = open("synonyms.tsv");
    WriteSynonymTable(fx.synonyms, f);
  }
}

}  // namespace advtext
