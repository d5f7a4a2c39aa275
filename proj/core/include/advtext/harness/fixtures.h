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

#ifndef ADVTEXT_HARNESS_FIXTURES_H_
#define ADVTEXT_HARNESS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "advtext/harness/dataset.h"
#include "advtext/providers/static_table.h"

namespace advtext {

struct FixtureOptions {
  std::size_t instances = 200;
  std::uint64_t seed = 1;
  // Share of rows generated as two-part (claim, evidence) instances.
  double pair_fraction = 0.2;
  std::size_t dimension = 16;
};

// A linearly separable credibility corpus. Each text carries one or two
// class marker words ("confirmed", "hoax", ...) among neutral fillers, so a
// bag-of-words victim keys on the markers and swapping them flips it. In
// the embeddings all markers, of either class, sit in one tight cluster:
// every marker's nearest neighbours include markers of the other class.
// The synonym table lists, for each marker, the other class's markers
// first; the "[MASK]" key lists all markers for infill.
struct SyntheticFixtures {
  TaskDataset corpus;
  std::vector<std::string> embedding_tokens;
  std::vector<std::vector<double>> embedding_vectors;
  SynonymTable synonyms;
};

SyntheticFixtures MakeSyntheticFixtures(const FixtureOptions& options);

const std::vector<std::string>& CredibleMarkers();
const std::vector<std::string>& NonCredibleMarkers();

// Text word-vector format read by LoadEmbeddings, shortest round-trip
// decimals.
void WriteEmbeddings(const std::vector<std::string>& tokens,
                     const std::vector<std::vector<double>>& vectors,
                     std::ostream& out);
// Format read by LoadSynonymTable.
void WriteSynonymTable(const SynonymTable& table, std::ostream& out);

// Writes corpus.tsv, embeddings.txt and synonyms.tsv under |dir|, creating
// it if needed. Throws Error(kIo).
void WriteFixtureFiles(const SyntheticFixtures& fixtures,
                       const std::filesystem::path& dir);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_FIXTURES_H_
