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

#ifndef ADVTEXT_ATTACKS_CONFIG_H_
#define ADVTEXT_ATTACKS_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advtext {

enum class Method {
  kBA,           // BERT-Attack with its stock parameters
  kBAm,          // BERT-Attack with a wider candidate pool, lower threshold
  kBAm2,         // escalating multi-word schedule over a max-gap ranking
  kGenetic,
  kGSWSE,        // greedy word swap over embedding neighbours
  kTextFooler,
  kDeepWordBug,
  kCLARE,
};

// Lower-case command-line names: ba, bam, bam2, genetic, gswse, textfooler,
// deepwordbug, clare.
std::string_view MethodName(Method method);
// Display names used in reports and outcomes ("BAm2", "TextFooler", ...).
std::string_view MethodLabel(Method method);
// Accepts either spelling, case-insensitively. Throws Error(kUsage).
Method MethodFromName(std::string_view name);
const std::vector<Method>& AllMethods();

inline constexpr std::uint64_t kDefaultQueryBudget = 10000;
// Base candidate count of the escalating schedule; iteration i >= 2 asks for
// i times as many.
inline constexpr std::size_t kBam2BaseK = 36;

struct AttackConfig {
  Method method = Method::kBAm;
  std::size_t substitute_k = 72;
  double pred_threshold = 0.2;
  // BAm2: iterations in the schedule. DeepWordBug: words edited.
  // CLARE: applied perturbations.
  int max_iterations = 6;
  std::size_t population_size = 40;
  int generations = 20;
  std::uint64_t query_budget = kDefaultQueryBudget;
  std::uint64_t seed = 0;

  // BAm2: run one more step (7 words, k = 216) after the sixth.
  bool bam2_extra_iteration = false;
  // TextFooler: part-of-speech agreement between word and substitute.
  bool pos_check = true;
  // TextFooler: neighbours scoring below this are skipped.
  double min_candidate_score = 0.5;

  friend bool operator==(const AttackConfig&, const AttackConfig&) = default;
};

// Per-method defaults:
//   BA           k=36  threshold 0.3
//   BAm          k=72  threshold 0.2
//   BAm2         k=36 base, threshold 0.2, 6 iterations
//   Genetic      population 40, 20 generations, 8 neighbours per word
//   GSWSE        50 neighbours
//   TextFooler   50 neighbours, score floor 0.5, POS check on
//   DeepWordBug  16 character edits tried per word, at most 5 words
//   CLARE        10 infills per proposal, at most 10 perturbations
AttackConfig DefaultConfig(Method method);

// Throws Error(kValidation) naming the first out-of-range field.
void ValidateConfig(const AttackConfig& config);

// Substitute count for BAm2 iteration |iteration| (0-based):
// 36, 36, 72, 108, 144, 180 and, with the extra step, 216.
std::size_t Bam2SubstituteK(int iteration);
// Words replaced at BAm2 iteration |iteration|: iteration + 1.
std::size_t Bam2WordCount(int iteration);
// Number of iterations the schedule runs for |config|.
int Bam2Iterations(const AttackConfig& config);
// Iteration from which punctuation and digits join every candidate list.
inline constexpr int kBam2PunctDigitIteration = 5;

}  // namespace advtext

#endif  // ADVTEXT_ATTACKS_CONFIG_H_
