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

#include "advtext/attacks/config.h"

#include <array>
#include <cmath>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"

namespace advtext {
namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
  std::string_view label;
};

constexpr std::array<MethodInfo, 8> kMethods = {{
    {Method::kBA, "ba", "BA"},
    {Method::kBAm, "bam", "BAm"},
    {Method::kBAm2, "bam2", "BAm2"},
    {Method::kGenetic, "genetic", "Genetic"},
    {Method::kGSWSE, "gswse", "GSWSE"},
    {Method::kTextFooler, "textfooler", "TextFooler"},
    {Method::kDeepWordBug, "deepwordbug", "DeepWordBug"},
    {Method::kCLARE, "clare", "CLARE"},
}};

const MethodInfo& Info(Method method) {
  for (const auto& m : kMethods) {
    if (m.method == method) return m;
  }
  throw Error(ErrorCode::kValidation, "unknown method");
}

}  // namespace

std::string_view MethodName(Method method) { return Info(method).name; }
std::string_view MethodLabel(Method method) { return Info(method).label; }

Method MethodFromName(std::string_view name) {
  const std::string folded = utf8::FoldCase(name);
  for (const auto& m : kMethods) {
    if (folded == m.name) return m.method;
  }
  throw Error(ErrorCode::kUsage, "unknown attack method '" + std::string(name) + "'");
}

const std::vector<Method>& AllMethods() {
  static const std::vector<Method> all = [] {
    std::vector<Method> v;
    for (const auto& m : kMethods) v.push_back(m.method);
    return v;
  }();
  return all;
}

AttackConfig DefaultConfig(Method method) {
  AttackConfig c;
  c.method = method;
  switch (method) {
    case Method::kBA:
      c.substitute_k = 36;
      c.pred_threshold = 0.3;
      break;
    case Method::kBAm:
      c.substitute_k = 72;
      c.pred_threshold = 0.2;
      break;
    case Method::kBAm2:
      c.substitute_k = kBam2BaseK;
      c.pred_threshold = 0.2;
      c.max_iterations = 6;
      break;
    case Method::kGenetic:
      c.substitute_k = 8;
      c.population_size = 40;
      c.generations = 20;
      break;
    case Method::kGSWSE:
      c.substitute_k = 50;
      break;
    case Method::kTextFooler:
      c.substitute_k = 50;
      c.min_candidate_score = 0.5;
      c.pos_check = true;
      break;
    case Method::kDeepWordBug:
      c.substitute_k = 16;
      c.max_iterations = 5;
      break;
    case Method::kCLARE:
      c.substitute_k = 10;
      c.max_iterations = 10;
      break;
  }
  return c;
}

void ValidateConfig(const AttackConfig& c) {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kValidation, "invalid attack config: " + what);
  };
  if (c.substitute_k < 1) fail("substitute_k must be positive");
  if (!(c.pred_threshold >= 0.0 && c.pred_threshold <= 1.0)) {
    fail("pred_threshold must lie in [0, 1]");
  }
  if (!(c.min_candidate_score >= 0.0 && c.min_candidate_score <= 1.0)) {
    fail("min_candidate_score must lie in [0, 1]");
  }
  if (c.max_iterations < 1) fail("max_iterations must be positive");
  if (c.method == Method::kBAm2 && c.max_iterations > 6) {
    fail("max_iterations for bam2 is at most 6");
  }
  if (c.population_size < 2) fail("population_size must be at least 2");
  if (c.generations < 1) fail("generations must be positive");
  if (c.query_budget < 1) fail("query_budget must be positive");
}

std::size_t Bam2SubstituteK(int iteration) {
  if (iteration <= 1) return kBam2BaseK;
  return static_cast<std::size_t>(iteration) * kBam2BaseK;
}

std::size_t Bam2WordCount(int iteration) {
  return static_cast<std::size_t>(iteration) + 1;
}

int Bam2Iterations(const AttackConfig& config) {
  // The extra step only extends the full schedule.
  const bool extra = config.bam2_extra_iteration && config.max_iterations == 6;
  return config.max_iterations + (extra ? 1 : 0);
}

}  // namespace advtext
