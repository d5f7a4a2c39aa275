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

#ifndef ADVTEXT_CORE_RNG_H_
#define ADVTEXT_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace advtext {

// Deterministic generator for every stochastic attack.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers and doubles are derived here rather than through
// <random> distributions, whose algorithms are implementation-defined, so a
// seed reproduces bit-identical attacks on any conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, n). n must be positive.
  std::uint64_t Uniform(std::uint64_t n);
  // Uniform on [0, 1) with 53 bits of precision.
  double UniformDouble();

  // Independent child stream; does not advance this generator.
  Rng Split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (master, stream). Used to hand out per-instance
// and per-stage seeds so results do not depend on scheduling order.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t StableHash(std::string_view text);

}  // namespace advtext

#endif  // ADVTEXT_CORE_RNG_H_
