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

#include "advtext/scoring/levenshtein.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "advtext/core/utf8.h"

namespace advtext {

namespace {

// |row| has |b| + 1 cells; |b| is the shorter side.
std::size_t Distance(std::u32string_view a, std::u32string_view b,
                     std::vector<std::size_t>& row) {
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

// Bit-parallel edit distance (Myers 1999, in Hyyro's formulation for the
// global distance). |m| is the length of the shorter side, 1..64, and
// |match| maps a code point to the bit set of its positions there.
template <typename Match>
std::size_t BitParallel(std::u32string_view a, std::size_t m, Match&& match) {
  const std::uint64_t last = std::uint64_t{1} << (m - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t distance = m;
  for (const char32_t c : a) {
    const std::uint64_t eq = match(c);
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    distance += (ph & last) != 0;
    distance -= (mh & last) != 0;
    ph = (ph << 1) | 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
  }
  return distance;
}

std::size_t ShortPattern(std::u32string_view a, std::u32string_view b) {
  char32_t bits = 0;
  for (const char32_t c : a) bits |= c;
  for (const char32_t c : b) bits |= c;
  if (bits < 256) {
    // Latin-1 text: direct table, clearing only the entries in use.
    std::array<std::uint64_t, 256> table;
    for (const char32_t c : a) table[c] = 0;
    for (const char32_t c : b) table[c] = 0;
    for (std::size_t i = 0; i < b.size(); ++i) table[b[i]] |= std::uint64_t{1} << i;
    return BitParallel(a, b.size(), [&](char32_t c) { return table[c]; });
  }
  std::array<char32_t, 64> keys;
  std::array<std::uint64_t, 64> masks;
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t k = 0;
    while (k < distinct && keys[k] != b[i]) ++k;
    if (k == distinct) {
      keys[k] = b[i];
      masks[k] = 0;
      ++distinct;
    }
    masks[k] |= std::uint64_t{1} << i;
  }
  return BitParallel(a, b.size(), [&](char32_t c) {
    for (std::size_t k = 0; k < distinct; ++k) {
      if (keys[k] == c) return masks[k];
    }
    return std::uint64_t{0};
  });
}

}  // namespace

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();
  if (b.size() <= 64) return ShortPattern(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  return Distance(a, b, row);
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  return Levenshtein(std::u32string_view(utf8::Decode(a)),
                     std::u32string_view(utf8::Decode(b)));
}

}  // namespace advtext
