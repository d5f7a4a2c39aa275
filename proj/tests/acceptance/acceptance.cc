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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Oracles here are written independently of the library code they
// check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "advtext/attacks/attacks.h"
#include "advtext/attacks/importance.h"
#include "advtext/attacks/registry.h"
#include "advtext/core/error.h"
#include "advtext/core/rng.h"
#include "advtext/core/tokenizer.h"
#include "advtext/harness/fixtures.h"
#include "advtext/harness/runner.h"
#include "advtext/protocol/client.h"
#include "advtext/providers/filter.h"
#include "advtext/providers/remote_provider.h"
#include "advtext/providers/static_table.h"
#include "advtext/scoring/bodega.h"
#include "advtext/scoring/levenshtein.h"
#include "advtext/scoring/semantic.h"
#include "advtext/victims/linear_victim.h"
#include "advtext/victims/remote_victim.h"
#include "error_code.h"
#include "mocks.h"
#include "stub_server.h"

namespace advtext {
namespace {

using testing::CodeOf;
using testing::FromNonCredible;
using testing::FunctionProvider;
using testing::FunctionVictim;
using testing::KeywordScore;
using testing::KRecorder;
using testing::ListProvider;
using testing::ThresholdScore;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Result {
  bool pass = false;
  std::string detail;
};

// Collects named sub-checks; the first failures end up in the detail line.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 3) failures_.push_back(what);
    }
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; failed: " << f;
    return s.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string Fmt(double v, int precision = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << v;
  return s.str();
}

VictimScores Constant(double p) { return FromNonCredible(p); }

TextInstance Instance(const std::string& text, const std::string& id = "0") {
  return TextInstance(id, {text}, Label::kNonCredible);
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Lower-case letter names for index i: a, b, ..., z, ba, bb, ...
std::string Letters(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i > 0);
  return s;
}

// ---------------------------------------------------------------------------
// AC1

// Textbook definition, no memoisation.
std::size_t NaiveLev(const std::u32string& a, std::size_t i, const std::u32string& b,
                     std::size_t j) {
  if (i == 0) return j;
  if (j == 0) return i;
  return std::min({NaiveLev(a, i - 1, b, j) + 1, NaiveLev(a, i, b, j - 1) + 1,
                   NaiveLev(a, i - 1, b, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
}

Result Ac1() {
  const auto start = Clock::now();
  // Every string of length <= 8 over {a, b, c} as a ternary trie in
  // breadth-first order: node i > 0 has parent (i - 1) / 3 and last letter
  // 'a' + (i - 1) % 3, so parents precede children.
  constexpr std::size_t kMaxLen = 8;
  std::size_t n = 0;
  for (std::size_t len = 0, p = 1; len <= kMaxLen; ++len, p *= 3) n += p;
  std::vector<std::u32string> strs(n);
  std::vector<std::uint8_t> depth(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = (i - 1) / 3;
    strs[i] = strs[parent] + static_cast<char32_t>(U'a' + (i - 1) % 3);
    depth[i] = static_cast<std::uint8_t>(depth[parent] + 1);
  }

  // The prefix recurrence lev(a, b) = min(lev(a', b) + 1, lev(a, b') + 1,
  // lev(a', b') + [last(a) != last(b)]) walked over both tries: the row for
  // a node of the a-trie is built from its parent's row.
  std::vector<std::vector<std::uint8_t>> rows(kMaxLen + 1, std::vector<std::uint8_t>(n));
  for (std::size_t j = 0; j < n; ++j) rows[0][j] = depth[j];
  std::size_t mismatches = 0;
  std::uint64_t pairs = 0;
  const auto check_row = [&](std::size_t i, const std::vector<std::uint8_t>& row) {
    for (std::size_t j = 0; j < n; ++j) {
      ++pairs;
      if (Levenshtein(strs[i], strs[j]) != row[j]) ++mismatches;
    }
  };
  check_row(0, rows[0]);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    const std::size_t d = depth[i];
    const auto& up = rows[d - 1];
    auto& row = rows[d];
    const char32_t last = strs[i].back();
    row[0] = static_cast<std::uint8_t>(d);
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t pj = (j - 1) / 3;
      const unsigned sub = up[pj] + (strs[j].back() == last ? 0 : 1);
      row[j] = static_cast<std::uint8_t>(
          std::min({unsigned{up[j]} + 1u, unsigned{row[pj]} + 1u, sub}));
    }
    check_row(i, row);
    if (d < kMaxLen) {
      for (std::size_t c = 1; c <= 3; ++c) visit(3 * i + c);
    }
  };
  for (std::size_t c = 1; c <= 3; ++c) visit(c);

  // The literal recursion and the UTF-8 overload on every pair with
  // |a| + |b| <= 7.
  std::size_t naive_pairs = 0;
  std::size_t naive_mismatches = 0;
  const auto utf8 = [](const std::u32string& s) { return std::string(s.begin(), s.end()); };
  for (std::size_t i = 0; i < n && depth[i] <= 7; ++i) {
    for (std::size_t j = 0; j < n && depth[i] + depth[j] <= 7; ++j) {
      ++naive_pairs;
      const std::size_t want = NaiveLev(strs[i], strs[i].size(), strs[j], strs[j].size());
      if (want != Levenshtein(strs[i], strs[j]) ||
          want != Levenshtein(utf8(strs[i]), utf8(strs[j]))) {
        ++naive_mismatches;
      }
    }
  }

  const double secs = Seconds(start);
  std::ostringstream d;
  d << pairs << " pairs exhaustive, " << mismatches << " mismatches; " << naive_pairs
    << " pairs vs literal recursion, " << naive_mismatches << " mismatches; "
    << Fmt(secs, 2) << "s (limit 10s)";
  return {pairs == std::uint64_t{n} * n && mismatches == 0 && naive_mismatches == 0 &&
              secs < 10.0,
          d.str()};
}

// ---------------------------------------------------------------------------
// AC2

Result Ac2() {
  Checks c;
  std::mt19937_64 gen(2);
  const auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen);
  };

  // Character strings, multibyte letters included.
  const std::vector<std::string> glyphs{"a", "b", "c", "d", "e", " ", "\xC3\xA9",
                                        "\xD0\xB6", "\xE4\xB8\x80", "x", "y"};
  const auto random_chars = [&] {
    std::string s;
    for (std::size_t i = 0, len = pick(12); i < len; ++i) s += glyphs[pick(glyphs.size())];
    return s;
  };

  // Words: the first half and the second half of the vocabulary are
  // disjoint; "zzz" is never embedded.
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < 20; ++i) vocab.push_back("w" + Letters(i));
  const auto random_words = [&](std::size_t from, std::size_t to, std::size_t len) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(vocab[from + pick(to - from)]);
    return Join(w);
  };

  // One-hot vectors make disjoint texts exactly orthogonal; Gaussian vectors
  // produce negative cosines that must be clamped.
  std::vector<std::vector<double>> one_hot(vocab.size(), std::vector<double>(vocab.size(), 0.0));
  for (std::size_t i = 0; i < vocab.size(); ++i) one_hot[i][i] = 1.0;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> gaussian(vocab.size(), std::vector<double>(8));
  for (auto& row : gaussian) {
    for (auto& x : row) x = normal(gen);
  }
  const TokenOverlapScorer overlap;
  const EmbeddingCosineScorer one_hot_cos(std::make_shared<const EmbeddingTable>(vocab, one_hot));
  const EmbeddingCosineScorer gauss_cos(std::make_shared<const EmbeddingTable>(vocab, gaussian));
  const std::vector<const SemanticScorer*> scorers{&overlap, &one_hot_cos, &gauss_cos};

  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  double lo = 1.0;
  double hi = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string a = random_chars();
    const std::string b = random_chars();
    const double ab = CharScore(a, b);
    c.Expect(in_unit(ab), "char bounds");
    c.Expect(CharScore(a, a) == 1.0, "char identity");
    lo = std::min(lo, ab);
    hi = std::max(hi, ab);

    // Disjoint equal length: letters a-m against n-z.
    const std::size_t len = 1 + pick(10);
    std::string left, right;
    for (std::size_t i = 0; i < len; ++i) {
      left += static_cast<char>('a' + pick(13));
      right += static_cast<char>('n' + pick(13));
    }
    c.Expect(CharScore(left, right) == 0.0, "char disjoint");

    std::string s = random_words(0, vocab.size(), 1 + pick(8));
    std::string t = random_words(0, vocab.size(), 1 + pick(8));
    if (pick(4) == 0) t += " zzz";
    const std::size_t words = 1 + pick(8);
    const std::string half1 = random_words(0, 10, words);
    const std::string half2 = random_words(10, 20, words);
    for (const SemanticScorer* scorer : scorers) {
      const double st = scorer->Score(s, t);
      c.Expect(in_unit(st), scorer->name() + " bounds");
      c.Expect(scorer->Score(s, s) == 1.0, scorer->name() + " identity");
      c.Expect(scorer->Score(t, t) == 1.0, scorer->name() + " identity");
      lo = std::min(lo, st);
      hi = std::max(hi, st);
    }
    c.Expect(overlap.Score(half1, half2) == 0.0, "overlap disjoint");
    c.Expect(one_hot_cos.Score(half1, half2) == 0.0, "embedding disjoint");
  }
  return {c.ok(), c.Summary() + " over 1000 random pairs, outputs in [" + Fmt(lo) + ", " +
                      Fmt(hi) + "]"};
}

// ---------------------------------------------------------------------------
// AC3

Result Ac3() {
  struct Row {
    const char* original;
    const char* adversarial;
    int con;
    double sem;
    double chr;     // worked out by hand
    double bodega;  // con * sem * chr, by hand
    std::uint64_t queries;
  };
  const Row rows[] = {
      {"kitten", "sitting", 1, 4.0 / 5, 4.0 / 7, 16.0 / 35, 10},
      {"flaw", "lawn", 1, 1.0 / 2, 1.0 / 2, 1.0 / 4, 20},
      {"abc", "abc", 0, 1.0, 1.0, 0.0, 30},
      {"hoax", "h0ax", 1, 1.0, 3.0 / 4, 3.0 / 4, 40},
      {"fake news", "fake new", 1, 3.0 / 4, 8.0 / 9, 2.0 / 3, 50},
      {"abcdef", "ghijkl", 1, 1.0 / 5, 0.0, 0.0, 60},
      {"caf\xC3\xA9", "cafe", 1, 2.0 / 5, 3.0 / 4, 3.0 / 10, 70},
      {"sunday", "saturday", 0, 3.0 / 5, 5.0 / 8, 0.0, 80},
      {"abcd", "abdc", 1, 9.0 / 10, 1.0 / 2, 9.0 / 20, 90},
      {"x", "xyz", 1, 3.0 / 4, 1.0 / 3, 1.0 / 4, 100},
  };
  constexpr double kTol = 1e-12;
  Checks c;
  std::vector<InstanceScore> scores;
  for (const auto& r : rows) {
    const double chr = CharScore(r.original, r.adversarial);
    c.Expect(std::abs(chr - r.chr) <= kTol, std::string("chr of ") + r.original);
    const ScoreBreakdown b = BodegaInstance(r.con, r.sem, chr);
    c.Expect(std::abs(b.bodega - r.bodega) <= kTol, std::string("product of ") + r.original);
    c.Expect(b.con == r.con && b.sem == r.sem && b.chr == chr, "components kept");
    scores.push_back({b, r.queries});
  }
  // Sums over the ten rows: products 1312/420, semantic 6.9, character
  // 2983/504, successes 8, queries 550.
  const AggregateRow agg = AggregateScores(scores);
  c.Expect(std::abs(agg.bodega - 164.0 / 525) <= kTol, "mean of products");
  c.Expect(std::abs(agg.success - 0.8) <= kTol, "success");
  c.Expect(std::abs(agg.semantic - 0.69) <= kTol, "semantic");
  c.Expect(std::abs(agg.character - 2983.0 / 5040) <= kTol, "character");
  c.Expect(std::abs(agg.queries - 55.0) <= kTol, "queries");
  c.Expect(agg.instances == 10, "instance count");
  // Guard against the product-of-means shortcut.
  c.Expect(std::abs(agg.bodega - agg.success * agg.semantic * agg.character) > 1e-3,
           "differs from product of means");
  c.Expect(CodeOf([] { BodegaInstance(2, 0.5, 0.5); }) == ErrorCode::kValidation, "con range");
  c.Expect(CodeOf([] { BodegaInstance(1, 1.5, 0.5); }) == ErrorCode::kValidation, "sem range");
  return {c.ok(), c.Summary() + ", BODEGA " + Fmt(agg.bodega, 12) + " vs 164/525"};
}

// ---------------------------------------------------------------------------
// AC4

Result Ac4() {
  Checks c;
  const AttackConfig ba = DefaultConfig(Method::kBA);
  const AttackConfig bam = DefaultConfig(Method::kBAm);
  const AttackConfig gen = DefaultConfig(Method::kGenetic);
  c.Expect(ba.substitute_k == 36 && ba.pred_threshold == 0.3, "BA defaults");
  c.Expect(bam.substitute_k == 72 && bam.pred_threshold == 0.2, "BAm defaults");
  c.Expect(gen.population_size == 40, "Genetic population");
  const std::vector<std::size_t> schedule{36, 36, 72, 108, 144, 180};
  for (int i = 0; i < 6; ++i) {
    c.Expect(Bam2SubstituteK(i) == schedule[i], "BAm2 k at " + std::to_string(i));
    c.Expect(Bam2SubstituteK(i) == (i == 0 ? 36u : static_cast<std::size_t>(i) * 36u),
             "n(i) = 36 i");
  }
  AttackResources res;
  res.provider = ListProvider({"story"});
  c.Expect(MakeAttack("bam", res)->configs().front().substitute_k == 72, "registry BAm k");
  c.Expect(MakeAttack("ba", res)->configs().front().pred_threshold == 0.3, "registry BA threshold");
  c.Expect(MakeAttack("genetic", res)->configs().front().population_size == 40,
           "registry Genetic population");

  // A victim that never changes its mind lets every query be counted.
  FunctionVictim never([](const std::string&) { return Constant(0.9); });
  const TextInstance three = Instance("alpha bravo charlie");

  // k reaches the provider.
  for (const auto& [config, want] : {std::pair{ba, 36u}, std::pair{bam, 72u}}) {
    KRecorder rec;
    FunctionProvider p([&](std::span<const std::string>, std::size_t, std::size_t k) {
      rec.Add(k);
      return std::vector<CandidateSubstitute>{};
    });
    AttackBam(never, p, three, config);
    const auto ks = rec.ks();
    c.Expect(!ks.empty() && std::all_of(ks.begin(), ks.end(),
                                        [&](std::size_t k) { return k == want; }),
             "k sent for " + std::string(MethodLabel(config.method)));
  }

  // The threshold: a 0.25 candidate is below BA's 0.3 but above BAm's 0.2.
  FunctionProvider quarter([](std::span<const std::string>, std::size_t, std::size_t) {
    return std::vector<CandidateSubstitute>{{"story", 0.25}};
  });
  const auto ba_q = AttackBam(never, quarter, three, ba).queries_used;
  const auto bam_q = AttackBam(never, quarter, three, bam).queries_used;
  c.Expect(ba_q == 1 + 3, "BA skips 0.25: " + std::to_string(ba_q));
  c.Expect(bam_q == 1 + 3 + 3, "BAm tries 0.25: " + std::to_string(bam_q));

  // Genetic: original + initial population + 20 generations of 39 children.
  const auto gq = AttackGenetic(never, *ListProvider({"x1", "x2"}), three, gen).queries_used;
  c.Expect(gq == 1 + 40 + 20 * 39, "Genetic queries " + std::to_string(gq));

  // BAm2 over eight content words with a provider that always fills k.
  KRecorder rec;
  FunctionProvider full([&](std::span<const std::string>, std::size_t, std::size_t k) {
    rec.Add(k);
    std::vector<CandidateSubstitute> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({"q" + Letters(i), 0.9});
    return out;
  });
  const TextInstance eight = Instance("alpha bravo charlie delta echo foxtrot golf hotel");
  const auto b2 = AttackBam2(never, full, eight, DefaultConfig(Method::kBAm2));
  std::vector<std::size_t> want_k(8, 36);
  for (int it = 1; it < 6; ++it) {
    want_k.insert(want_k.end(), Bam2WordCount(it), schedule[it]);
  }
  c.Expect(rec.ks() == want_k, "BAm2 k sequence");
  // 1 + 8*36 ranking, then (i+1) words at n(i) each; 21 punctuation and
  // digit candidates join at the last step.
  const std::uint64_t want_q = 1 + 8 * 36 + 2 * 36 + 3 * 72 + 4 * 108 + 5 * 144 + 6 * (180 + 21);
  c.Expect(b2.queries_used == want_q, "BAm2 queries " + std::to_string(b2.queries_used));
  return {c.ok(), c.Summary() + "; BAm2 queries " + std::to_string(b2.queries_used) +
                      ", Genetic " + std::to_string(gq) + ", BA/BAm at 0.25: " +
                      std::to_string(ba_q) + "/" + std::to_string(bam_q)};
}

// ---------------------------------------------------------------------------
// AC5

Result Ac5() {
  Checks c;
  const std::vector<std::string> words{"alpha", "bravo",   "charlie", "delta",
                                       "echo",  "foxtrot", "golf",    "hotel"};
  std::set<std::string> triggers;
  for (std::size_t i = 0; i < words.size(); ++i) triggers.insert("swap" + Letters(i));
  // Each slot offers its own trigger first, then two inert words.
  FunctionProvider provider([&](std::span<const std::string>, std::size_t pos, std::size_t) {
    return std::vector<CandidateSubstitute>{
        {"swap" + Letters(pos), 0.9}, {"plain", 0.8}, {"other", 0.7}};
  });
  const TextInstance inst = Instance(Join(words));
  std::ostringstream d;
  for (std::size_t m = 1; m <= 6; ++m) {
    FunctionVictim victim(ThresholdScore(triggers, m));
    const auto o = AttackBam2(victim, provider, inst, DefaultConfig(Method::kBAm2));
    const int want_iteration = static_cast<int>(m) - 1;
    bool at_iteration = !o.trace.empty();
    bool all_triggers = true;
    for (const auto& e : o.trace.edits) {
      at_iteration = at_iteration && e.iteration == want_iteration;
      all_triggers = all_triggers && !e.after.empty() && triggers.count(e.after.front());
    }
    const std::string tag = "m=" + std::to_string(m);
    c.Expect(o.success, tag + " success");
    c.Expect(o.trace.size() == m, tag + " edits " + std::to_string(o.trace.size()));
    c.Expect(at_iteration, tag + " iteration");
    c.Expect(all_triggers, tag + " trigger edits");
    d << " m" << m << ":it" << (o.trace.empty() ? -1 : o.trace.edits.front().iteration) << "/"
      << o.trace.size() << "e";
  }
  return {c.ok(), c.Summary() + ";" + d.str()};
}

// ---------------------------------------------------------------------------
// AC6

Result Ac6() {
  Checks c;
  std::mt19937_64 gen(6);
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < 16; ++i) vocab.push_back("v" + Letters(i));
  std::normal_distribution<double> normal(0.0, 1.5);
  constexpr int kDraws = 15;
  std::size_t instances = 0;

  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t max_c = 0; max_c <= 10; ++max_c) {
      for (int draw = 0; draw < kDraws; ++draw) {
        ++instances;
        std::map<std::string, double> weights;
        for (const auto& w : vocab) weights[w] = normal(gen);
        const double bias = normal(gen);
        std::vector<std::string> tokens;
        for (std::size_t i = 0; i < n; ++i) tokens.push_back(vocab[gen() % vocab.size()]);
        std::vector<std::vector<CandidateSubstitute>> cands(n);
        for (auto& list : cands) {
          const std::size_t count = max_c == 0 ? 0 : gen() % (max_c + 1);
          for (std::size_t j = 0; j < count; ++j) list.push_back({vocab[gen() % vocab.size()], 0.5});
        }

        // Oracle: direct logistic over the distinct words of each variant.
        const auto p_nc = [&](const std::vector<std::string>& t) {
          double logit = bias;
          for (const auto& w : std::set<std::string>(t.begin(), t.end())) logit += weights.at(w);
          return 1.0 / (1.0 + std::exp(-logit));
        };
        const double base_nc = p_nc(tokens);
        const bool base_is_nc = base_nc > 1.0 - base_nc;
        const auto target_p = [&](double nc) { return base_is_nc ? 1.0 - nc : nc; };
        std::vector<double> gap(n, -std::numeric_limits<double>::infinity());
        std::vector<std::optional<std::string>> best(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
          for (const auto& cand : cands[pos]) {
            auto t = tokens;
            t[pos] = cand.token;
            const double g = target_p(p_nc(t)) - target_p(base_nc);
            if (!best[pos] || g > gap[pos]) {
              gap[pos] = g;
              best[pos] = cand.token;
            }
          }
        }
        // Rank by repeated selection of the largest remaining gap.
        std::vector<std::size_t> order;
        std::vector<bool> used(n, false);
        for (std::size_t r = 0; r < n; ++r) {
          std::size_t pick = n;
          for (std::size_t pos = 0; pos < n; ++pos) {
            if (!used[pos] && (pick == n || gap[pos] > gap[pick])) pick = pos;
          }
          used[pick] = true;
          order.push_back(pick);
        }

        FunctionVictim victim(KeywordScore(weights, bias));
        QueryMeter meter(victim, kDefaultQueryBudget);
        const TokenizedText text(tokens, std::nullopt);
        const auto got = RankImportanceMaxGapDetailed(
            meter, text, [&](const TokenizedText&, std::size_t pos) { return cands[pos]; });
        std::size_t total = 1;
        for (const auto& list : cands) total += list.size();
        const std::string tag = "n=" + std::to_string(n) + " c<=" + std::to_string(max_c);
        c.Expect(got.ranking.ranked_positions == order, tag + " ranking");
        c.Expect(meter.used() == total, tag + " queries");
        bool gaps_ok = got.ranking.gap_scores.size() == n;
        for (std::size_t r = 0; gaps_ok && r < n; ++r) {
          const double want = gap[order[r]];
          const double have = got.ranking.gap_scores[r];
          gaps_ok = std::isinf(want) ? (std::isinf(have) && have < 0)
                                     : std::abs(want - have) <= 1e-12;
        }
        c.Expect(gaps_ok, tag + " gaps");
        bool best_ok = true;
        for (std::size_t pos = 0; pos < n; ++pos) {
          best_ok = best_ok && (got.best[pos].has_value() == best[pos].has_value()) &&
                    (!best[pos] || got.best[pos]->token == *best[pos]);
        }
        c.Expect(best_ok, tag + " best candidates");
      }
    }
  }

  // Masking ranks "hoax" first, but the candidate that moves the victim most
  // sits at "report": the max-gap ranking puts that slot first and its best
  // candidate flips the decision on its own.
  FunctionVictim victim(KeywordScore({{"hoax", 2.0}, {"rumor", 1.0}, {"confirmed", -6.0}}, 0.0));
  const TokenizedText text({"hoax", "report"}, std::nullopt);
  QueryMeter meter(victim, kDefaultQueryBudget);
  const auto dir = RankImportanceUnk(meter, text);
  const auto nir = RankImportanceMaxGapDetailed(
      meter, text, [](const TokenizedText&, std::size_t pos) {
        return std::vector<CandidateSubstitute>{{pos == 0 ? "rumor" : "confirmed", 0.9}};
      });
  const std::size_t dir_top = dir.ranked_positions.front();
  const std::size_t nir_top = nir.ranking.ranked_positions.front();
  c.Expect(dir_top == 0 && nir_top == 1, "DIR and NIR disagree");
  c.Expect(PredictedLabel(nir.best_scores[nir_top]) == Label::kCredible, "NIR pick flips");
  c.Expect(PredictedLabel(nir.best_scores[dir_top]) == Label::kNonCredible, "DIR pick does not");
  return {c.ok(), c.Summary() + " over " + std::to_string(instances) +
                      " instances; DIR top '" + text[dir_top] + "', NIR top '" +
                      text[nir_top] + "'"};
}

// ---------------------------------------------------------------------------
// Shared mock suite for AC7 and AC8: keyword victims and a provider whose
// candidates depend only on the slot's word.

struct MockCase {
  std::map<std::string, double> weights;
  double bias = 0.0;
  std::vector<std::string> tokens;
};

std::shared_ptr<FunctionProvider> HashedProvider(std::vector<std::string> vocab,
                                                 std::size_t per_word) {
  return std::make_shared<FunctionProvider>(
      [vocab = std::move(vocab), per_word](std::span<const std::string> tokens,
                                           std::size_t pos, std::size_t k) {
        Rng rng(StableHash(tokens[pos]));
        std::vector<CandidateSubstitute> out;
        std::set<std::string> seen{tokens[pos]};
        while (out.size() < std::min(per_word, k) && seen.size() < vocab.size() + 1) {
          const std::string& w = vocab[rng.Uniform(vocab.size())];
          if (!seen.insert(w).second) continue;
          out.push_back({w, 0.95 - 0.05 * static_cast<double>(out.size())});
        }
        return out;
      });
}

// ---------------------------------------------------------------------------
// AC7

Result Ac7() {
  std::mt19937_64 gen(7);
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < 24; ++i) vocab.push_back("k" + Letters(i) + "m");
  std::normal_distribution<double> normal(0.0, 1.0);
  AttackResources res;
  res.provider = HashedProvider(vocab, 3);

  const auto bam2 = MakeAttack("bam2", res);
  const auto bam2_gen = MakeAttack("bam2+genetic", res);
  const auto gswse = MakeAttack("gswse", res);
  const auto gswse_tf = MakeAttack("gswse+textfooler", res);

  std::size_t n_bam2 = 0, n_bam2_gen = 0, n_gswse = 0, n_gswse_tf = 0;
  std::size_t violations = 0;
  for (int i = 0; i < 50; ++i) {
    std::map<std::string, double> weights;
    for (const auto& w : vocab) weights[w] = normal(gen);
    std::vector<std::string> tokens;
    for (int t = 0; t < 8; ++t) tokens.push_back(vocab[gen() % vocab.size()]);
    // Start well on the non-credible side so some instances resist.
    double sum = 0.0;
    for (const auto& w : std::set<std::string>(tokens.begin(), tokens.end())) sum += weights[w];
    FunctionVictim victim(KeywordScore(weights, 3.0 - sum));
    const TextInstance inst = Instance(Join(tokens), std::to_string(i));
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);

    const bool a = bam2->Run(victim, inst, seed).success;
    const bool ab = bam2_gen->Run(victim, inst, seed).success;
    const bool g = gswse->Run(victim, inst, seed).success;
    const bool gt = gswse_tf->Run(victim, inst, seed).success;
    n_bam2 += a;
    n_bam2_gen += ab;
    n_gswse += g;
    n_gswse_tf += gt;
    if ((a && !ab) || (g && !gt)) ++violations;
  }
  std::ostringstream d;
  d << "50 instances; BAm2 " << n_bam2 << " -> BAm2&Genetic " << n_bam2_gen << ", GSWSE "
    << n_gswse << " -> GSWSE&TextFooler " << n_gswse_tf << "; " << violations
    << " superset violations";
  return {violations == 0 && n_bam2 > 0 && n_gswse > 0, d.str()};
}

// ---------------------------------------------------------------------------
// AC8

Result Ac8() {
  std::mt19937_64 gen(8);
  // Function words the suite plants in every text; checked against this
  // hand list rather than the library's own.
  const std::vector<std::string> stop{"the", "a", "of", "and", "is", "to", "in", "it"};
  const std::set<std::string> stop_set(stop.begin(), stop.end());
  std::vector<std::string> content;
  for (std::size_t i = 0; i < 16; ++i) content.push_back("g" + Letters(i) + "t");
  std::vector<std::string> all = content;
  all.insert(all.end(), stop.begin(), stop.end());
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto provider = HashedProvider(all, 8);

  std::size_t edits = 0, stop_edits = 0, repeats = 0, successes = 0, fixture_bad = 0;
  for (int i = 0; i < 200; ++i) {
    std::map<std::string, double> weights;
    for (const auto& w : content) weights[w] = normal(gen);
    // Stopwords carry the heaviest weights, so editing them would pay.
    for (const auto& w : stop) weights[w] = 3.0 * normal(gen);
    std::vector<std::string> tokens;
    for (int t = 0; t < 10; ++t) {
      tokens.push_back(gen() % 5 < 2 ? stop[gen() % stop.size()] : content[gen() % content.size()]);
    }
    double sum = 0.0;
    for (const auto& w : std::set<std::string>(tokens.begin(), tokens.end())) sum += weights[w];
    FunctionVictim victim(KeywordScore(weights, 1.5 - sum));
    AttackConfig config = DefaultConfig(Method::kGSWSE);
    config.seed = static_cast<std::uint64_t>(i);
    const auto o = AttackGswse(victim, *provider, Instance(Join(tokens), std::to_string(i)), config);
    successes += o.success;
    std::set<std::size_t> positions;
    for (const auto& e : o.trace.edits) {
      ++edits;
      if (e.kind != EditKind::kReplace || e.before.size() != 1 ||
          e.position >= tokens.size() || tokens[e.position] != e.before.front()) {
        ++fixture_bad;
        continue;
      }
      stop_edits += stop_set.count(e.before.front());
      if (!positions.insert(e.position).second) ++repeats;
    }
  }
  for (const auto& w : stop) fixture_bad += !IsStopword(w);
  std::ostringstream d;
  d << "200 instances, " << edits << " edits, " << successes << " successes; " << stop_edits
    << " stopword edits, " << repeats << " repeat-position edits, " << fixture_bad
    << " malformed";
  return {stop_edits == 0 && repeats == 0 && fixture_bad == 0 && edits > 0, d.str()};
}

// ---------------------------------------------------------------------------
// AC9

Result Ac9() {
  std::vector<std::string> words{"alpha", "bravo", "charlie", "delta",
                                 "echo",  "foxtrot", "golf", "hotel"};
  std::vector<std::string> subs;
  std::map<std::string, double> weights;
  for (std::size_t i = 0; i < 12; ++i) {
    subs.push_back("s" + Letters(i) + "n");
    // Each substitute nudges toward credible by a different amount.
    weights[subs.back()] = -0.05 * static_cast<double>(i + 1);
  }
  FunctionVictim victim(KeywordScore(weights, 4.0));
  const auto provider = ListProvider(subs);
  const TextInstance inst = Instance(Join(words));

  std::size_t decreases = 0, runs_short = 0, generations = 0, flipped = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AttackConfig config = DefaultConfig(Method::kGenetic);
    config.seed = seed;
    GeneticStats stats;
    const auto o = AttackGenetic(victim, *provider, inst, config, &stats);
    flipped += o.success;
    generations += static_cast<std::size_t>(stats.generations_run);
    if (stats.best_fitness.size() < 2) ++runs_short;
    for (std::size_t g = 1; g < stats.best_fitness.size(); ++g) {
      if (stats.best_fitness[g] < stats.best_fitness[g - 1]) ++decreases;
    }
  }
  std::ostringstream d;
  d << "100 seeded runs, " << generations << " generations, " << decreases
    << " decreases of best fitness, " << flipped << " flips";
  return {decreases == 0 && runs_short == 0, d.str()};
}

// ---------------------------------------------------------------------------
// AC10

Result Ac10() {
  const auto start = Clock::now();
  FixtureOptions options;
  options.instances = 200;
  const SyntheticFixtures fx = MakeSyntheticFixtures(options);
  const TrainingResult trained = TrainLinearVictim(fx.corpus.instances, TrainingConfig{});
  LinearVictim victim(std::make_shared<const LinearVictimModel>(trained.model));
  AttackResources res;
  res.provider = std::make_shared<StaticProvider>(
      std::make_shared<const SynonymTable>(fx.synonyms));
  const auto attack = MakeAttack("bam2+genetic", res);
  RunOptions run;
  run.parallelism = 1;
  run.seed = 1;
  const RunResult result = RunAttackSet(fx.corpus, victim, *attack, TokenOverlapScorer{}, run);
  const double secs = Seconds(start);
  const AggregateRow& s = result.row.scores;
  std::ostringstream d;
  d << s.instances << " instances, training accuracy " << Fmt(trained.training_accuracy, 2)
    << "; Success " << Fmt(s.success) << " (>= 0.90), mean queries " << Fmt(s.queries, 1)
    << " (< 5000), BODEGA " << Fmt(s.bodega) << ", " << Fmt(secs, 2) << "s (< 120s)";
  return {s.instances == 200 && s.success >= 0.90 && s.queries < 5000.0 && secs < 120.0,
          d.str()};
}

// ---------------------------------------------------------------------------
// AC11

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result Ac11(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli binary given"};
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("advtext-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
  const auto run = [&](const std::string& args) {
    const std::string cmd = q(cli) + " " + args + " > " + q(dir / "log.txt") + " 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  const fs::path fx = dir / "fixtures";
  bool ok = run("gen-fixtures --out-dir " + q(fx) + " --instances 80 --seed 11") &&
            run("train-victim --corpus " + q(fx / "corpus.tsv") + " --out " + q(dir / "model.txt"));
  if (!ok) return {false, "fixture setup failed: " + ReadAll(dir / "log.txt")};

  const auto attack = [&](const std::string& method, const std::string& out, int parallelism) {
    return run("attack --dataset " + q(fx / "corpus.tsv") + " --victim builtin:" +
               q(dir / "model.txt") + " --method " + method + " --provider static:" +
               q(fx / "synonyms.tsv") + " --neighbours embeddings:" + q(fx / "embeddings.txt") +
               " --seed 5 --parallelism " + std::to_string(parallelism) + " --out-dir " +
               q(dir / out) + " --format markdown --format json");
  };
  Checks c;
  const std::vector<std::string> methods{"genetic", "bam2+genetic", "deepwordbug"};
  std::size_t bytes = 0;
  for (const auto& m : methods) {
    const bool ran = attack(m, m + "-a", 1) && attack(m, m + "-b", 1) && attack(m, m + "-p8", 8);
    c.Expect(ran, m + " runs");
    if (!ran) continue;
    const std::string a = ReadAll(dir / (m + "-a") / "outcomes.ndjson");
    bytes += a.size();
    c.Expect(!a.empty() && a == ReadAll(dir / (m + "-b") / "outcomes.ndjson"),
             m + " outcomes identical");
    c.Expect(ReadAll(dir / (m + "-a") / "report.md") == ReadAll(dir / (m + "-p8") / "report.md"),
             m + " report p1 vs p8");
    c.Expect(ReadAll(dir / (m + "-a") / "report.json") ==
                 ReadAll(dir / (m + "-p8") / "report.json"),
             m + " json report p1 vs p8");
  }
  fs::remove_all(dir);
  return {c.ok(), c.Summary() + " (genetic, bam2+genetic, deepwordbug; " +
                      std::to_string(bytes) + " outcome bytes compared)"};
}

// ---------------------------------------------------------------------------
// AC12

Result Ac12() {
  using namespace protocol;
  using testing::ScriptedModel;
  using testing::StubHttpServer;
  using testing::StubStdioServer;
  using testing::Typed;
  Checks c;

  // Round trip over HTTP, byte-exact request on the wire.
  {
    StubHttpServer server(Typed(ScriptedModel));
    ProtocolClient client(MakeHttpTransport(server.url()));
    const std::vector<std::string> texts{"a fake story", "plain news"};
    const auto expected =
        std::get<ClassifyReply>(ScriptedModel(Request{"x", ClassifyRequest{texts}})).scores;
    c.Expect(client.Classify(texts) == expected, "http classify");
    const auto subs = client.Substitutes({"a", "[MASK]"}, 1, 3);
    c.Expect(subs.size() == 3 && subs[0].token == "alpha" && subs[2].score == 1.0 - 0.4,
             "http substitutes");
    c.Expect(client.Semantic("x", "y") == 0.5, "http semantic");
    const auto got = server.received();
    c.Expect(got.size() == 3 && got[0].first == "/v1/classify" &&
                 got[1].first == "/v1/substitutes" && got[2].first == "/v1/semantic",
             "http paths");
    c.Expect(!got.empty() &&
                 got[0].second ==
                     "{\"id\":\"req-1\",\"kind\":\"classify\",\"payload\":{\"texts\":"
                     "[\"a fake story\",\"plain news\"]},\"version\":\"1\"}\n",
             "request bytes");
  }

  // Round trip over stdio with replies in reverse order.
  {
    StubStdioServer server(Typed(ScriptedModel), 2);
    auto client = std::make_shared<ProtocolClient>(server.TakeTransport());
    auto f1 = std::async(std::launch::async, [&] { return client->Semantic("same", "same"); });
    auto f2 = std::async(std::launch::async, [&] { return client->Semantic("x", "y"); });
    c.Expect(f1.get() == 1.0 && f2.get() == 0.5, "stdio out-of-order replies");
    const auto expected = std::get<ClassifyReply>(
        ScriptedModel(Request{"x", ClassifyRequest{{"hoax hoax"}}})).scores;
    StubStdioServer serial(Typed(ScriptedModel));
    ProtocolClient one(serial.TakeTransport(StdioTransport::Mode::kSerialized));
    c.Expect(one.Classify({"hoax hoax"}) == expected, "stdio classify");
    client.reset();
  }

  // Bounds: every malformed reply is a protocol error.
  const auto reply_with = [&](const std::string& line, const std::function<void(ProtocolClient&)>& call,
                              const std::string& what) {
    StubHttpServer server([line](const std::string&) { return line; });
    ProtocolClient client(MakeHttpTransport(server.url()));
    c.Expect(CodeOf([&] { call(client); }) == ErrorCode::kProtocol, what);
  };
  const auto classify = [](ProtocolClient& cl) { cl.Classify({"x"}); };
  const auto substitutes = [](ProtocolClient& cl) { cl.Substitutes({"x"}, 0, 2); };
  const auto semantic = [](ProtocolClient& cl) { cl.Semantic("x", "y"); };
  reply_with(R"({"scores":[[0.5,0.7]]})", classify, "probabilities over 1");
  reply_with(R"({"scores":[[-0.2,1.2]]})", classify, "negative probability");
  reply_with(R"({"scores":[[0.5,0.5],[0.5,0.5]]})", classify, "reply count");
  reply_with(R"({"candidates":[["a",1.5]]})", substitutes, "candidate score above 1");
  reply_with(R"({"candidates":[["a",0.5],["b",0.4],["c",0.3]]})", substitutes, "more than k");
  reply_with(R"({"score":-0.1})", semantic, "semantic below 0");
  reply_with(R"({"id":"nope","payload":{"score":0.5},"version":"1"})", semantic, "wrong id");
  reply_with(R"({"id":"req-1","payload":{"score":0.5},"version":"2"})", semantic, "version");
  reply_with("{not json", semantic, "malformed json");
  {
    StubHttpServer server(Typed(ScriptedModel));
    ProtocolClient client(MakeHttpTransport(server.url()));
    c.Expect(CodeOf([&] { client.Substitutes({"x"}, 0, 0); }) == ErrorCode::kValidation,
             "k = 0 rejected locally");
    c.Expect(CodeOf([&] { client.Substitutes({"x"}, 3, 1); }) == ErrorCode::kValidation,
             "mask position rejected locally");
    c.Expect(server.received().empty(), "nothing sent for invalid requests");
  }

  // Error mapping.
  {
    StubHttpServer failing(Typed([](const Request&) -> ReplyBody {
      return ErrorReply{"overloaded", "busy"};
    }));
    ProtocolClient client(MakeHttpTransport(failing.url()));
    try {
      client.Classify({"x"});
      c.Expect(false, "error reply raises");
    } catch (const Error& e) {
      c.Expect(e.code() == ErrorCode::kRemote && e.remote_code() == "overloaded",
               "error reply -> remote");
    }
    HttpOptions quick;
    quick.connect_timeout = std::chrono::milliseconds(200);
    auto down = std::make_shared<ProtocolClient>(MakeHttpTransport("http://127.0.0.1:1", quick));
    int attempts = 0;
    c.Expect(CodeOf([&] { down->Classify({"x"}, &attempts); }) == ErrorCode::kTransport &&
                 attempts == 2,
             "unreachable -> transport after one retry");
    RemoteVictim victim(down, "down");
    c.Expect(CodeOf([&] { victim.ClassifyOne("x"); }) == ErrorCode::kVictimUnavailable,
             "victim unavailable");
    RemoteProvider provider(down);
    const std::vector<std::string> tokens{"x"};
    c.Expect(CodeOf([&] { provider.Propose(tokens, 0, 2); }) == ErrorCode::kProviderUnavailable,
             "provider unavailable");
    RemoteScorer scorer(down);
    c.Expect(CodeOf([&] { scorer.Score("a", "b"); }) == ErrorCode::kScorerUnavailable,
             "scorer unavailable");
  }
  return {c.ok(), c.Summary() + " (HTTP and stdio framings)"};
}

}  // namespace
}  // namespace advtext

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks");
  std::string cli;
  app.add_option("--cli", cli, "advtext binary used for the end-to-end determinism check");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* id;
    const char* title;
    std::function<advtext::Result()> run;
  };
  using namespace advtext;
  const std::vector<Criterion> criteria{
      {"AC1", "levenshtein-exhaustive", Ac1},
      {"AC2", "similarity-bounds", Ac2},
      {"AC3", "bodega-oracle", Ac3},
      {"AC4", "attack-parameters", Ac4},
      {"AC5", "bam2-schedule", Ac5},
      {"AC6", "max-gap-ranking", Ac6},
      {"AC7", "cascade-superset", Ac7},
      {"AC8", "gswse-constraints", Ac8},
      {"AC9", "genetic-elitism", Ac9},
      {"AC10", "end-to-end", Ac10},
      {"AC11", "determinism", [&] { return Ac11(cli); }},
      {"AC12", "protocol-conformance", Ac12},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Result r;
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::cout << criterion.id << " " << (r.pass ? "PASS" : "FAIL") << " " << criterion.title
              << ": " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
