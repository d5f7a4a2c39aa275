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

#ifndef ADVTEXT_CORE_TYPES_H_
#define ADVTEXT_CORE_TYPES_H_

#include <string>
#include <vector>

namespace advtext {

// Binary credibility label. The integer encoding is part of every file
// format the engine reads or writes.
enum class Label : int {
  kCredible = 0,
  kNonCredible = 1,
};

constexpr Label Opposite(Label label) {
  return label == Label::kCredible ? Label::kNonCredible : Label::kCredible;
}

constexpr int ToInt(Label label) { return static_cast<int>(label); }

// Throws Error(kValidation) for anything other than 0 or 1.
Label LabelFromInt(int value);

// One labelled example with one or two text parts (e.g. claim, evidence).
// The id is carried along for reporting but does not take part in equality.
class TextInstance {
 public:
  // Throws Error(kValidation) when parts is empty, holds more than two
  // segments, or a segment is blank; Error(kValidation) for invalid UTF-8.
  TextInstance(std::string id, std::vector<std::string> parts, Label label);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& parts() const { return parts_; }
  Label label() const { return label_; }
  bool is_pair() const { return parts_.size() == 2; }

  // Parts joined with the part separator (a single tab).
  std::string Serialized() const;

  friend bool operator==(const TextInstance& a, const TextInstance& b) {
    return a.label_ == b.label_ && a.parts_ == b.parts_;
  }

 private:
  std::string id_;
  std::vector<std::string> parts_;
  Label label_;
};

inline constexpr char kPartSeparator = '\t';

// Probability pair returned by a victim classifier.
struct VictimScores {
  double p_credible = 0.5;
  double p_noncredible = 0.5;

  double ProbabilityOf(Label label) const {
    return label == Label::kCredible ? p_credible : p_noncredible;
  }

  friend bool operator==(const VictimScores&, const VictimScores&) = default;
};

// Argmax; an exact tie resolves to Credible.
constexpr Label PredictedLabel(const VictimScores& scores) {
  return scores.p_noncredible > scores.p_credible ? Label::kNonCredible
                                                  : Label::kCredible;
}

// True when both probabilities are non-negative and sum to 1 within |tol|.
bool IsValidScores(const VictimScores& scores, double tol);

// A replacement proposal for one token slot. Scores live on [0, 1] for every
// provider so thresholds apply uniformly.
struct CandidateSubstitute {
  std::string token;
  double score = 0.0;

  friend bool operator==(const CandidateSubstitute&,
                         const CandidateSubstitute&) = default;
};

}  // namespace advtext

#endif  // ADVTEXT_CORE_TYPES_H_
