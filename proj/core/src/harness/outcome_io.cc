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

#include "advtext/harness/outcome_io.h"

#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "advtext/core/error.h"
#include "json.hpp"

namespace advtext {
namespace {

using nlohmann::json;

std::vector<std::string> SplitParts(const std::string& text) {
  const std::size_t tab = text.find(kPartSeparator);
  if (tab == std::string::npos) return {text};
  return {text.substr(0, tab), text.substr(tab + 1)};
}

template <typename T>
T Get(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

}  // namespace

std::string EncodeOutcome(const OutcomeRecord& r) {
  const AttackOutcome& o = r.outcome;
  json trace = json::array();
  for (const auto& e : o.trace.edits) {
    trace.push_back({{"kind", EditKindName(e.kind)},
                     {"position", e.position},
                     {"before", e.before},
                     {"after", e.after},
                     {"iteration", e.iteration},
                     {"part", e.part}});
  }
  const json j = {
      {"id", o.instance.id()},
      {"task", r.task},
      {"victim", r.victim},
      {"method", r.method},
      {"stage", o.method_used},
      {"label", ToInt(o.instance.label())},
      {"original", o.instance.Serialized()},
      {"adversarial", o.adversarial_text},
      {"success", o.success},
      {"queries", o.queries_used},
      {"budget_exhausted", o.budget_exhausted},
      {"original_prediction", ToInt(o.original_prediction)},
      {"adversarial_prediction", ToInt(o.adversarial_prediction)},
      {"scores",
       {{"con", o.scores.con},
        {"sem", o.scores.sem},
        {"char", o.scores.chr},
        {"bodega", o.scores.bodega}}},
      {"trace", trace},
  };
  return j.dump();
}

void WriteOutcomes(const std::vector<OutcomeRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << EncodeOutcome(r) << '\n';
}

OutcomeRecord DecodeOutcome(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed outcome: ") + e.what());
  }
  try {
    if (!j.is_object()) throw Error(ErrorCode::kFormat, "outcome is not an object");
    for (const char* key : {"original", "adversarial"}) {
      if (!j.contains(key)) {
        throw Error(ErrorCode::kFormat, std::string("outcome lacks '") + key + "'");
      }
    }
    TextInstance instance(Get<std::string>(j, "id", ""),
                          SplitParts(j.at("original").get<std::string>()),
                          LabelFromInt(Get<int>(j, "label", 0)));
    OutcomeRecord r{Get<std::string>(j, "task", "unknown"),
                    Get<std::string>(j, "victim", "unknown"),
                    Get<std::string>(j, "method", "unknown"),
                    AttackOutcome(std::move(instance))};
    AttackOutcome& o = r.outcome;
    o.adversarial_text = j.at("adversarial").get<std::string>();
    o.method_used = Get<std::string>(j, "stage", r.method);
    o.success = Get<bool>(j, "success", false);
    o.queries_used = Get<std::uint64_t>(j, "queries", 0);
    o.budget_exhausted = Get<bool>(j, "budget_exhausted", false);
    o.original_prediction = LabelFromInt(Get<int>(j, "original_prediction", 0));
    o.adversarial_prediction = LabelFromInt(Get<int>(j, "adversarial_prediction", 0));
    if (j.contains("scores")) {
      const json& s = j.at("scores");
      o.scores.con = Get<int>(s, "con", 0);
      o.scores.sem = Get<double>(s, "sem", 0.0);
      o.scores.chr = Get<double>(s, "char", 0.0);
      o.scores.bodega = Get<double>(s, "bodega", 0.0);
    }
    for (const auto& e : Get<json>(j, "trace", json::array())) {
      o.trace.edits.push_back(Edit{EditKindFromName(e.at("kind").get<std::string>()),
                                   e.at("position").get<std::size_t>(),
                                   e.at("before").get<std::vector<std::string>>(),
                                   e.at("after").get<std::vector<std::string>>(),
                                   Get<int>(e, "iteration", 0), Get<int>(e, "part", 0)});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed outcome: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormat) throw;
    throw Error(ErrorCode::kFormat, e.what());
  }
}

std::vector<OutcomeRecord> ReadOutcomes(std::istream& in) {
  std::vector<OutcomeRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(DecodeOutcome(line));
      if (out.back().outcome.instance.id().empty()) {
        auto& o = out.back().outcome;
        o.instance = TextInstance(std::to_string(out.size() - 1), o.instance.parts(),
                                  o.instance.label());
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading outcomes");
  return out;
}

std::vector<ReportRow> SummarizeOutcomes(const std::vector<OutcomeRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyRun, "no outcomes");
  using Key = std::tuple<std::string, std::string, std::string>;
  std::vector<Key> order;
  std::map<Key, std::vector<InstanceScore>> groups;
  for (const auto& r : records) {
    Key key{r.task, r.victim, r.method};
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(InstanceScore{r.outcome.scores, r.outcome.queries_used});
  }
  std::vector<ReportRow> rows;
  for (const auto& key : order) {
    rows.push_back(ReportRow{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                             AggregateScores(groups.at(key))});
  }
  return rows;
}

}  // namespace advtext
