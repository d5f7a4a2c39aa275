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

#include "advtext/harness/dataset.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include "advtext/core/error.h"

namespace advtext {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \r\n\v\f") == std::string_view::npos;
}

std::optional<long> ParseInt(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void RowError(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kFormat, "row " + std::to_string(line) + ": " + what);
}

}  // namespace

TaskDataset LoadDataset(std::istream& in, std::string name) {
  TaskDataset ds;
  ds.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    const auto fields = SplitTabs(line);
    const auto label = ParseInt(fields[0]);
    if (first && !label) {
      first = false;
      continue;  // header
    }
    first = false;
    if (!label || (*label != 0 && *label != 1)) {
      RowError(line_no, "label must be 0 or 1, got '" + std::string(fields[0]) + "'");
    }
    if (fields.size() < 2 || IsBlank(fields[1])) RowError(line_no, "missing text");
    if (fields.size() > 3) RowError(line_no, "expected at most three columns");
    std::vector<std::string> parts{std::string(fields[1])};
    if (fields.size() == 3 && !IsBlank(fields[2])) parts.emplace_back(fields[2]);
    try {
      ds.instances.emplace_back(std::to_string(ds.instances.size()),
                                std::move(parts), LabelFromInt(static_cast<int>(*label)));
    } catch (const Error& e) {
      RowError(line_no, e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading dataset");
  if (ds.instances.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset '" + ds.name + "' has no rows");
  }
  return ds;
}

TaskDataset LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open dataset " + path.string());
  return LoadDataset(in, path.stem().string());
}

void WriteDataset(const TaskDataset& dataset, std::ostream& out) {
  for (const auto& inst : dataset.instances) {
    out << ToInt(inst.label());
    for (const auto& part : inst.parts()) out << '\t' << part;
    out << '\n';
  }
}

}  // namespace advtext
