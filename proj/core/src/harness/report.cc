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

#include "advtext/harness/report.h"

#include <array>
#include <cmath>
#include <cstdio>

#include "advtext/core/error.h"
#include "advtext/core/utf8.h"
#include "json.hpp"

namespace advtext {
namespace {

constexpr std::array<std::string_view, 8> kColumns = {
    "Task", "Victim", "Method", "BODEGA", "Success", "Semantic", "Character", "Queries"};

std::array<std::string, 8> Cells(const ReportRow& r) {
  return {r.task,
          r.victim,
          r.method,
          FormatFixed2(r.scores.bodega),
          FormatFixed2(r.scores.success),
          FormatFixed2(r.scores.semantic),
          FormatFixed2(r.scores.character),
          FormatFixed2(r.scores.queries)};
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string MarkdownCell(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string FormatFixed2(double value) {
  // Round half away from zero on the decimal value, then print; avoids
  // printf's binary-representation ties.
  const double rounded = std::round(value * 100.0) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

ReportFormat ReportFormatFromName(std::string_view name) {
  const std::string n = utf8::FoldCase(name);
  if (n == "markdown" || n == "md") return ReportFormat::kMarkdown;
  if (n == "csv") return ReportFormat::kCsv;
  if (n == "json") return ReportFormat::kJson;
  throw Error(ErrorCode::kUsage, "unknown report format '" + std::string(name) +
                                     "'; use markdown, csv or json");
}

std::string_view ReportFormatExtension(ReportFormat format) {
  switch (format) {
    case ReportFormat::kMarkdown: return "md";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
  }
  return "txt";
}

std::string RenderReport(const std::vector<ReportRow>& rows, ReportFormat format) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyRun, "report has no rows");
  std::string out;
  switch (format) {
    case ReportFormat::kMarkdown: {
      out += "|";
      for (const auto c : kColumns) out += " " + std::string(c) + " |";
      out += "\n|";
      for (std::size_t i = 0; i < kColumns.size(); ++i) out += i < 3 ? "---|" : "---:|";
      out += "\n";
      for (const auto& r : rows) {
        out += "|";
        for (const auto& cell : Cells(r)) out += " " + MarkdownCell(cell) + " |";
        out += "\n";
      }
      break;
    }
    case ReportFormat::kCsv: {
      for (std::size_t i = 0; i < kColumns.size(); ++i) {
        out += (i ? "," : "") + std::string(kColumns[i]);
      }
      out += "\n";
      for (const auto& r : rows) {
        const auto cells = Cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out += (i ? "," : "") + CsvField(cells[i]);
        }
        out += "\n";
      }
      break;
    }
    case ReportFormat::kJson: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        j.push_back({{"task", r.task},
                     {"victim", r.victim},
                     {"method", r.method},
                     {"bodega", r.scores.bodega},
                     {"success", r.scores.success},
                     {"semantic", r.scores.semantic},
                     {"character", r.scores.character},
                     {"queries", r.scores.queries},
                     {"instances", r.scores.instances}});
      }
      out = nlohmann::json{{"rows", j}}.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace advtext
