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

#ifndef ADVTEXT_HARNESS_REPORT_H_
#define ADVTEXT_HARNESS_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "advtext/scoring/bodega.h"

namespace advtext {

struct ReportRow {
  std::string task;
  std::string victim;
  std::string method;
  AggregateRow scores;
};

enum class ReportFormat { kMarkdown, kCsv, kJson };

// "markdown"/"md", "csv", "json". Throws Error(kUsage).
ReportFormat ReportFormatFromName(std::string_view name);
std::string_view ReportFormatExtension(ReportFormat format);

// Columns: Task, Victim, Method, BODEGA, Success, Semantic, Character,
// Queries. Markdown and CSV round numbers to two decimals; JSON keeps full
// precision and adds the instance count. Throws Error(kEmptyRun) for no rows.
std::string RenderReport(const std::vector<ReportRow>& rows, ReportFormat format);

// Two-decimal rendering shared by the table formats.
std::string FormatFixed2(double value);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_REPORT_H_
