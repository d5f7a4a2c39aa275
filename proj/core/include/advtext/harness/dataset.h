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

#ifndef ADVTEXT_HARNESS_DATASET_H_
#define ADVTEXT_HARNESS_DATASET_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "advtext/core/types.h"

namespace advtext {

// One attack set (HN, PR2, FC, RD, C19, or a synthetic corpus).
struct TaskDataset {
  std::string name;
  std::vector<TextInstance> instances;
};

// UTF-8 TSV, one instance per line: label<TAB>text1[<TAB>text2]. A first
// line whose first field is not a number is taken as a header. Instance ids
// are 0-based data-row numbers ("0", "1", ...). A blank text2 gives a
// single-part instance; blank lines are skipped.
//
// Throws Error(kFormat) naming the 1-based file line for a bad label, a
// missing or blank text, or extra columns; Error(kEmptyDataset) when there
// are no data rows; Error(kIo) if the file cannot be read.
TaskDataset LoadDataset(std::istream& in, std::string name);
// The dataset name defaults to the file stem.
TaskDataset LoadDataset(const std::filesystem::path& path);

// Writes the format LoadDataset reads, without a header.
void WriteDataset(const TaskDataset& dataset, std::ostream& out);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_DATASET_H_
