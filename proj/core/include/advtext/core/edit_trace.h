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

#ifndef ADVTEXT_CORE_EDIT_TRACE_H_
#define ADVTEXT_CORE_EDIT_TRACE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace advtext {

enum class EditKind { kReplace, kInsert, kMerge, kCharEdit };

std::string_view EditKindName(EditKind kind);
// Throws Error(kFormat) for unknown names.
EditKind EditKindFromName(std::string_view name);

// One applied edit. |position| is the token index in the text the edit was
// applied to; |part| records which text part (0 or 1) it touched.
struct Edit {
  EditKind kind = EditKind::kReplace;
  std::size_t position = 0;
  std::vector<std::string> before;
  std::vector<std::string> after;
  int iteration = 0;
  int part = 0;

  friend bool operator==(const Edit&, const Edit&) = default;
};

struct EditTrace {
  std::vector<Edit> edits;

  bool empty() const { return edits.empty(); }
  std::size_t size() const { return edits.size(); }
  // False when two Replace edits share a position.
  bool HasUniqueReplacePositions() const;

  friend bool operator==(const EditTrace&, const EditTrace&) = default;
};

}  // namespace advtext

#endif  // ADVTEXT_CORE_EDIT_TRACE_H_
