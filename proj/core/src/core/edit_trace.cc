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

#include "advtext/core/edit_trace.h"

#include <set>

#include "advtext/core/error.h"

namespace advtext {

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kReplace: return "replace";
    case EditKind::kInsert: return "insert";
    case EditKind::kMerge: return "merge";
    case EditKind::kCharEdit: return "char_edit";
  }
  return "replace";
}

EditKind EditKindFromName(std::string_view name) {
  if (name == "replace") return EditKind::kReplace;
  if (name == "insert") return EditKind::kInsert;
  if (name == "merge") return EditKind::kMerge;
  if (name == "char_edit") return EditKind::kCharEdit;
  throw Error(ErrorCode::kFormat, "unknown edit kind '" + std::string(name) + "'");
}

bool EditTrace::HasUniqueReplacePositions() const {
  std::set<std::size_t> seen;
  for (const auto& e : edits) {
    if (e.kind != EditKind::kReplace) continue;
    if (!seen.insert(e.position).second) return false;
  }
  return true;
}

}  // namespace advtext
