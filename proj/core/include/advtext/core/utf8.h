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

#ifndef ADVTEXT_CORE_UTF8_H_
#define ADVTEXT_CORE_UTF8_H_

#include <string>
#include <string_view>

namespace advtext::utf8 {

bool IsValid(std::string_view text);

// Decodes to Unicode scalar values. Throws Error(kValidation) on malformed
// input.
std::u32string Decode(std::string_view text);

std::string Encode(std::u32string_view code_points);

// Number of Unicode scalar values in |text|.
std::size_t Length(std::string_view text);

// ASCII-only case folding; non-ASCII bytes pass through unchanged.
std::string FoldCase(std::string_view text);

}  // namespace advtext::utf8

#endif  // ADVTEXT_CORE_UTF8_H_
