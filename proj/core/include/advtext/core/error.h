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

#ifndef ADVTEXT_CORE_ERROR_H_
#define ADVTEXT_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace advtext {

// Every failure the engine reports is an advtext::Error carrying one of
// these codes. Callers branch on code(), never on the message text.
enum class ErrorCode {
  kEmptyText,
  kValidation,
  kFormat,
  kIo,
  kEmptyRun,
  kEmptyDataset,
  kDegenerateCorpus,
  kTextTooLong,
  kBudgetExceeded,
  kTransport,
  kProtocol,
  kRemote,
  kVictimUnavailable,
  kProviderUnavailable,
  kScorerUnavailable,
  kUsage,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  // For kRemote: |remote_code| is the server-supplied error identifier.
  Error(ErrorCode code, const std::string& message, std::string remote_code);

  ErrorCode code() const noexcept { return code_; }
  const std::string& remote_code() const noexcept { return remote_code_; }

 private:
  ErrorCode code_;
  std::string remote_code_;
};

}  // namespace advtext

#endif  // ADVTEXT_CORE_ERROR_H_
