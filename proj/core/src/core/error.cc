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

#include "advtext/core/error.h"

#include <utility>

namespace advtext {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kEmptyRun: return "EmptyRun";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kDegenerateCorpus: return "DegenerateCorpus";
    case ErrorCode::kTextTooLong: return "TextTooLong";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTransport: return "TransportError";
    case ErrorCode::kProtocol: return "ProtocolError";
    case ErrorCode::kRemote: return "RemoteError";
    case ErrorCode::kVictimUnavailable: return "VictimUnavailable";
    case ErrorCode::kProviderUnavailable: return "ProviderUnavailable";
    case ErrorCode::kScorerUnavailable: return "ScorerUnavailable";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

Error::Error(ErrorCode code, const std::string& message,
             std::string remote_code)
    : std::runtime_error(std::string(ErrorCodeName(code)) + "(" +
                         remote_code + "): " + message),
      code_(code),
      remote_code_(std::move(remote_code)) {}

}  // namespace advtext
