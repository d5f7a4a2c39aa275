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

#include "advtext/victims/remote_victim.h"

#include "advtext/core/error.h"

namespace advtext {

RemoteVictim::RemoteVictim(std::shared_ptr<protocol::ProtocolClient> client,
                           std::string endpoint_name, std::size_t batch_limit)
    : Victim(batch_limit),
      client_(std::move(client)),
      endpoint_name_(std::move(endpoint_name)) {}

std::vector<VictimScores> RemoteVictim::ClassifyBatch(
    std::span<const std::string> texts, std::uint64_t& charged) {
  std::vector<std::string> batch(texts.begin(), texts.end());
  int attempts = 1;
  try {
    auto scores = client_->Classify(batch, &attempts);
    charged = texts.size() * static_cast<std::uint64_t>(attempts);
    return scores;
  } catch (const Error& e) {
    charged = texts.size() * static_cast<std::uint64_t>(attempts);
    if (e.code() == ErrorCode::kTransport) {
      throw Error(ErrorCode::kVictimUnavailable, e.what());
    }
    throw;
  }
}

}  // namespace advtext
