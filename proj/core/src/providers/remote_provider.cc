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

#include "advtext/providers/remote_provider.h"

#include "advtext/core/error.h"

namespace advtext {

std::vector<CandidateSubstitute> RemoteCandidates(
    protocol::ProtocolClient& client, std::span<const std::string> tokens,
    std::size_t mask_position, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kValidation, "k must be at least 1");
  if (mask_position >= tokens.size()) {
    throw Error(ErrorCode::kValidation, "mask position out of range");
  }
  std::vector<CandidateSubstitute> candidates;
  try {
    candidates = client.Substitutes(
        std::vector<std::string>(tokens.begin(), tokens.end()),
        static_cast<std::int64_t>(mask_position), static_cast<std::int64_t>(k));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTransport) {
      throw Error(ErrorCode::kProviderUnavailable, e.what());
    }
    throw;
  }
  std::erase_if(candidates, [&](const CandidateSubstitute& c) {
    return c.token == tokens[mask_position];
  });
  return candidates;
}

RemoteProvider::RemoteProvider(std::shared_ptr<protocol::ProtocolClient> client)
    : client_(std::move(client)) {}

std::vector<CandidateSubstitute> RemoteProvider::Propose(
    std::span<const std::string> tokens, std::size_t position,
    std::size_t k) const {
  return RemoteCandidates(*client_, tokens, position, k);
}

}  // namespace advtext
