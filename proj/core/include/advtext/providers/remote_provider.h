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

#ifndef ADVTEXT_PROVIDERS_REMOTE_PROVIDER_H_
#define ADVTEXT_PROVIDERS_REMOTE_PROVIDER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "advtext/protocol/client.h"
#include "advtext/providers/provider.h"

namespace advtext {

// Masked-LM infill delegated to a protocol server. Server order is kept; the
// slot's own token is dropped if the server echoes it.
// Throws Error(kValidation) for k == 0 or an out-of-range mask position
// (nothing is sent), Error(kProviderUnavailable) on transport failure,
// Error(kProtocol) for malformed replies.
std::vector<CandidateSubstitute> RemoteCandidates(
    protocol::ProtocolClient& client, std::span<const std::string> tokens,
    std::size_t mask_position, std::size_t k);

class RemoteProvider : public SubstituteProvider {
 public:
  explicit RemoteProvider(std::shared_ptr<protocol::ProtocolClient> client);

  std::vector<CandidateSubstitute> Propose(std::span<const std::string> tokens,
                                           std::size_t position,
                                           std::size_t k) const override;
  std::string name() const override { return "remote"; }

 private:
  std::shared_ptr<protocol::ProtocolClient> client_;
};

}  // namespace advtext

#endif  // ADVTEXT_PROVIDERS_REMOTE_PROVIDER_H_
