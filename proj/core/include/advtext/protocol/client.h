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

#ifndef ADVTEXT_PROTOCOL_CLIENT_H_
#define ADVTEXT_PROTOCOL_CLIENT_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "advtext/protocol/message.h"
#include "advtext/protocol/transport.h"

namespace advtext::protocol {

struct ClientOptions {
  // Transport failures are retried this many times before giving up.
  int retries = 1;
};

// Typed calls over a Transport. Concurrent calls are independent; each gets
// its own request id and the reply id is checked against it.
//
// Errors: Error(kValidation) before sending an invalid payload,
// Error(kTransport) after retries are exhausted, Error(kProtocol) for
// malformed or mismatched replies, Error(kRemote) for server error replies.
class ProtocolClient {
 public:
  explicit ProtocolClient(std::unique_ptr<Transport> transport,
                          ClientOptions options = {});

  // |attempts|, when given, receives the number of transport attempts made
  // (1 + retries used).
  std::vector<VictimScores> Classify(const std::vector<std::string>& texts,
                                     int* attempts = nullptr);
  std::vector<CandidateSubstitute> Substitutes(
      const std::vector<std::string>& tokens, std::int64_t mask_position,
      std::int64_t k);
  double Semantic(const std::string& a, const std::string& b);

  ReplyBody Call(const RequestPayload& payload, int* attempts = nullptr);

 private:
  std::unique_ptr<Transport> transport_;
  ClientOptions options_;
  std::atomic<std::uint64_t> next_id_{1};
};

}  // namespace advtext::protocol

#endif  // ADVTEXT_PROTOCOL_CLIENT_H_
