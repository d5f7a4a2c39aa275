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

#include "advtext/protocol/client.h"

#include "advtext/core/error.h"

namespace advtext::protocol {

ProtocolClient::ProtocolClient(std::unique_ptr<Transport> transport,
                               ClientOptions options)
    : transport_(std::move(transport)), options_(options) {}

ReplyBody ProtocolClient::Call(const RequestPayload& payload, int* attempts) {
  const MessageKind kind = KindOf(payload);
  Request request{"req-" + std::to_string(next_id_.fetch_add(1)), payload};
  const std::string line = EncodeRequest(request);

  std::string reply;
  int tries = 0;
  while (true) {
    ++tries;
    try {
      reply = transport_->Exchange(kind, request.id, line);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTransport || tries > options_.retries) {
        if (attempts) *attempts = tries;
        throw;
      }
    }
  }
  if (attempts) *attempts = tries;

  Response response = ParseResponse(kind, reply);
  if (!response.id.empty() && response.id != request.id) {
    throw Error(ErrorCode::kProtocol, "reply id '" + response.id +
                                          "' does not match request id '" +
                                          request.id + "'");
  }
  if (const auto* err = std::get_if<ErrorReply>(&response.body)) {
    throw Error(ErrorCode::kRemote, err->message, err->code);
  }
  return std::move(response.body);
}

std::vector<VictimScores> ProtocolClient::Classify(
    const std::vector<std::string>& texts, int* attempts) {
  auto body = Call(ClassifyRequest{texts}, attempts);
  auto& reply = std::get<ClassifyReply>(body);
  if (reply.scores.size() != texts.size()) {
    throw Error(ErrorCode::kProtocol,
                "classify reply has " + std::to_string(reply.scores.size()) +
                    " rows for " + std::to_string(texts.size()) + " texts");
  }
  return std::move(reply.scores);
}

std::vector<CandidateSubstitute> ProtocolClient::Substitutes(
    const std::vector<std::string>& tokens, std::int64_t mask_position,
    std::int64_t k) {
  auto body = Call(SubstitutesRequest{tokens, mask_position, k});
  auto& reply = std::get<SubstitutesReply>(body);
  if (static_cast<std::int64_t>(reply.candidates.size()) > k) {
    throw Error(ErrorCode::kProtocol, "server returned more than k candidates");
  }
  return std::move(reply.candidates);
}

double ProtocolClient::Semantic(const std::string& a, const std::string& b) {
  return std::get<SemanticReply>(Call(SemanticRequest{a, b})).score;
}

}  // namespace advtext::protocol
