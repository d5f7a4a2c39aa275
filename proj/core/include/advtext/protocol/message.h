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

#ifndef ADVTEXT_PROTOCOL_MESSAGE_H_
#define ADVTEXT_PROTOCOL_MESSAGE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "advtext/core/types.h"

// Newline-delimited JSON messages exchanged with remote victims, substitute
// providers and semantic scorers. docs/protocol.md is the byte-level
// reference; everything here must stay in sync with it.
namespace advtext::protocol {

inline constexpr std::string_view kVersion = "1";

// Probabilities in a classify reply must sum to 1 within this tolerance.
inline constexpr double kProbabilitySumTolerance = 1e-6;

enum class MessageKind { kClassify, kSubstitutes, kSemantic };

std::string_view MessageKindName(MessageKind kind);
std::optional<MessageKind> MessageKindFromName(std::string_view name);

struct ClassifyRequest {
  std::vector<std::string> texts;
  friend bool operator==(const ClassifyRequest&,
                         const ClassifyRequest&) = default;
};

struct SubstitutesRequest {
  std::vector<std::string> tokens;
  std::int64_t mask_position = 0;
  std::int64_t k = 0;
  friend bool operator==(const SubstitutesRequest&,
                         const SubstitutesRequest&) = default;
};

struct SemanticRequest {
  std::string a;
  std::string b;
  friend bool operator==(const SemanticRequest&,
                         const SemanticRequest&) = default;
};

using RequestPayload =
    std::variant<ClassifyRequest, SubstitutesRequest, SemanticRequest>;

struct Request {
  std::string id;
  RequestPayload payload;
  friend bool operator==(const Request&, const Request&) = default;
};

MessageKind KindOf(const RequestPayload& payload);

struct ClassifyReply {
  std::vector<VictimScores> scores;
  friend bool operator==(const ClassifyReply&, const ClassifyReply&) = default;
};

struct SubstitutesReply {
  std::vector<CandidateSubstitute> candidates;
  friend bool operator==(const SubstitutesReply&,
                         const SubstitutesReply&) = default;
};

struct SemanticReply {
  double score = 0.0;
  friend bool operator==(const SemanticReply&, const SemanticReply&) = default;
};

struct ErrorReply {
  std::string code;
  std::string message;
  friend bool operator==(const ErrorReply&, const ErrorReply&) = default;
};

using ReplyBody =
    std::variant<ClassifyReply, SubstitutesReply, SemanticReply, ErrorReply>;

struct Response {
  std::string id;
  MessageKind kind = MessageKind::kClassify;
  ReplyBody body;
  friend bool operator==(const Response&, const Response&) = default;
};

// Throws Error(kValidation) when the payload violates its schema.
void ValidateRequest(const RequestPayload& payload);

// One JSON object terminated by '\n'. Validates first; an invalid payload is
// never encoded.
std::string EncodeRequest(const Request& request);
// Throws Error(kProtocol) on malformed JSON or schema violations.
Request DecodeRequest(std::string_view line);

std::string EncodeResponse(const Response& response);

// Parses a reply line without interpreting error replies. Accepts either a
// full envelope ({"version","id","kind","payload"|"error"}) or a bare payload
// / error object. |kind| selects the payload schema.
// Throws Error(kProtocol) on malformed JSON, a version mismatch, or bounds
// violations (probabilities not summing to 1, scores outside [0, 1]).
Response ParseResponse(MessageKind kind, std::string_view line);

// ParseResponse, then maps an error reply to Error(kRemote) carrying the
// server's error code.
ReplyBody DecodeResponse(MessageKind kind, std::string_view line);

}  // namespace advtext::protocol

#endif  // ADVTEXT_PROTOCOL_MESSAGE_H_
