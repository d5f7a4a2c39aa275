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

#include "advtext/protocol/message.h"

#include <cmath>

#include "advtext/core/error.h"
#include "json.hpp"

namespace advtext::protocol {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kProtocol, what);
}

json Parse(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.find('\n') != std::string_view::npos) {
    Fail("message spans more than one line");
  }
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) Fail("malformed JSON");
  if (!j.is_object()) Fail("message is not a JSON object");
  return j;
}

const json& Field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) Fail(std::string("missing field '") + name + "'");
  return *it;
}

std::string StringField(const json& obj, const char* name) {
  const json& v = Field(obj, name);
  if (!v.is_string()) Fail(std::string("field '") + name + "' is not a string");
  return v.get<std::string>();
}

std::int64_t IntField(const json& obj, const char* name) {
  const json& v = Field(obj, name);
  if (!v.is_number_integer()) {
    Fail(std::string("field '") + name + "' is not an integer");
  }
  return v.get<std::int64_t>();
}

double Number(const json& v, const char* what) {
  if (!v.is_number()) Fail(std::string(what) + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail(std::string(what) + " is not finite");
  return d;
}

std::vector<std::string> StringArray(const json& obj, const char* name) {
  const json& v = Field(obj, name);
  if (!v.is_array()) Fail(std::string("field '") + name + "' is not an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_string()) Fail(std::string("'") + name + "' holds a non-string");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void CheckVersion(const json& envelope) {
  const std::string version = StringField(envelope, "version");
  if (version != kVersion) Fail("unsupported protocol version '" + version + "'");
}

json PayloadToJson(const RequestPayload& payload) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClassifyRequest>) {
          return json{{"texts", p.texts}};
        } else if constexpr (std::is_same_v<T, SubstitutesRequest>) {
          return json{{"tokens", p.tokens},
                      {"mask_position", p.mask_position},
                      {"k", p.k}};
        } else {
          return json{{"a", p.a}, {"b", p.b}};
        }
      },
      payload);
}

RequestPayload PayloadFromJson(MessageKind kind, const json& payload) {
  if (!payload.is_object()) Fail("payload is not an object");
  switch (kind) {
    case MessageKind::kClassify:
      return ClassifyRequest{StringArray(payload, "texts")};
    case MessageKind::kSubstitutes:
      return SubstitutesRequest{StringArray(payload, "tokens"),
                                IntField(payload, "mask_position"),
                                IntField(payload, "k")};
    case MessageKind::kSemantic:
      return SemanticRequest{StringField(payload, "a"),
                             StringField(payload, "b")};
  }
  Fail("unknown kind");
}

ClassifyReply ClassifyFromJson(const json& payload) {
  const json& rows = Field(payload, "scores");
  if (!rows.is_array()) Fail("'scores' is not an array");
  ClassifyReply reply;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2) {
      Fail("each score must be a [p_credible, p_noncredible] pair");
    }
    VictimScores s{Number(row[0], "p_credible"),
                   Number(row[1], "p_noncredible")};
    if (!IsValidScores(s, kProbabilitySumTolerance)) {
      Fail("probabilities must be non-negative and sum to 1");
    }
    reply.scores.push_back(s);
  }
  return reply;
}

SubstitutesReply SubstitutesFromJson(const json& payload) {
  const json& rows = Field(payload, "candidates");
  if (!rows.is_array()) Fail("'candidates' is not an array");
  SubstitutesReply reply;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_string()) {
      Fail("each candidate must be a [token, score] pair");
    }
    CandidateSubstitute c{row[0].get<std::string>(),
                          Number(row[1], "candidate score")};
    if (c.token.empty()) Fail("candidate token is empty");
    if (c.score < 0.0 || c.score > 1.0) Fail("candidate score outside [0, 1]");
    reply.candidates.push_back(std::move(c));
  }
  return reply;
}

SemanticReply SemanticFromJson(const json& payload) {
  const double score = Number(Field(payload, "score"), "semantic score");
  if (score < 0.0 || score > 1.0) Fail("semantic score outside [0, 1]");
  return SemanticReply{score};
}

json ReplyToJson(const ReplyBody& body) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClassifyReply>) {
          json rows = json::array();
          for (const auto& s : r.scores) {
            rows.push_back(json::array({s.p_credible, s.p_noncredible}));
          }
          return json{{"scores", rows}};
        } else if constexpr (std::is_same_v<T, SubstitutesReply>) {
          json rows = json::array();
          for (const auto& c : r.candidates) {
            rows.push_back(json::array({c.token, c.score}));
          }
          return json{{"candidates", rows}};
        } else if constexpr (std::is_same_v<T, SemanticReply>) {
          return json{{"score", r.score}};
        } else {
          return json{{"error", r.code}, {"message", r.message}};
        }
      },
      body);
}

}  // namespace

std::string_view MessageKindName(MessageKind kind) {
  switch (kind) {
    case MessageKind::kClassify: return "classify";
    case MessageKind::kSubstitutes: return "substitutes";
    case MessageKind::kSemantic: return "semantic";
  }
  return "classify";
}

std::optional<MessageKind> MessageKindFromName(std::string_view name) {
  if (name == "classify") return MessageKind::kClassify;
  if (name == "substitutes") return MessageKind::kSubstitutes;
  if (name == "semantic") return MessageKind::kSemantic;
  return std::nullopt;
}

MessageKind KindOf(const RequestPayload& payload) {
  return static_cast<MessageKind>(payload.index());
}

void ValidateRequest(const RequestPayload& payload) {
  const auto invalid = [](const std::string& what) {
    throw Error(ErrorCode::kValidation, what);
  };
  if (const auto* c = std::get_if<ClassifyRequest>(&payload)) {
    if (c->texts.empty()) invalid("classify request has no texts");
  } else if (const auto* s = std::get_if<SubstitutesRequest>(&payload)) {
    if (s->tokens.empty()) invalid("substitutes request has no tokens");
    if (s->mask_position < 0 ||
        s->mask_position >= static_cast<std::int64_t>(s->tokens.size())) {
      invalid("mask_position " + std::to_string(s->mask_position) +
              " outside [0, " + std::to_string(s->tokens.size()) + ")");
    }
    if (s->k < 1) invalid("k must be at least 1");
  }
}

std::string EncodeRequest(const Request& request) {
  ValidateRequest(request.payload);
  const json envelope{
      {"version", kVersion},
      {"kind", MessageKindName(KindOf(request.payload))},
      {"id", request.id},
      {"payload", PayloadToJson(request.payload)},
  };
  return envelope.dump() + "\n";
}

Request DecodeRequest(std::string_view line) {
  const json envelope = Parse(line);
  CheckVersion(envelope);
  const std::string kind_name = StringField(envelope, "kind");
  const auto kind = MessageKindFromName(kind_name);
  if (!kind) Fail("unknown kind '" + kind_name + "'");
  Request request{StringField(envelope, "id"),
                  PayloadFromJson(*kind, Field(envelope, "payload"))};
  try {
    ValidateRequest(request.payload);
  } catch (const Error& e) {
    Fail(e.what());
  }
  return request;
}

std::string EncodeResponse(const Response& response) {
  json envelope{
      {"version", kVersion},
      {"kind", MessageKindName(response.kind)},
      {"id", response.id},
  };
  json body = ReplyToJson(response.body);
  if (std::holds_alternative<ErrorReply>(response.body)) {
    envelope.update(body);
  } else {
    envelope["payload"] = std::move(body);
  }
  return envelope.dump() + "\n";
}

Response ParseResponse(MessageKind kind, std::string_view line) {
  const json j = Parse(line);
  Response response;
  response.kind = kind;
  const bool enveloped = j.contains("version") || j.contains("id");
  if (enveloped) {
    CheckVersion(j);
    response.id = StringField(j, "id");
    if (j.contains("kind")) {
      const auto k = MessageKindFromName(StringField(j, "kind"));
      if (!k || *k != kind) Fail("reply kind does not match request kind");
    }
  }
  if (j.contains("error")) {
    const json& code = j["error"];
    if (!code.is_string()) Fail("'error' is not a string");
    std::string message;
    if (j.contains("message") && j["message"].is_string()) {
      message = j["message"].get<std::string>();
    }
    response.body = ErrorReply{code.get<std::string>(), std::move(message)};
    return response;
  }
  const json& payload = enveloped ? Field(j, "payload") : j;
  if (!payload.is_object()) Fail("payload is not an object");
  switch (kind) {
    case MessageKind::kClassify:
      response.body = ClassifyFromJson(payload);
      break;
    case MessageKind::kSubstitutes:
      response.body = SubstitutesFromJson(payload);
      break;
    case MessageKind::kSemantic:
      response.body = SemanticFromJson(payload);
      break;
  }
  return response;
}

ReplyBody DecodeResponse(MessageKind kind, std::string_view line) {
  Response response = ParseResponse(kind, line);
  if (const auto* err = std::get_if<ErrorReply>(&response.body)) {
    throw Error(ErrorCode::kRemote, err->message, err->code);
  }
  return std::move(response.body);
}

}  // namespace advtext::protocol
