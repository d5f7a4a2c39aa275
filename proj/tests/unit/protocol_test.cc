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

#include <gtest/gtest.h>

#include <future>

#include "advtext/protocol/client.h"
#include "advtext/protocol/message.h"
#include "advtext/providers/remote_provider.h"
#include "advtext/scoring/semantic.h"
#include "advtext/victims/remote_victim.h"
#include "error_code.h"
#include "stub_server.h"

namespace advtext {
namespace {

using namespace protocol;
using testing::ScriptedModel;
using testing::StubHttpServer;
using testing::StubStdioServer;
using testing::Typed;

TEST(Message, RequestBytes) {
  EXPECT_EQ(EncodeRequest({"req-1", ClassifyRequest{{"Officials confirmed it."}}}),
            R"({"id":"req-1","kind":"classify","payload":{"texts":["Officials confirmed it."]},"version":"1"})"
            "\n");
  EXPECT_EQ(EncodeRequest({"req-2", SubstitutesRequest{{"a", "[MASK]", "day"}, 1, 3}}),
            R"({"id":"req-2","kind":"substitutes","payload":{"k":3,"mask_position":1,"tokens":["a","[MASK]","day"]},"version":"1"})"
            "\n");
  EXPECT_EQ(EncodeRequest({"req-3", SemanticRequest{"x", "y"}}),
            R"({"id":"req-3","kind":"semantic","payload":{"a":"x","b":"y"},"version":"1"})"
            "\n");
}

TEST(Message, ResponseBytes) {
  EXPECT_EQ(EncodeResponse({"req-1", MessageKind::kClassify, ClassifyReply{{{0.25, 0.75}}}}),
            R"({"id":"req-1","kind":"classify","payload":{"scores":[[0.25,0.75]]},"version":"1"})"
            "\n");
  EXPECT_EQ(EncodeResponse({"req-2", MessageKind::kSubstitutes,
                            SubstitutesReply{{{"fine", 0.5}}}}),
            R"({"id":"req-2","kind":"substitutes","payload":{"candidates":[["fine",0.5]]},"version":"1"})"
            "\n");
  EXPECT_EQ(EncodeResponse({"req-4", MessageKind::kClassify, ErrorReply{"overloaded", "busy"}}),
            R"({"error":"overloaded","id":"req-4","kind":"classify","message":"busy","version":"1"})"
            "\n");
}

TEST(Message, RequestRoundTrip) {
  const Request r{"abc", SubstitutesRequest{{"x", "y"}, 0, 5}};
  EXPECT_EQ(DecodeRequest(EncodeRequest(r)), r);
  const Request s{"d", SemanticRequest{"caf\xC3\xA9", "\"quoted\"\n"}};
  EXPECT_EQ(DecodeRequest(EncodeRequest(s)), s);
}

TEST(Message, RequestValidation) {
  EXPECT_ADVTEXT_ERROR(EncodeRequest({"1", ClassifyRequest{}}), ErrorCode::kValidation);
  EXPECT_ADVTEXT_ERROR(EncodeRequest({"1", SubstitutesRequest{{"a"}, 1, 1}}),
                       ErrorCode::kValidation);
  EXPECT_ADVTEXT_ERROR(EncodeRequest({"1", SubstitutesRequest{{"a"}, 0, 0}}),
                       ErrorCode::kValidation);
  EXPECT_ADVTEXT_ERROR(DecodeRequest("{not json"), ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(
      DecodeRequest(R"({"id":"1","kind":"classify","payload":{"texts":["a"]},"version":"2"})"),
      ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(
      DecodeRequest(R"({"id":"1","kind":"nope","payload":{},"version":"1"})"),
      ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(
      DecodeRequest(R"({"id":"1","kind":"substitutes","payload":{"tokens":["a"],"mask_position":3,"k":1},"version":"1"})"),
      ErrorCode::kProtocol);
}

TEST(Message, ResponseBounds) {
  // A bare payload is accepted.
  const Response bare = ParseResponse(MessageKind::kSemantic, R"({"score":0.5})");
  EXPECT_EQ(std::get<SemanticReply>(bare.body).score, 0.5);
  EXPECT_TRUE(bare.id.empty());
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kClassify, R"({"scores":[[0.5,0.6]]})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kClassify, R"({"scores":[[-0.5,1.5]]})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kClassify, R"({"scores":[[1.0]]})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kSemantic, R"({"score":1.01})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kSubstitutes, R"({"candidates":[["x",2]]})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(ParseResponse(MessageKind::kSubstitutes, R"({"candidates":[["",0.2]]})"),
                       ErrorCode::kProtocol);
  EXPECT_ADVTEXT_ERROR(
      ParseResponse(MessageKind::kSemantic, R"({"id":"1","kind":"classify","payload":{"score":0.1},"version":"1"})"),
      ErrorCode::kProtocol);
  // Within the tolerance.
  EXPECT_NO_THROW(ParseResponse(MessageKind::kClassify, R"({"scores":[[0.3,0.7000000001]]})"));
}

TEST(Message, ErrorRepliesMapToRemote) {
  try {
    DecodeResponse(MessageKind::kClassify, R"({"error":"model_missing","message":"no model"})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRemote);
    EXPECT_EQ(e.remote_code(), "model_missing");
  }
}

TEST(HttpFraming, RoundTripAndPaths) {
  StubHttpServer server(Typed(ScriptedModel));
  ProtocolClient client(MakeHttpTransport(server.url()));
  const auto scores = client.Classify({"a fake story", "plain news"});
  ASSERT_EQ(scores.size(), 2u);
  EXPECT_GT(scores[0].p_noncredible, scores[1].p_noncredible);
  EXPECT_EQ(client.Substitutes({"a", "b"}, 1, 2).size(), 2u);
  EXPECT_EQ(client.Semantic("x", "y"), 0.5);
  const auto got = server.received();
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].first, "/v1/classify");
  EXPECT_EQ(got[1].first, "/v1/substitutes");
  EXPECT_EQ(got[2].first, "/v1/semantic");
  EXPECT_EQ(got[2].second,
            R"({"id":"req-3","kind":"semantic","payload":{"a":"x","b":"y"},"version":"1"})"
            "\n");
}

TEST(HttpFraming, MismatchedIdOrCountIsAProtocolError) {
  StubHttpServer wrong_id([](const std::string&) {
    return std::string(R"({"id":"other","payload":{"score":0.5},"version":"1"})");
  });
  ProtocolClient a(MakeHttpTransport(wrong_id.url()));
  EXPECT_ADVTEXT_ERROR(a.Semantic("x", "y"), ErrorCode::kProtocol);

  StubHttpServer short_reply([](const std::string&) {
    return std::string(R"({"scores":[[0.5,0.5]]})");
  });
  ProtocolClient b(MakeHttpTransport(short_reply.url()));
  EXPECT_ADVTEXT_ERROR(b.Classify({"x", "y"}), ErrorCode::kProtocol);

  StubHttpServer too_many([](const std::string&) {
    return std::string(R"({"candidates":[["a",0.5],["b",0.4]]})");
  });
  ProtocolClient c(MakeHttpTransport(too_many.url()));
  EXPECT_ADVTEXT_ERROR(c.Substitutes({"x"}, 0, 1), ErrorCode::kProtocol);
}

TEST(HttpFraming, ErrorReplyAndUnreachableServer) {
  StubHttpServer failing(Typed([](const Request&) -> ReplyBody {
    return ErrorReply{"overloaded", "try later"};
  }));
  RemoteVictim victim(std::make_shared<ProtocolClient>(MakeHttpTransport(failing.url())),
                      failing.url());
  try {
    victim.ClassifyOne("x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRemote);
    EXPECT_EQ(e.remote_code(), "overloaded");
  }

  // Nothing listens on port 1.
  HttpOptions quick;
  quick.connect_timeout = std::chrono::milliseconds(200);
  auto client = std::make_shared<ProtocolClient>(MakeHttpTransport("http://127.0.0.1:1", quick));
  int attempts = 0;
  EXPECT_ADVTEXT_ERROR(client->Classify({"x"}, &attempts), ErrorCode::kTransport);
  EXPECT_EQ(attempts, 2);

  RemoteVictim down(client, "down");
  EXPECT_ADVTEXT_ERROR(down.ClassifyOne("x"), ErrorCode::kVictimUnavailable);
  EXPECT_EQ(down.queries(), 2u);  // the retried text is charged twice
  RemoteProvider provider(client);
  const std::vector<std::string> tokens{"a"};
  EXPECT_ADVTEXT_ERROR(provider.Propose(tokens, 0, 2), ErrorCode::kProviderUnavailable);
  RemoteScorer scorer(client);
  EXPECT_ADVTEXT_ERROR(scorer.Score("a", "b"), ErrorCode::kScorerUnavailable);
  EXPECT_DOUBLE_EQ(scorer.Score("same", "same"), 1.0);  // no call needed
}

TEST(StdioFraming, RoundTrip) {
  StubStdioServer server(Typed(ScriptedModel));
  {
    ProtocolClient client(server.TakeTransport());
    EXPECT_EQ(client.Classify({"hoax"}).size(), 1u);
    EXPECT_EQ(client.Semantic("a", "a"), 1.0);
  }
  const auto got = server.received();
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0],
            R"({"id":"req-1","kind":"classify","payload":{"texts":["hoax"]},"version":"1"})"
            "\n");
}

TEST(StdioFraming, OutOfOrderRepliesReachTheirCallers) {
  StubStdioServer server(Typed(ScriptedModel), 4);
  {
    ProtocolClient client(server.TakeTransport());
    std::vector<std::future<double>> calls;
    const std::vector<std::string> texts{"fake", "plain", "hoax hoax", "news story"};
    for (const auto& t : texts) {
      calls.push_back(std::async(std::launch::async, [&client, t] {
        return client.Classify({t})[0].p_noncredible;
      }));
    }
    std::vector<double> got;
    for (auto& c : calls) got.push_back(c.get());
    for (std::size_t i = 0; i < texts.size(); ++i) {
      const auto want = std::get<ClassifyReply>(ScriptedModel({"", ClassifyRequest{{texts[i]}}}));
      EXPECT_DOUBLE_EQ(got[i], want.scores[0].p_noncredible) << texts[i];
    }
  }
}

TEST(StdioFraming, SerializedMode) {
  StubStdioServer server(Typed(ScriptedModel));
  ProtocolClient client(server.TakeTransport(StdioTransport::Mode::kSerialized));
  EXPECT_EQ(client.Substitutes({"x", "y"}, 0, 3).size(), 3u);
}

TEST(StdioFraming, SpawnedServer) {
  // A one-line server: answers every request with a semantic score of 0.75.
  const std::string cmd =
      R"sh(stdio:sed -u 's/.*"id":"\([^"]*\)".*/{"id":"\1","payload":{"score":0.75},"version":"1"}/')sh";
  ProtocolClient client(MakeTransport(cmd));
  EXPECT_DOUBLE_EQ(client.Semantic("a", "b"), 0.75);
  EXPECT_DOUBLE_EQ(client.Semantic("c", "d"), 0.75);
}

TEST(StdioFraming, ClosedServerIsATransportError) {
  ProtocolClient client(MakeTransport("stdio:true"), ClientOptions{0});
  EXPECT_ADVTEXT_ERROR(client.Semantic("a", "b"), ErrorCode::kTransport);
}

TEST(Endpoints, UnknownSchemeIsUsageError) {
  EXPECT_ADVTEXT_ERROR(MakeTransport("ftp://host"), ErrorCode::kUsage);
}

TEST(RemoteProvider, DropsEchoAndValidatesLocally) {
  StubHttpServer server(Typed([](const Request&) -> ReplyBody {
    return SubstitutesReply{{{"same", 0.9}, {"other", 0.8}}};
  }));
  RemoteProvider provider(std::make_shared<ProtocolClient>(MakeHttpTransport(server.url())));
  const std::vector<std::string> tokens{"same", "word"};
  const auto c = provider.Propose(tokens, 0, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].token, "other");
  EXPECT_ADVTEXT_ERROR(provider.Propose(tokens, 0, 0), ErrorCode::kValidation);
  EXPECT_ADVTEXT_ERROR(provider.Propose(tokens, 5, 1), ErrorCode::kValidation);
  EXPECT_EQ(server.received().size(), 1u);
}

TEST(RemoteScorer, AlignsSentences) {
  StubHttpServer server(Typed([](const Request& r) -> ReplyBody {
    const auto& s = std::get<SemanticRequest>(r.payload);
    return SemanticReply{s.a.size() == s.b.size() ? 0.8 : 0.2};
  }));
  RemoteScorer scorer(std::make_shared<ProtocolClient>(MakeHttpTransport(server.url())));
  // Second sentence identical: (0.8 + 1) / 2 with a single call.
  EXPECT_DOUBLE_EQ(scorer.Score("Cats nap. Dogs run.", "Rats nap. Dogs run."), 0.9);
  EXPECT_EQ(server.received().size(), 1u);
  // Different sentence counts: one call on the whole texts.
  EXPECT_DOUBLE_EQ(scorer.Score("One. Two.", "One two three"), 0.2);
  EXPECT_EQ(server.received().size(), 2u);
}

}  // namespace
}  // namespace advtext
