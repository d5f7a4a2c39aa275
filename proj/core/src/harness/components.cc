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

#include "advtext/harness/components.h"

#include <cstdlib>

#include "advtext/core/error.h"
#include "advtext/protocol/client.h"
#include "advtext/protocol/transport.h"
#include "advtext/providers/embeddings.h"
#include "advtext/providers/remote_provider.h"
#include "advtext/providers/static_table.h"
#include "advtext/victims/linear_victim.h"
#include "advtext/victims/remote_victim.h"

namespace advtext {
namespace {

struct Spec {
  std::string kind;
  std::string arg;
};

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

Spec Parse(std::string_view spec, std::string_view what) {
  if (StartsWith(spec, "http://") || StartsWith(spec, "https://") ||
      StartsWith(spec, "stdio:")) {
    return {"remote", std::string(spec)};
  }
  const std::size_t colon = spec.find(':');
  Spec s{std::string(spec.substr(0, colon)),
         colon == std::string_view::npos ? "" : std::string(spec.substr(colon + 1))};
  if (s.kind == "remote" && s.arg.empty()) {
    const char* env = std::getenv(protocol::kServerEnvVar);
    if (!env || !*env) {
      throw Error(ErrorCode::kUsage, std::string(what) + " spec 'remote' needs an endpoint or " +
                                         protocol::kServerEnvVar);
    }
    s.arg = env;
  }
  return s;
}

std::shared_ptr<protocol::ProtocolClient> Client(const std::string& endpoint) {
  return std::make_shared<protocol::ProtocolClient>(protocol::MakeTransport(endpoint));
}

[[noreturn]] void BadSpec(std::string_view what, std::string_view spec,
                          std::string_view expected) {
  throw Error(ErrorCode::kUsage, "bad " + std::string(what) + " spec '" + std::string(spec) +
                                     "'; expected " + std::string(expected));
}

}  // namespace

std::unique_ptr<Victim> MakeVictim(std::string_view spec) {
  const Spec s = Parse(spec, "victim");
  if (s.kind == "builtin" && !s.arg.empty()) {
    auto model = std::make_shared<const LinearVictimModel>(LinearVictimModel::LoadFile(s.arg));
    return std::make_unique<LinearVictim>(std::move(model));
  }
  if (s.kind == "remote") return std::make_unique<RemoteVictim>(Client(s.arg), s.arg);
  BadSpec("victim", spec, "builtin:<model> or remote:<endpoint>");
}

std::shared_ptr<const SubstituteProvider> MakeProvider(std::string_view spec) {
  const Spec s = Parse(spec, "provider");
  if (s.kind == "embeddings" && !s.arg.empty()) {
    return std::make_shared<EmbeddingProvider>(
        std::make_shared<const EmbeddingTable>(LoadEmbeddings(std::filesystem::path(s.arg))));
  }
  if (s.kind == "static" && !s.arg.empty()) {
    return std::make_shared<StaticProvider>(
        std::make_shared<const SynonymTable>(LoadSynonymTable(std::filesystem::path(s.arg))));
  }
  if (s.kind == "remote") return std::make_shared<RemoteProvider>(Client(s.arg));
  BadSpec("provider", spec, "embeddings:<file>, static:<file> or remote:<endpoint>");
}

std::shared_ptr<const SemanticScorer> MakeScorer(std::string_view spec) {
  if (spec.empty() || spec == "overlap") return std::make_shared<TokenOverlapScorer>();
  const Spec s = Parse(spec, "scorer");
  if (s.kind == "embedding" && !s.arg.empty()) {
    return std::make_shared<EmbeddingCosineScorer>(
        std::make_shared<const EmbeddingTable>(LoadEmbeddings(std::filesystem::path(s.arg))));
  }
  if (s.kind == "remote") return std::make_shared<RemoteScorer>(Client(s.arg));
  BadSpec("scorer", spec, "overlap, embedding:<file> or remote:<endpoint>");
}

std::optional<std::string> DefaultRemoteSpec() {
  const char* env = std::getenv(protocol::kServerEnvVar);
  if (!env || !*env) return std::nullopt;
  return "remote:" + std::string(env);
}

}  // namespace advtext
