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

#ifndef ADVTEXT_HARNESS_COMPONENTS_H_
#define ADVTEXT_HARNESS_COMPONENTS_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "advtext/providers/provider.h"
#include "advtext/scoring/semantic.h"
#include "advtext/victims/victim.h"

namespace advtext {

// Component specs used on the command line and in config files.
//
//   victim    builtin:<model file> | remote:<endpoint>
//   provider  embeddings:<vector file> | static:<synonym file> | remote:<endpoint>
//   scorer    overlap | embedding:<vector file> | remote:<endpoint>
//
// An endpoint is "http://host:port" or "stdio:<command>"; a bare endpoint
// is accepted in place of "remote:<endpoint>". "remote" alone uses the
// ADVTEXT_SERVER environment variable.
//
// Malformed specs throw Error(kUsage); unreadable files Error(kIo) or
// Error(kFormat).
std::unique_ptr<Victim> MakeVictim(std::string_view spec);
std::shared_ptr<const SubstituteProvider> MakeProvider(std::string_view spec);
std::shared_ptr<const SemanticScorer> MakeScorer(std::string_view spec);

// "remote:<endpoint>" when ADVTEXT_SERVER is set, else nothing.
std::optional<std::string> DefaultRemoteSpec();

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_COMPONENTS_H_
