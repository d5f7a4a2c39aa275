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

#ifndef ADVTEXT_VICTIMS_REMOTE_VICTIM_H_
#define ADVTEXT_VICTIMS_REMOTE_VICTIM_H_

#include <memory>
#include <string>

#include "advtext/protocol/client.h"
#include "advtext/victims/victim.h"

namespace advtext {

// Victim served over the wire protocol. Transport failures surface as
// Error(kVictimUnavailable); a retried batch is charged twice.
class RemoteVictim : public Victim {
 public:
  RemoteVictim(std::shared_ptr<protocol::ProtocolClient> client,
               std::string endpoint_name,
               std::size_t batch_limit = kDefaultBatchLimit);

  std::string name() const override { return "remote:" + endpoint_name_; }

 protected:
  std::vector<VictimScores> ClassifyBatch(std::span<const std::string> texts,
                                          std::uint64_t& charged) override;

 private:
  std::shared_ptr<protocol::ProtocolClient> client_;
  std::string endpoint_name_;
};

}  // namespace advtext

#endif  // ADVTEXT_VICTIMS_REMOTE_VICTIM_H_
