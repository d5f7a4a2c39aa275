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

#ifndef ADVTEXT_PROTOCOL_TRANSPORT_H_
#define ADVTEXT_PROTOCOL_TRANSPORT_H_

#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "advtext/protocol/message.h"

namespace advtext::protocol {

// Moves one request line to a server and brings back the reply line carrying
// the same id. Implementations are safe to call from several threads.
// Failures to reach the server throw Error(kTransport).
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string Exchange(MessageKind kind, const std::string& id,
                               const std::string& line) = 0;
};

struct HttpOptions {
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{120000};
};

// POSTs each line to <base_url>/v1/<kind>; the reply body is one line.
std::unique_ptr<Transport> MakeHttpTransport(std::string base_url,
                                             HttpOptions options = {});

// Line stream over a pair of file descriptors, typically the stdin/stdout of
// a server process.
//
// In kPipelined mode any number of callers may have requests in flight; a
// reader thread routes each reply to its caller by id, so the server may
// answer out of order. kSerialized holds a lock across write + read for
// servers that handle one request at a time.
class StdioTransport : public Transport {
 public:
  enum class Mode { kPipelined, kSerialized };

  // Takes ownership of both descriptors.
  StdioTransport(int read_fd, int write_fd, Mode mode,
                 std::chrono::milliseconds timeout = std::chrono::minutes(2));
  ~StdioTransport() override;

  StdioTransport(const StdioTransport&) = delete;
  StdioTransport& operator=(const StdioTransport&) = delete;

  // Runs |command| under /bin/sh and speaks the protocol over its stdio.
  static std::unique_ptr<StdioTransport> Spawn(const std::string& command,
                                               Mode mode = Mode::kPipelined);

  std::string Exchange(MessageKind kind, const std::string& id,
                       const std::string& line) override;

 private:
  void ReaderLoop();
  void WriteAll(const std::string& line);
  std::optional<std::string> ReadLine();

  int read_fd_;
  int write_fd_;
  Mode mode_;
  std::chrono::milliseconds timeout_;
  int child_pid_ = -1;
  std::string read_buffer_;

  std::mutex write_mu_;
  std::mutex serial_mu_;

  std::mutex pending_mu_;
  std::condition_variable pending_cv_;
  std::map<std::string, std::optional<std::string>> pending_;
  bool closed_ = false;

  std::thread reader_;
};

// Builds a transport from an endpoint string:
//   http://host:port         HTTP framing
//   stdio:<shell command>    spawned server speaking the line framing
// Throws Error(kUsage) for anything else.
std::unique_ptr<Transport> MakeTransport(const std::string& endpoint);

// Name of the environment variable holding the default server endpoint.
inline constexpr const char* kServerEnvVar = "ADVTEXT_SERVER";

}  // namespace advtext::protocol

#endif  // ADVTEXT_PROTOCOL_TRANSPORT_H_
