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

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

#include "advtext/core/error.h"
#include "advtext/protocol/transport.h"
#include "json.hpp"

namespace advtext::protocol {
namespace {

[[noreturn]] void TransportFailure(const std::string& what) {
  throw Error(ErrorCode::kTransport, what);
}

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

// Reply ids are read without validating the rest of the message; the
// client does full decoding.
std::optional<std::string> ReplyId(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  const auto it = j.find("id");
  if (it == j.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

StdioTransport::StdioTransport(int read_fd, int write_fd, Mode mode,
                               std::chrono::milliseconds timeout)
    : read_fd_(read_fd), write_fd_(write_fd), mode_(mode), timeout_(timeout) {
  IgnoreSigpipe();
  if (mode_ == Mode::kPipelined) {
    reader_ = std::thread([this] { ReaderLoop(); });
  }
}

StdioTransport::~StdioTransport() {
  if (write_fd_ >= 0) ::close(write_fd_);
  if (reader_.joinable()) reader_.join();
  if (read_fd_ >= 0) ::close(read_fd_);
  if (child_pid_ > 0) {
    int status = 0;
    ::waitpid(child_pid_, &status, 0);
  }
}

std::unique_ptr<StdioTransport> StdioTransport::Spawn(
    const std::string& command, Mode mode) {
  IgnoreSigpipe();
  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0) TransportFailure("pipe() failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    TransportFailure("pipe() failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) TransportFailure("fork() failed");
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  ::fcntl(to_child[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(from_child[0], F_SETFD, FD_CLOEXEC);
  auto transport =
      std::make_unique<StdioTransport>(from_child[0], to_child[1], mode);
  transport->child_pid_ = pid;
  return transport;
}

void StdioTransport::WriteAll(const std::string& line) {
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n =
        ::write(write_fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      TransportFailure(std::string("write failed: ") + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> StdioTransport::ReadLine() {
  while (true) {
    const std::size_t nl = read_buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = read_buffer_.substr(0, nl + 1);
      read_buffer_.erase(0, nl + 1);
      return line;
    }
    char chunk[4096];
    const ssize_t n = ::read(read_fd_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return std::nullopt;
    read_buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void StdioTransport::ReaderLoop() {
  while (auto line = ReadLine()) {
    const auto id = ReplyId(*line);
    if (!id) continue;
    std::lock_guard lock(pending_mu_);
    auto it = pending_.find(*id);
    if (it != pending_.end() && !it->second) {
      it->second = std::move(*line);
      pending_cv_.notify_all();
    }
  }
  std::lock_guard lock(pending_mu_);
  closed_ = true;
  pending_cv_.notify_all();
}

std::string StdioTransport::Exchange(MessageKind /*kind*/,
                                     const std::string& id,
                                     const std::string& line) {
  if (mode_ == Mode::kSerialized) {
    std::lock_guard lock(serial_mu_);
    WriteAll(line);
    auto reply = ReadLine();
    if (!reply) TransportFailure("server closed the stream");
    return *reply;
  }

  {
    std::lock_guard lock(pending_mu_);
    if (closed_) TransportFailure("server closed the stream");
    if (!pending_.emplace(id, std::nullopt).second) {
      TransportFailure("duplicate request id '" + id + "'");
    }
  }
  try {
    std::lock_guard lock(write_mu_);
    WriteAll(line);
  } catch (...) {
    std::lock_guard lock(pending_mu_);
    pending_.erase(id);
    throw;
  }

  std::unique_lock lock(pending_mu_);
  const bool ready = pending_cv_.wait_for(lock, timeout_, [&] {
    return pending_.at(id).has_value() || closed_;
  });
  auto node = pending_.extract(id);
  if (node.mapped()) return std::move(*node.mapped());
  TransportFailure(ready ? "server closed the stream"
                         : "timed out waiting for reply '" + id + "'");
}

}  // namespace advtext::protocol
