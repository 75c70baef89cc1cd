// Copyright 2026 The MapForge Authors
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

#include "mapforge/runner.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

extern char** environ;

namespace mapforge {
namespace {

constexpr std::size_t kStderrTailBytes = 4000;
constexpr auto kQuitGrace = std::chrono::seconds(2);

// Creates an empty temporary file from a mkstemps pattern and returns its
// path and open descriptor.
std::pair<std::filesystem::path, int> MakeTempFile(const std::string& stem,
                                                   const std::string& suffix) {
  std::string pattern =
      (std::filesystem::temp_directory_path() / (stem + "-XXXXXX" + suffix))
          .string();
  const int fd = ::mkstemps(pattern.data(), static_cast<int>(suffix.size()));
  if (fd < 0) {
    throw SpawnError("cannot create temporary file: " +
                     std::string(std::strerror(errno)));
  }
  ::fcntl(fd, F_SETFD, FD_CLOEXEC);
  return {pattern, fd};
}

void WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw SpawnError("cannot write candidate source: " +
                       std::string(std::strerror(errno)));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

bool ParseCoordLine(std::string_view line, CandidateRecord& out) {
  std::uint64_t v[3];
  int n = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    if (n == 3) return false;
    auto [next, ec] = std::from_chars(p, end, v[n]);
    if (ec != std::errc() || next == p) return false;
    ++n;
    p = next;
    if (p == end) break;
    if (*p != ' ' || p + 1 == end) return false;
    ++p;
  }
  if (n == 2) {
    out = CandidateRecord::Ok(Coord(v[0], v[1]));
  } else if (n == 3) {
    out = CandidateRecord::Ok(Coord(v[0], v[1], v[2]));
  } else {
    return false;
  }
  return true;
}

std::string Excerpt(std::string_view s) {
  constexpr std::size_t kMax = 120;
  std::string out(s.substr(0, kMax));
  if (s.size() > kMax) out += "...";
  return out;
}

}  // namespace

std::string_view RunnerStateName(Runner::State state) {
  switch (state) {
    case Runner::State::kIdle: return "Idle";
    case Runner::State::kBusy: return "Busy";
    case Runner::State::kDead: return "Dead";
  }
  return "?";
}

std::variant<Runner, CandidateVerdict> Runner::Spawn(
    const WorkerCommand& command, std::string_view source,
    const RunnerLimits& limits) {
  if (command.argv.empty()) throw InvalidArgument("worker command is empty");
  if (source.empty()) throw InvalidArgument("candidate source is empty");
  if (!(limits.timeout_seconds > 0) || limits.batch_size == 0) {
    throw InvalidArgument("runner limits must be positive");
  }

  Runner runner;
  runner.limits_ = limits;
  runner.deadline_ =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(limits.timeout_seconds));

  auto [source_path, source_fd] = MakeTempFile("mapforge-candidate", ".py");
  runner.source_path_ = source_path;
  try {
    WriteAll(source_fd, source);
  } catch (...) {
    ::close(source_fd);
    throw;
  }
  ::close(source_fd);
  auto [stderr_path, stderr_fd] = MakeTempFile("mapforge-worker", ".log");
  runner.stderr_path_ = stderr_path;

  int sv[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv) != 0) {
    ::close(stderr_fd);
    throw SpawnError("socketpair failed: " + std::string(std::strerror(errno)));
  }

  std::vector<std::string> args = command.argv;
  args.push_back(runner.source_path_.string());
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, sv[1], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, sv[1], STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, stderr_fd, STDERR_FILENO);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  sigset_t defaults;
  sigemptyset(&defaults);
  sigaddset(&defaults, SIGPIPE);
  posix_spawnattr_setsigdefault(&attr, &defaults);
  // Own process group, so a timeout kill also takes down anything the
  // candidate started.
  posix_spawnattr_setpgroup(&attr, 0);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP | POSIX_SPAWN_SETSIGDEF);

  pid_t pid = -1;
  const int rc = ::posix_spawnp(&pid, argv[0], &actions, &attr, argv.data(),
                                environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  ::close(sv[1]);
  ::close(stderr_fd);
  if (rc != 0) {
    ::close(sv[0]);
    throw SpawnError("cannot start worker '" + command.argv[0] +
                     "': " + std::strerror(rc));
  }
  runner.pid_ = pid;
  runner.fd_ = sv[0];
  runner.state_ = State::kIdle;

  std::string line;
  try {
    runner.SendLine("PING");
    if (!runner.ReadLine(line)) {
      std::string reason = runner.StderrTail();
      runner.Shutdown();
      if (reason.empty()) reason = "worker exited while loading the candidate";
      return CandidateVerdict::Failure(VerdictStatus::kNonCompiling, reason);
    }
  } catch (const RunnerError& e) {
    runner.Shutdown();
    return CandidateVerdict::Failure(e.status(), e.what());
  }
  if (line.starts_with("ERR ")) {
    runner.Shutdown();
    return CandidateVerdict::Failure(VerdictStatus::kNonCompiling,
                                     line.substr(4));
  }
  if (line != "PONG") {
    runner.Shutdown();
    return CandidateVerdict::Failure(
        VerdictStatus::kRuntimeFailure,
        "protocol violation: expected PONG, got '" + Excerpt(line) + "'");
  }
  return runner;
}

Runner::Runner(Runner&& other) noexcept { *this = std::move(other); }

Runner& Runner::operator=(Runner&& other) noexcept {
  if (this != &other) {
    Shutdown();
    pid_ = std::exchange(other.pid_, -1);
    fd_ = std::exchange(other.fd_, -1);
    state_ = std::exchange(other.state_, State::kDead);
    limits_ = other.limits_;
    deadline_ = other.deadline_;
    buffer_ = std::move(other.buffer_);
    source_path_ = std::move(other.source_path_);
    stderr_path_ = std::move(other.stderr_path_);
    other.source_path_.clear();
    other.stderr_path_.clear();
  }
  return *this;
}

Runner::~Runner() { Shutdown(); }

void Runner::Fail(VerdictStatus status, const std::string& message) {
  Kill();
  throw RunnerError(status, message);
}

void Runner::SendLine(const std::string& line) {
  std::string data = line + "\n";
  std::string_view rest = data;
  while (!rest.empty()) {
    const ssize_t n = ::send(fd_, rest.data(), rest.size(), MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      Fail(VerdictStatus::kRuntimeFailure,
           "worker is gone: " + std::string(std::strerror(errno)));
    }
    rest.remove_prefix(static_cast<std::size_t>(n));
  }
}

bool Runner::ReadLine(std::string& line) {
  while (true) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line.assign(buffer_, 0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline_) {
      Fail(VerdictStatus::kTimeout,
           "worker exceeded the " + std::to_string(limits_.timeout_seconds) +
               " s wall-clock budget");
    }
    const auto wait_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline_ - now)
            .count() + 1;
    pollfd pfd{fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(
                                          wait_ms, 1000LL * 60 * 60)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      Fail(VerdictStatus::kRuntimeFailure, "poll failed");
    }
    if (ready == 0) continue;
    char chunk[1 << 16];
    const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      if (errno == ECONNRESET) return false;
      Fail(VerdictStatus::kRuntimeFailure,
           "read failed: " + std::string(std::strerror(errno)));
    }
    if (n == 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void Runner::Ping() {
  if (state_ != State::kIdle) {
    throw RunnerError(VerdictStatus::kRuntimeFailure,
                      "worker is " + std::string(RunnerStateName(state_)));
  }
  state_ = State::kBusy;
  SendLine("PING");
  std::string line;
  if (!ReadLine(line)) {
    Fail(VerdictStatus::kRuntimeFailure, "worker died: " + StderrTail());
  }
  if (line != "PONG") {
    Fail(VerdictStatus::kRuntimeFailure,
         "protocol violation: expected PONG, got '" + Excerpt(line) + "'");
  }
  state_ = State::kIdle;
}

std::vector<CandidateRecord> Runner::EvalRange(LinearIndex start,
                                               std::uint64_t count) {
  if (state_ != State::kIdle) {
    throw RunnerError(VerdictStatus::kRuntimeFailure,
                      "worker is " + std::string(RunnerStateName(state_)));
  }
  if (count > limits_.batch_size) {
    throw InvalidArgument("range of " + std::to_string(count) +
                          " exceeds the batch size " +
                          std::to_string(limits_.batch_size));
  }
  state_ = State::kBusy;
  SendLine("RANGE " + std::to_string(start) + " " + std::to_string(count));
  std::vector<CandidateRecord> records;
  records.reserve(count);
  std::string line;
  while (records.size() < count) {
    if (!ReadLine(line)) {
      std::string tail = StderrTail();
      Fail(VerdictStatus::kRuntimeFailure,
           "worker died after " + std::to_string(records.size()) + " of " +
               std::to_string(count) + " records" +
               (tail.empty() ? "" : ": " + tail));
    }
    if (line.starts_with("ERR ")) {
      records.push_back(CandidateRecord::Failure(line.substr(4)));
      continue;
    }
    CandidateRecord r;
    if (!ParseCoordLine(line, r)) {
      Fail(VerdictStatus::kRuntimeFailure,
           "protocol violation at index " +
               std::to_string(start + records.size()) + ": '" +
               Excerpt(line) + "'");
    }
    records.push_back(std::move(r));
  }
  state_ = State::kIdle;
  return records;
}

void Runner::Kill() {
  if (pid_ > 0) {
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    while (::waitpid(pid_, nullptr, 0) < 0 && errno == EINTR) {
    }
    pid_ = -1;
  }
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
  state_ = State::kDead;
}

void Runner::Shutdown() {
  if (pid_ > 0) {
    if (state_ == State::kIdle && fd_ >= 0) {
      static const char kQuit[] = "QUIT\n";
      (void)::send(fd_, kQuit, sizeof kQuit - 1, MSG_NOSIGNAL);
    }
    const auto give_up = std::chrono::steady_clock::now() + kQuitGrace;
    bool reaped = false;
    while (std::chrono::steady_clock::now() < give_up) {
      const pid_t r = ::waitpid(pid_, nullptr, WNOHANG);
      if (r == pid_ || (r < 0 && errno != EINTR)) {
        reaped = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    if (reaped) {
      ::kill(-pid_, SIGKILL);  // stragglers left in the group
      pid_ = -1;
    }
  }
  Kill();
  std::error_code ec;
  if (!source_path_.empty()) std::filesystem::remove(source_path_, ec);
  if (!stderr_path_.empty()) std::filesystem::remove(stderr_path_, ec);
  source_path_.clear();
  stderr_path_.clear();
}

std::string Runner::StderrTail() const {
  std::ifstream in(stderr_path_, std::ios::binary);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (text.size() > kStderrTailBytes) {
    text.erase(0, text.size() - kStderrTailBytes);
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return text;
}

RunOutcome EvaluateCandidate(const WorkerCommand& command,
                             std::string_view source, std::uint64_t count,
                             const RunnerLimits& limits) {
  std::variant<Runner, CandidateVerdict> spawned =
      CandidateVerdict::Failure(VerdictStatus::kRuntimeFailure, "not started");
  try {
    spawned = Runner::Spawn(command, source, limits);
  } catch (const SpawnError& e) {
    return CandidateVerdict::Failure(VerdictStatus::kRuntimeFailure,
                                     std::string("spawn failed: ") + e.what());
  }
  if (auto* verdict = std::get_if<CandidateVerdict>(&spawned)) return *verdict;
  Runner& runner = std::get<Runner>(spawned);

  std::vector<CandidateRecord> records;
  records.reserve(count);
  try {
    for (std::uint64_t start = 0; start < count;) {
      const std::uint64_t n = std::min(limits.batch_size, count - start);
      std::vector<CandidateRecord> batch = runner.EvalRange(start, n);
      if (start == 0 && !batch.empty() && !batch.front().ok()) {
        runner.Shutdown();
        return CandidateVerdict::Failure(
            VerdictStatus::kRuntimeFailure,
            "candidate fails at index 0: " + batch.front().error);
      }
      std::move(batch.begin(), batch.end(), std::back_inserter(records));
      start += n;
    }
  } catch (const RunnerError& e) {
    runner.Shutdown();
    return CandidateVerdict::Failure(e.status(), e.what());
  }
  runner.Shutdown();
  return records;
}

AccuracyReport ValidateCandidate(const WorkerCommand& command,
                                 std::string_view source,
                                 const GroundTruth& gt,
                                 const RunnerLimits& limits) {
  return ScoreCandidate(EvaluateCandidate(command, source, gt.count(), limits),
                        gt);
}

}  // namespace mapforge
