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

// Client side of the candidate worker. A worker is an external process that
// loads one candidate source file (passed as its last argument) and answers
// a line protocol on stdin/stdout:
//
//   PING                  -> PONG
//   RANGE <start> <count> -> <count> lines, each "<c1> <c2>[ <c3>]" or
//                            "ERR <message>"
//   QUIT                  -> exits 0
//
// A worker that cannot load the candidate either exits before answering the
// first PING (its stderr becomes the reason) or answers it with
// "ERR <reason>". Anything else it prints is a protocol violation.
//
// This is process isolation only. It is not a security boundary.

#ifndef MAPFORGE_RUNNER_H_
#define MAPFORGE_RUNNER_H_

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mapforge/error.h"
#include "mapforge/ground_truth.h"
#include "mapforge/records.h"
#include "mapforge/validation.h"

namespace mapforge {

struct RunnerLimits {
  // Total wall-clock budget of a worker, counted from spawn.
  double timeout_seconds = 300.0;
  // Largest count accepted by one RANGE request.
  std::uint64_t batch_size = 100000;
};

// Program and leading arguments that start a worker, e.g.
// {"python3", "/opt/mapforge/worker.py"}. The candidate file path is
// appended. The first element is looked up on PATH.
struct WorkerCommand {
  std::vector<std::string> argv;
};

// The OS refused to start the worker (missing interpreter, fd exhaustion,
// ...). Distinct from a candidate that fails to load.
class SpawnError : public Error {
 public:
  using Error::Error;
};

// A request failed. status is Timeout or RuntimeFailure.
class RunnerError : public Error {
 public:
  RunnerError(VerdictStatus status, const std::string& message)
      : Error(message), status_(status) {}
  VerdictStatus status() const { return status_; }

 private:
  VerdictStatus status_;
};

class Runner {
 public:
  enum class State { kIdle, kBusy, kDead };

  // Writes the source to a temporary file, starts the worker and waits for
  // PONG. Returns a NonCompiling (or Timeout) verdict if the candidate does
  // not load. Throws SpawnError if the process cannot be started and
  // InvalidArgument for empty source or argv.
  static std::variant<Runner, CandidateVerdict> Spawn(
      const WorkerCommand& command, std::string_view source,
      const RunnerLimits& limits);

  Runner(Runner&& other) noexcept;
  Runner& operator=(Runner&& other) noexcept;
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;
  ~Runner();

  // Liveness probe. Throws RunnerError on a dead or misbehaving worker.
  void Ping();

  // Exactly `count` records for indices start..start+count-1. A candidate
  // exception at some index is a failure record there. Throws
  // InvalidArgument if count exceeds the batch size, RunnerError(Timeout) if
  // the budget runs out (the worker is killed first) and
  // RunnerError(RuntimeFailure) on a dead worker or malformed output.
  std::vector<CandidateRecord> EvalRange(LinearIndex start,
                                         std::uint64_t count);

  // Sends QUIT, reaps the process and removes temporary files. Idempotent.
  void Shutdown();

  State state() const { return state_; }
  pid_t pid() const { return pid_; }
  const RunnerLimits& limits() const { return limits_; }

 private:
  Runner() = default;

  void SendLine(const std::string& line);
  // Returns false on EOF. Throws RunnerError(Timeout) at the deadline.
  bool ReadLine(std::string& line);
  void Kill();
  std::string StderrTail() const;
  [[noreturn]] void Fail(VerdictStatus status, const std::string& message);

  pid_t pid_ = -1;
  int fd_ = -1;  // our end of the worker's stdin/stdout socket
  State state_ = State::kDead;
  RunnerLimits limits_;
  std::chrono::steady_clock::time_point deadline_;
  std::string buffer_;
  std::filesystem::path source_path_;
  std::filesystem::path stderr_path_;
};

std::string_view RunnerStateName(Runner::State state);

// Spawns a worker, evaluates indices [0, gt.count()) in batches and shuts
// the worker down. Load failures, timeouts, spawn failures, dead workers and
// a failure at index 0 come back as a verdict; otherwise the records.
RunOutcome EvaluateCandidate(const WorkerCommand& command,
                             std::string_view source, std::uint64_t count,
                             const RunnerLimits& limits);

// EvaluateCandidate followed by ScoreCandidate.
AccuracyReport ValidateCandidate(const WorkerCommand& command,
                                 std::string_view source,
                                 const GroundTruth& gt,
                                 const RunnerLimits& limits);

}  // namespace mapforge

#endif  // MAPFORGE_RUNNER_H_
