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

#include <gtest/gtest.h>

#include <chrono>
#include <thread>

#include "mapforge/error.h"
#include "test_support.h"

namespace mapforge {
namespace {

using testing::Candidate;
using testing::TestWorker;

using Clock = std::chrono::steady_clock;

class RunnerTest : public ::testing::Test {
 protected:
  void TearDown() override {
    // Every worker must have been reaped by the time a test ends.
    EXPECT_TRUE(testing::ChildPids().empty());
  }
};

Runner SpawnOk(const std::string& source, RunnerLimits limits = {}) {
  auto spawned = Runner::Spawn(TestWorker(), source, limits);
  if (auto* v = std::get_if<CandidateVerdict>(&spawned)) {
    throw std::runtime_error("spawn failed: " + v->detail);
  }
  return std::move(std::get<Runner>(spawned));
}

CandidateVerdict SpawnVerdict(const std::string& source,
                              RunnerLimits limits = {}) {
  auto spawned = Runner::Spawn(TestWorker(), source, limits);
  auto* v = std::get_if<CandidateVerdict>(&spawned);
  if (v == nullptr) {
    std::get<Runner>(spawned).Shutdown();
    return CandidateVerdict::Ok();
  }
  return *v;
}

TEST_F(RunnerTest, LifecycleAndRanges) {
  Runner r = SpawnOk(Candidate("triangular2d.py"), {30, 10});
  EXPECT_EQ(r.state(), Runner::State::kIdle);
  EXPECT_GT(r.pid(), 0);
  r.Ping();
  const auto records = r.EvalRange(7, 4);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0], CandidateRecord::Ok(Coord(3, 1)));
  EXPECT_EQ(records[3], CandidateRecord::Ok(Coord(4, 0)));
  EXPECT_EQ(r.state(), Runner::State::kIdle);
  EXPECT_THROW(r.EvalRange(0, 11), InvalidArgument);
  EXPECT_TRUE(r.EvalRange(0, 0).empty());
  r.Shutdown();
  EXPECT_EQ(r.state(), Runner::State::kDead);
  r.Shutdown();
  EXPECT_THROW(r.Ping(), RunnerError);
  EXPECT_EQ(RunnerStateName(Runner::State::kBusy), "Busy");
}

TEST_F(RunnerTest, MovedFromRunnerIsInert) {
  Runner a = SpawnOk(Candidate("gasket2d.py"));
  Runner b = std::move(a);
  b.Ping();
  EXPECT_EQ(b.EvalRange(11, 1)[0], CandidateRecord::Ok(Coord(4, 1)));
}

TEST_F(RunnerTest, ReferenceCandidatesScorePerfectly) {
  for (DomainId d : kAllDomains) {
    const GroundTruth gt = GenerateGroundTruth(d, 20000);
    const AccuracyReport r = ValidateCandidate(
        TestWorker(), Candidate(testing::ReferenceCandidateFile(d)), gt,
        {60, 7000});
    EXPECT_TRUE(r.verdict.ok()) << DomainName(d) << ": " << r.verdict.detail;
    EXPECT_EQ(r.ordered, 1.0) << DomainName(d);
    EXPECT_EQ(r.anyorder, 1.0) << DomainName(d);
    EXPECT_EQ(r.n_evaluated, 20000u);
  }
}

TEST_F(RunnerTest, PerIndexExceptionsBecomeFailureRecords) {
  const RunOutcome out =
      EvaluateCandidate(TestWorker(), Candidate("raises_on_odd.py"), 10, {});
  const auto* records = std::get_if<std::vector<CandidateRecord>>(&out);
  ASSERT_NE(records, nullptr);
  ASSERT_EQ(records->size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ((*records)[i].ok(), i % 2 == 0) << i;
  }
  EXPECT_NE((*records)[1].error.find("odd index 1"), std::string::npos);
}

TEST_F(RunnerTest, FailureAtIndexZeroIsRuntimeFailure) {
  const RunOutcome out = EvaluateCandidate(
      TestWorker(), "def map_to_coordinates(n):\n    raise KeyError(n)\n", 5,
      {});
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kRuntimeFailure);
}

TEST_F(RunnerTest, InfiniteLoopIsKilledWithinTimeout) {
  const auto t0 = Clock::now();
  const RunOutcome out =
      EvaluateCandidate(TestWorker(), Candidate("infinite_loop.py"), 100, {1.0, 100});
  const auto elapsed = Clock::now() - t0;
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kTimeout);
  EXPECT_LT(elapsed, std::chrono::seconds(3));
}

TEST_F(RunnerTest, TimeoutKillsGrandchildren) {
  const RunOutcome out =
      EvaluateCandidate(TestWorker(), Candidate("spawns_child.py"), 10, {1.5, 10});
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kTimeout);
  // The grandchild is reparented once its parent dies; give init a moment.
  std::vector<pid_t> left;
  for (int i = 0; i < 50; ++i) {
    left = testing::ProcessesMatching("time.sleep(600)");
    if (left.empty()) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  EXPECT_TRUE(left.empty());
}

TEST_F(RunnerTest, LoadFailuresAreNonCompiling) {
  CandidateVerdict v = SpawnVerdict(Candidate("syntax_error.py"));
  EXPECT_EQ(v.status, VerdictStatus::kNonCompiling);
  EXPECT_NE(v.detail.find("SyntaxError"), std::string::npos) << v.detail;

  v = SpawnVerdict(Candidate("wrong_name.py"));
  EXPECT_EQ(v.status, VerdictStatus::kNonCompiling);
  EXPECT_NE(v.detail.find("map_to_coordinates not found"), std::string::npos)
      << v.detail;

  v = SpawnVerdict("import no_such_module_anywhere\n");
  EXPECT_EQ(v.status, VerdictStatus::kNonCompiling);
}

TEST_F(RunnerTest, LoadTimeIsPartOfTheBudget) {
  const auto t0 = Clock::now();
  const CandidateVerdict v =
      SpawnVerdict("import time\ntime.sleep(30)\n", {1.0, 10});
  EXPECT_EQ(v.status, VerdictStatus::kTimeout);
  EXPECT_LT(Clock::now() - t0, std::chrono::seconds(3));
}

TEST_F(RunnerTest, StrayStdoutIsProtocolViolation) {
  const RunOutcome out =
      EvaluateCandidate(TestWorker(), Candidate("garbage_output.py"), 10, {});
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kRuntimeFailure);
}

TEST_F(RunnerTest, WorkerDeathIsRuntimeFailure) {
  const RunOutcome out =
      EvaluateCandidate(TestWorker(), Candidate("exits.py"), 10, {});
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kRuntimeFailure);
}

TEST_F(RunnerTest, BadReturnValuesAreFailureRecords) {
  Runner r = SpawnOk(
      "def map_to_coordinates(n):\n"
      "    return [(0, 0), (1,), (-1, 0), 'xy', (1.5, 2), (1.0, 2.0)][n]\n");
  const auto records = r.EvalRange(0, 6);
  ASSERT_EQ(records.size(), 6u);
  EXPECT_TRUE(records[0].ok());
  for (int i = 1; i <= 4; ++i) EXPECT_FALSE(records[i].ok()) << i;
  EXPECT_EQ(records[5], CandidateRecord::Ok(Coord(1, 2)));
}

TEST_F(RunnerTest, SpawnErrors) {
  EXPECT_THROW(Runner::Spawn(TestWorker(), "", {}), InvalidArgument);
  EXPECT_THROW(Runner::Spawn(WorkerCommand{}, "x = 1\n", {}), InvalidArgument);
  const WorkerCommand missing{{"/nonexistent/interpreter"}};
  const RunOutcome out = EvaluateCandidate(missing, "x = 1\n", 1, {});
  const auto* v = std::get_if<CandidateVerdict>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kRuntimeFailure);
}

TEST_F(RunnerTest, TemporaryFilesAreRemoved) {
  testing::TempDir tmp;
  const char* old = std::getenv("TMPDIR");
  const std::string saved = old ? old : "";
  ::setenv("TMPDIR", tmp.path().c_str(), 1);
  auto count = [&tmp] {
    return std::distance(std::filesystem::directory_iterator(tmp.path()),
                         std::filesystem::directory_iterator());
  };
  {
    Runner r = SpawnOk(Candidate("pyramid3d.py"));
    EXPECT_EQ(count(), 2);  // candidate source and stderr capture
    r.Shutdown();
    EXPECT_EQ(count(), 0);
  }
  EXPECT_EQ(SpawnVerdict(Candidate("syntax_error.py")).status,
            VerdictStatus::kNonCompiling);
  EXPECT_EQ(count(), 0);
  if (old) {
    ::setenv("TMPDIR", saved.c_str(), 1);
  } else {
    ::unsetenv("TMPDIR");
  }
}

}  // namespace
}  // namespace mapforge
