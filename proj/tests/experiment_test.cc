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

#include "mapforge/experiment.h"

#include <gtest/gtest.h>
#include <stdlib.h>
#include <sys/wait.h>

#include <chrono>
#include <set>
#include <thread>

#include "mapforge/digest.h"
#include "mapforge/error.h"
#include "mapforge/prompt.h"
#include "mapforge/report.h"
#include "test_support.h"

namespace mapforge {
namespace {

using testing::Candidate;
using testing::Fenced;
using testing::ReadText;
using testing::StubChatServer;
using testing::TempDir;
using testing::WriteText;

constexpr char kProse[] =
    "Each index walks the rows of the triangle; row x holds x + 1 points. I "
    "would need more examples to be sure.";

ExperimentConfig SmallConfig(const TempDir& dir, const std::string& base_url,
                             DomainId domain = DomainId::kTriangular2D) {
  ExperimentConfig c;
  c.domains = {domain};
  c.stages = {20};
  ModelEndpoint e;
  e.base_url = base_url;
  e.model_name = "stub";
  e.timeout_seconds = 10;
  c.endpoints = {e};
  c.validate_n = 3000;
  c.paths = {dir.path() / "datasets", dir.path() / "runs", dir.path() / "reports"};
  c.worker = testing::TestWorker();
  c.limits = {30, 1000};
  return c;
}

StubChatServer::Reply Always(std::string content) {
  return [content](const nlohmann::json&) { return std::make_pair(200, content); };
}

TEST(ExperimentConfigTest, ParsesDocumentedSchema) {
  TempDir dir;
  const nlohmann::json j = {
      {"domains", {"Gasket2D", "menger3d"}},
      {"stages", {20, 100}},
      {"validate_n", 5000},
      {"repeats", 2},
      {"endpoints",
       {{{"base_url", "http://localhost:8000/v1"},
         {"model", "a"},
         {"params", {{"temperature", 0}}},
         {"timeout_s", 30}}}},
      {"paths", {{"datasets", "d"}, {"runs", "/abs/runs"}}},
      {"runner", {{"worker", "w.py"}, {"timeout_s", 12}, {"batch_size", 500}}}};
  const ExperimentConfig c = ExperimentConfigFromJson(j, dir.path());
  EXPECT_EQ(c.domains,
            (std::vector<DomainId>{DomainId::kGasket2D, DomainId::kMenger3D}));
  EXPECT_EQ(c.stages, (std::vector<std::uint64_t>{20, 100}));
  EXPECT_EQ(c.validate_n, 5000u);
  EXPECT_EQ(c.repeats, 2u);
  EXPECT_EQ(c.endpoints[0].params["temperature"], 0);
  EXPECT_EQ(c.endpoints[0].timeout_seconds, 30);
  EXPECT_EQ(c.paths.datasets, dir.path() / "d");
  EXPECT_EQ(c.paths.runs, "/abs/runs");
  EXPECT_EQ(c.paths.reports, dir.path() / "reports");
  EXPECT_EQ(c.worker.argv,
            (std::vector<std::string>{"python3", (dir.path() / "w.py").string()}));
  EXPECT_EQ(c.limits.timeout_seconds, 12);
  EXPECT_EQ(c.limits.batch_size, 500u);
}

TEST(ExperimentConfigTest, DefaultsAndEnvironment) {
  ::setenv(std::string(kWorkerEnvVar).c_str(), "/opt/worker.py", 1);
  ::setenv("STUB_KEY_FOR_TEST", "k123", 1);
  const nlohmann::json j = {
      {"domains", "all"},
      {"endpoints",
       {{{"base_url", "http://h/v1"}, {"model", "m"},
         {"api_key_env", "STUB_KEY_FOR_TEST"}}}}};
  const ExperimentConfig c = ExperimentConfigFromJson(j, "/base");
  ::unsetenv(std::string(kWorkerEnvVar).c_str());
  EXPECT_EQ(c.domains.size(), 6u);
  EXPECT_EQ(c.stages, (std::vector<std::uint64_t>{20, 50, 100}));
  EXPECT_EQ(c.validate_n, 1000000u);
  EXPECT_EQ(c.repeats, 1u);
  EXPECT_EQ(c.worker.argv.back(), "/opt/worker.py");
  EXPECT_EQ(c.endpoints[0].api_key, "k123");
  EXPECT_EQ(c.limits.timeout_seconds, 300);
  EXPECT_EQ(c.limits.batch_size, 100000u);
}

TEST(ExperimentConfigTest, Rejections) {
  const nlohmann::json ok = {
      {"domains", {"Triangular2D"}},
      {"endpoints", {{{"base_url", "http://h/v1"}, {"model", "m"}}}},
      {"runner", {{"command", {"python3", "w.py"}}}}};
  EXPECT_NO_THROW(ExperimentConfigFromJson(ok, "/"));

  auto with = [&ok](const char* key, nlohmann::json v) {
    nlohmann::json j = ok;
    j[key] = std::move(v);
    return j;
  };
  EXPECT_THROW(ExperimentConfigFromJson(with("typo", 1), "/"), ParseError);
  EXPECT_THROW(ExperimentConfigFromJson(with("domains", {"Hexagon"}), "/"),
               InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(with("domains", nlohmann::json::array()), "/"),
               InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(with("stages", {0}), "/"),
               InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(with("validate_n", 50), "/"),
               InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(with("repeats", 0), "/"),
               InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(with("validate_n", "many"), "/"),
               ParseError);
  nlohmann::json dup = ok;
  dup["endpoints"].push_back(dup["endpoints"][0]);
  EXPECT_THROW(ExperimentConfigFromJson(dup, "/"), InvalidArgument);
  EXPECT_THROW(ExperimentConfigFromJson(nlohmann::json::array(), "/"),
               ParseError);
}

TEST(GroundTruthCacheTest, WritesReusesAndRepairs) {
  TempDir dir;
  GroundTruthCache cache(dir.path());
  const GroundTruth& gt = cache.Get(DomainId::kCarpet2D, 500);
  EXPECT_EQ(gt.count(), 500u);
  const auto path = cache.PathFor(DomainId::kCarpet2D, 500);
  EXPECT_EQ(path.filename(), "Carpet2D-500.jsonl");
  const std::string text = ReadText(path);
  EXPECT_EQ(ReadText(path.string() + ".sha256"), Sha256Hex(text) + "\n");

  // A fresh cache reads the file back; a tampered file is regenerated.
  WriteText(path, "{\"n\": 0, \"c\": [9, 9]}\n");
  GroundTruthCache again(dir.path());
  EXPECT_EQ(again.Get(DomainId::kCarpet2D, 500).coords, gt.coords);
  EXPECT_EQ(ReadText(path), text);
}

TEST(RunExperimentTest, CorrectCandidateGivesFullRow) {
  TempDir dir;
  StubChatServer server(Always(Fenced(Candidate("triangular2d.py"))));
  const ExperimentConfig config = SmallConfig(dir, server.base_url());
  const ResultsTable table = RunExperiment(config);
  ASSERT_EQ(table.size(), 1u);
  const ResultRow row = *table.Get({DomainId::kTriangular2D, "stub", 20});
  EXPECT_EQ(row.ordered, 1.0);
  EXPECT_EQ(row.anyorder, 1.0);
  EXPECT_TRUE(row.verdict.ok());
  EXPECT_NE(RenderReport(table, ReportFormat::kMarkdown)
                .find("| stub | 100.00% | 100.00% |"),
            std::string::npos);

  const auto manifests = ManifestStore(config.paths.runs).LoadAll();
  ASSERT_EQ(manifests.size(), 1u);
  const RunManifest& m = manifests[0];
  EXPECT_EQ(m.validate_n, 3000u);
  EXPECT_TRUE(m.extracted_source.has_value());
  EXPECT_EQ(m.raw_response, Fenced(Candidate("triangular2d.py")));
  const auto requests = server.requests();
  ASSERT_EQ(requests.size(), 1u);
  EXPECT_EQ(m.prompt_hash,
            Sha256Hex(requests[0]["messages"][0]["content"].get<std::string>()));
}

TEST(RunExperimentTest, ProseGivesNonCompilingRow) {
  TempDir dir;
  StubChatServer server(Always(kProse));
  const ResultsTable table = RunExperiment(SmallConfig(dir, server.base_url()));
  const ResultRow row = *table.Get({DomainId::kTriangular2D, "stub", 20});
  EXPECT_EQ(row.verdict.status, VerdictStatus::kNonCompiling);
  EXPECT_EQ(row.verdict.detail, "no function definition");
  EXPECT_EQ(FormatCell(row.ordered, row.verdict), "0.00% (NC)");
  EXPECT_EQ(FormatCell(row.anyorder, row.verdict), "0.00% (NC)");
}

TEST(RunExperimentTest, TwoStagesGiveTwoRowsWithDistinctPrompts) {
  TempDir dir;
  StubChatServer server(Always(Fenced(Candidate("gasket2d.py"))));
  ExperimentConfig config = SmallConfig(dir, server.base_url(), DomainId::kGasket2D);
  config.stages = {20, 50};
  const ResultsTable table = RunExperiment(config);
  EXPECT_EQ(table.size(), 2u);
  std::set<std::string> hashes;
  for (const RunManifest& m : ManifestStore(config.paths.runs).LoadAll()) {
    hashes.insert(m.prompt_hash);
  }
  EXPECT_EQ(hashes.size(), 2u);
}

TEST(RunExperimentTest, FailuresAreRecordedAndSweepContinues) {
  TempDir dir;
  StubChatServer good(Always(Fenced(Candidate("pyramid3d.py"))));
  StubChatServer broken([](const nlohmann::json&) {
    return std::make_pair(500, std::string("internal error"));
  });
  StubChatServer slow([](const nlohmann::json&) {
    std::this_thread::sleep_for(std::chrono::milliseconds(2500));
    return std::make_pair(200, std::string("late"));
  });
  ExperimentConfig config = SmallConfig(dir, good.base_url(), DomainId::kPyramid3D);
  config.endpoints[0].model_name = "good";
  ModelEndpoint b = config.endpoints[0];
  b.base_url = broken.base_url();
  b.model_name = "broken";
  ModelEndpoint s = config.endpoints[0];
  s.base_url = slow.base_url();
  s.model_name = "slow";
  s.timeout_seconds = 1;
  ModelEndpoint down = config.endpoints[0];
  down.base_url = "http://127.0.0.1:1/v1";
  down.model_name = "down";
  config.endpoints = {b, s, down, config.endpoints[0]};

  std::vector<std::string> log;
  const ResultsTable table =
      RunExperiment(config, [&log](const std::string& l) { log.push_back(l); });
  ASSERT_EQ(table.size(), 4u);
  auto status = [&table](const char* model) {
    return table.Get({DomainId::kPyramid3D, model, 20})->verdict.status;
  };
  EXPECT_EQ(status("broken"), VerdictStatus::kRuntimeFailure);
  EXPECT_EQ(status("slow"), VerdictStatus::kTimeout);
  EXPECT_EQ(status("down"), VerdictStatus::kRuntimeFailure);
  EXPECT_EQ(status("good"), VerdictStatus::kOk);
  EXPECT_EQ(table.Get({DomainId::kPyramid3D, "good", 20})->ordered, 1.0);
  EXPECT_EQ(log.size(), 4u);

  for (const RunManifest& m : ManifestStore(config.paths.runs).LoadAll()) {
    if (m.model_name == "good") continue;
    ASSERT_TRUE(m.inference_error.has_value()) << m.model_name;
    EXPECT_FALSE(m.extracted_source.has_value());
    EXPECT_EQ(m.report->ordered, 0.0);
  }
}

TEST(RunExperimentTest, CandidateFailuresKeepTheirVerdicts) {
  TempDir dir;
  StubChatServer loop(Always(Fenced(Candidate("infinite_loop.py"))));
  ExperimentConfig config = SmallConfig(dir, loop.base_url());
  config.limits.timeout_seconds = 1;
  const ResultsTable table = RunExperiment(config);
  const ResultRow row = *table.Get({DomainId::kTriangular2D, "stub", 20});
  EXPECT_EQ(row.verdict.status, VerdictStatus::kTimeout);
  EXPECT_EQ(FormatCell(row.ordered, row.verdict), "0.00% (TO)");
}

TEST(RunExperimentTest, RepeatsPersistEveryAttempt) {
  TempDir dir;
  StubChatServer server(Always(kProse));
  ExperimentConfig config = SmallConfig(dir, server.base_url());
  config.repeats = 3;
  const ResultsTable table = RunExperiment(config);
  EXPECT_EQ(table.size(), 1u);
  const auto manifests = ManifestStore(config.paths.runs).LoadAll();
  ASSERT_EQ(manifests.size(), 3u);
  std::set<std::uint32_t> attempts;
  for (const auto& m : manifests) attempts.insert(m.attempt);
  EXPECT_EQ(attempts, (std::set<std::uint32_t>{0, 1, 2}));
}

TEST(RunExperimentTest, ParallelEndpointsMatchSequential) {
  TempDir dir;
  StubChatServer a(Always(Fenced(Candidate("carpet2d.py"))));
  StubChatServer b(Always(kProse));
  ExperimentConfig config = SmallConfig(dir, a.base_url(), DomainId::kCarpet2D);
  ModelEndpoint e = config.endpoints[0];
  e.base_url = b.base_url();
  e.model_name = "prose";
  config.endpoints.push_back(e);
  const ResultsTable sequential = RunExperiment(config);
  config.parallel_endpoints = true;
  config.paths.runs = dir.path() / "runs-parallel";
  const ResultsTable parallel = RunExperiment(config);
  EXPECT_EQ(RenderReport(sequential, ReportFormat::kCsv),
            RenderReport(parallel, ReportFormat::kCsv));
}

TEST(RunExperimentTest, ReproducibleExceptTimestampsAndIds) {
  TempDir dir;
  StubChatServer server(Always(Fenced(Candidate("menger3d.py"))));
  ExperimentConfig config = SmallConfig(dir, server.base_url(), DomainId::kMenger3D);
  RunExperiment(config);
  config.paths.runs = dir.path() / "runs-2";
  RunExperiment(config);
  auto strip = [](RunManifest m) {
    m.run_id.clear();
    m.started_at.clear();
    m.finished_at.clear();
    m.inference_seconds = 0;
    return ManifestToJson(m).dump();
  };
  const auto first = ManifestStore(dir.path() / "runs").LoadAll();
  const auto second = ManifestStore(dir.path() / "runs-2").LoadAll();
  ASSERT_EQ(first.size(), 1u);
  ASSERT_EQ(second.size(), 1u);
  EXPECT_EQ(strip(first[0]), strip(second[0]));
}

TEST(RunExperimentTest, InvalidConfigThrows) {
  TempDir dir;
  ExperimentConfig config = SmallConfig(dir, "http://127.0.0.1:1/v1");
  config.stages.clear();
  EXPECT_THROW(RunExperiment(config), InvalidArgument);
}

// Reports.

TEST(ReportTest, CellFormatting) {
  const auto ok = CandidateVerdict::Ok();
  EXPECT_EQ(FormatCell(1.0, ok), "100.00%");
  EXPECT_EQ(FormatCell(0.0, ok), "0.00%");
  EXPECT_EQ(FormatCell(0.29, ok), "29.00%");
  EXPECT_EQ(FormatCell(0.123456, ok), "12.34%");
  EXPECT_EQ(FormatCell(999999.0 / 1000000.0, ok), "99.99%");
  EXPECT_EQ(FormatCell(1.0 / 3.0, ok), "33.33%");
  EXPECT_EQ(FormatCell(0.0, CandidateVerdict::Failure(VerdictStatus::kRuntimeFailure, "x")),
            "0.00% (RF)");
}

TEST(ReportTest, MarkdownLayout) {
  ResultsTable t;
  t.Set({DomainId::kMenger3D, "zeta", 20}, {1.0, 1.0, CandidateVerdict::Ok()});
  t.Set({DomainId::kTriangular2D, "beta", 50}, {0.5, 0.75, CandidateVerdict::Ok()});
  t.Set({DomainId::kTriangular2D, "alpha", 20},
        {0.0, 0.0, CandidateVerdict::Failure(VerdictStatus::kNonCompiling, "x")});
  const std::string md = RenderReport(t, ReportFormat::kMarkdown);
  EXPECT_EQ(md,
            "# Results\n"
            "\n## Triangular2D\n\n"
            "| Model | 20 pts Ord. | 20 pts Any | 50 pts Ord. | 50 pts Any |\n"
            "|---|---:|---:|---:|---:|\n"
            "| alpha | 0.00% (NC) | 0.00% (NC) | - | - |\n"
            "| beta | - | - | 50.00% | 75.00% |\n"
            "\n## Menger3D\n\n"
            "| Model | 20 pts Ord. | 20 pts Any |\n"
            "|---|---:|---:|\n"
            "| zeta | 100.00% | 100.00% |\n");
}

TEST(ReportTest, CsvLayout) {
  ResultsTable t;
  t.Set({DomainId::kGasket2D, "m,1", 100}, {0.25, 1.0, CandidateVerdict::Ok()});
  EXPECT_EQ(RenderReport(t, ReportFormat::kCsv),
            "domain,model,stage,ordered,anyorder,verdict\n"
            "Gasket2D,\"m,1\",100,0.250000,1.000000,Ok\n");
}

TEST(ReportTest, EmptyTableAndBadRows) {
  ResultsTable t;
  EXPECT_THROW(RenderReport(t, ReportFormat::kCsv), InvalidArgument);
  EXPECT_THROW(t.Set({DomainId::kGasket2D, "m", 20}, {1.5, 0, {}}),
               InvalidArgument);
  EXPECT_EQ(ParseReportFormat("CSV"), ReportFormat::kCsv);
  EXPECT_EQ(ParseReportFormat("md"), ReportFormat::kMarkdown);
  EXPECT_FALSE(ParseReportFormat("html").has_value());
}

TEST(ReportTest, LatestAttemptWins) {
  RunManifest a;
  a.run_id = "a";
  a.domain = DomainId::kGasket2D;
  a.stage = 20;
  a.model_name = "m";
  a.verdict = CandidateVerdict::Failure(VerdictStatus::kNonCompiling, "x");
  a.finished_at = "2026-01-01T00:00:02Z";
  RunManifest b = a;
  b.run_id = "b";
  b.verdict = CandidateVerdict::Ok();
  b.report = AccuracyReport{1.0, 1.0, 10, CandidateVerdict::Ok()};
  b.finished_at = "2026-01-01T00:00:01Z";
  const std::vector<RunManifest> ms = {a, b};
  const ResultsTable t = TableFromManifests(ms);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.Get({DomainId::kGasket2D, "m", 20})->verdict.status,
            VerdictStatus::kNonCompiling);
}

TEST(ReportTest, PersistedRunsReproduceTheReport) {
  TempDir dir;
  StubChatServer server([](const nlohmann::json& req) {
    // Correct code for the 20-point prompt, prose for the others.
    const std::string prompt = req["messages"][0]["content"];
    const bool small = prompt.find("\n20 -> ") == std::string::npos;
    return std::make_pair(200, small ? Fenced(Candidate("sierpinski3d.py"))
                                     : std::string(kProse));
  });
  ExperimentConfig config =
      SmallConfig(dir, server.base_url(), DomainId::kSierpinski3D);
  config.stages = {20, 50, 100};
  const ResultsTable table = RunExperiment(config);
  const auto manifests = ManifestStore(config.paths.runs).LoadAll();
  const ResultsTable reloaded = TableFromManifests(manifests);
  for (ReportFormat f : {ReportFormat::kCsv, ReportFormat::kMarkdown}) {
    EXPECT_EQ(RenderReport(table, f), RenderReport(reloaded, f));
    EXPECT_EQ(RenderReport(reloaded, f),
              RenderReport(TableFromManifests(
                               ManifestStore(config.paths.runs).LoadAll()),
                           f));
  }
  EXPECT_EQ(table.Get({DomainId::kSierpinski3D, "stub", 20})->ordered, 1.0);
  EXPECT_EQ(table.Get({DomainId::kSierpinski3D, "stub", 50})->verdict.status,
            VerdictStatus::kNonCompiling);
}

// Command line.

int RunCli(const std::string& args, std::string* out = nullptr) {
  TempDir dir;
  const auto capture = dir.path() / "out.txt";
  const std::string cmd = std::string(MAPFORGE_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) *out = ReadText(capture);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, GenPromptBlocksim) {
  std::string out;
  ASSERT_EQ(RunCli("gen --domain Gasket2D --count 3", &out), 0);
  EXPECT_EQ(out,
            "{\"n\": 0, \"c\": [0, 0]}\n{\"n\": 1, \"c\": [1, 0]}\n"
            "{\"n\": 2, \"c\": [0, 1]}\n");
  ASSERT_EQ(RunCli("prompt --domain triangular2d --stage 20", &out), 0);
  const GroundTruth gt = GenerateGroundTruth(DomainId::kTriangular2D, 20);
  EXPECT_EQ(out, BuildPrompt({DomainId::kTriangular2D, 20}, gt));
  ASSERT_EQ(RunCli("blocksim --domain Triangular2D --elements 36 --block 4x4", &out), 0);
  EXPECT_EQ(out,
            "domain,strategy,total_blocks,wasted_blocks,waste_fraction,elements\n"
            "Triangular2D,bounding_box,4,1,0.250000,36\n"
            "Triangular2D,analytical,3,0,0.000000,36\n");
}

TEST(CliTest, ValidateAndReport) {
  TempDir dir;
  const auto cand = dir.path() / "c.py";
  WriteText(cand, Candidate("carpet2d.py"));
  std::string out;
  ASSERT_EQ(RunCli("validate --candidate " + cand.string() +
                       " --domain Carpet2D --n 2000 --worker " +
                       MAPFORGE_WORKER_SCRIPT,
                   &out),
            0);
  EXPECT_EQ(out, "verdict=Ok ordered=100.00% anyorder=100.00% n=2000\n");

  StubChatServer server(Always(kProse));
  const ExperimentConfig config = SmallConfig(dir, server.base_url());
  RunExperiment(config);
  ASSERT_EQ(RunCli("report --runs " + config.paths.runs.string() + " --format csv",
                   &out),
            0);
  EXPECT_EQ(out,
            "domain,model,stage,ordered,anyorder,verdict\n"
            "Triangular2D,stub,20,0.000000,0.000000,NonCompiling\n");
}

TEST(CliTest, RunAndInferWithConfigFile) {
  TempDir dir;
  StubChatServer server(Always(Fenced(Candidate("triangular2d.py"))));
  const nlohmann::json config = {
      {"domains", {"Triangular2D"}},
      {"stages", {20}},
      {"validate_n", 2000},
      {"endpoints", {{{"base_url", server.base_url()}, {"model", "stub"}}}},
      {"runner", {{"worker", MAPFORGE_WORKER_SCRIPT}, {"timeout_s", 30}}}};
  WriteText(dir.path() / "config.json", config.dump(2));
  std::string out;
  ASSERT_EQ(RunCli("run --config " + (dir.path() / "config.json").string(), &out), 0);
  EXPECT_NE(out.find("| stub | 100.00% | 100.00% |"), std::string::npos) << out;
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "reports" / "results.md"));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "reports" / "results.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "datasets" /
                                      "Triangular2D-2000.jsonl"));

  ASSERT_EQ(RunCli("infer --config " + (dir.path() / "config.json").string() +
                       " --domain Triangular2D --stage 20 --model stub",
                   &out),
            0);
  EXPECT_NE(out.find(" Ok 100.00% 100.00%"), std::string::npos) << out;
  EXPECT_EQ(ManifestStore(dir.path() / "runs").LoadAll().size(), 2u);
}

TEST(CliTest, ConfigurationErrorsExitNonZero) {
  TempDir dir;
  WriteText(dir.path() / "bad.json", "{\"domains\": []}");
  EXPECT_EQ(RunCli("run --config " + (dir.path() / "bad.json").string()), 2);
  EXPECT_EQ(RunCli("run --config " + (dir.path() / "missing.json").string()), 2);
  EXPECT_EQ(RunCli("gen --domain Hexagon --count 3"), 2);
  EXPECT_EQ(RunCli("blocksim --domain Gasket2D --elements 10 --block 4x4x4"), 2);
  EXPECT_EQ(RunCli("report --runs " + dir.path().string() + " --format html"), 2);
  EXPECT_NE(RunCli("frobnicate"), 0);
}

}  // namespace
}  // namespace mapforge
