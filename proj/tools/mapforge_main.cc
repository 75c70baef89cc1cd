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

// mapforge command-line front end.
//
// Exit codes: 0 success (including runs recorded with a failure verdict),
// 1 runtime error, 2 usage or configuration error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mapforge/block_sim.h"
#include "mapforge/domain.h"
#include "mapforge/error.h"
#include "mapforge/experiment.h"
#include "mapforge/ground_truth.h"
#include "mapforge/manifest.h"
#include "mapforge/prompt.h"
#include "mapforge/report.h"
#include "mapforge/runner.h"

namespace mapforge {
namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

class ConfigError : public Error {
 public:
  using Error::Error;
};

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

DomainId ParseDomainFlag(const std::string& name) {
  const auto d = ParseDomain(name);
  if (!d) throw ConfigError("unknown domain '" + name + "'");
  return *d;
}

GroundTruth LoadOrGenerate(DomainId domain, std::uint64_t count,
                           const std::string& gt_path) {
  if (gt_path.empty()) return GenerateGroundTruth(domain, count);
  GroundTruth gt = ReadGroundTruthFile(gt_path, domain);
  if (gt.count() < count) {
    throw ConfigError(gt_path + " holds " + std::to_string(gt.count()) +
                      " points, need " + std::to_string(count));
  }
  gt.coords.resize(count);
  return gt;
}

void PrintLog(const std::string& line) { std::cerr << line << "\n"; }

int Gen(const std::string& domain, std::uint64_t count, const std::string& out) {
  const GroundTruth gt = GenerateGroundTruth(ParseDomainFlag(domain), count);
  std::ostringstream ss;
  WriteGroundTruthJsonl(ss, gt.coords);
  WriteOutput(out, ss.str());
  return 0;
}

int Prompt(const std::string& domain, std::uint64_t stage,
           const std::string& gt_path, const std::string& out) {
  if (stage == 0) throw ConfigError("stage must be >= 1");
  const DomainId d = ParseDomainFlag(domain);
  WriteOutput(out, BuildPrompt({d, stage}, LoadOrGenerate(d, stage, gt_path)));
  return 0;
}

int Infer(const std::string& config_path, const std::string& domain,
          std::uint64_t stage, const std::string& model,
          std::uint32_t attempt) {
  const ExperimentConfig config = LoadExperimentConfig(config_path);
  const DomainId d = ParseDomainFlag(domain);
  if (stage == 0 || stage > config.validate_n) {
    throw ConfigError("stage must be in [1, validate_n]");
  }
  const ModelEndpoint* endpoint = nullptr;
  try {
    endpoint = &config.Endpoint(model);
  } catch (const NotFoundError& e) {
    throw ConfigError(e.what());
  }
  GroundTruthCache cache(config.paths.datasets);
  ManifestStore store(config.paths.runs);
  const RunManifest m = RunCell(config, *endpoint, d, stage, attempt,
                                cache.Get(d, config.validate_n), store,
                                PrintLog);
  std::cout << m.run_id << " " << VerdictName(m.verdict.status) << " "
            << FormatCell(m.report->ordered, m.verdict) << " "
            << FormatCell(m.report->anyorder, m.verdict) << "\n";
  return 0;
}

int Validate(const std::string& candidate, const std::string& domain,
             std::uint64_t n, const std::string& gt_path, std::string worker,
             const std::string& python, double timeout, std::uint64_t batch) {
  if (n == 0) throw ConfigError("--n must be >= 1");
  if (worker.empty()) {
    if (const char* env = std::getenv(std::string(kWorkerEnvVar).c_str())) {
      worker = env;
    }
  }
  if (worker.empty()) {
    throw ConfigError("no worker: pass --worker or set $" +
                      std::string(kWorkerEnvVar));
  }
  std::ifstream in(candidate, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + candidate);
  std::ostringstream source;
  source << in.rdbuf();

  const DomainId d = ParseDomainFlag(domain);
  const GroundTruth gt = LoadOrGenerate(d, n, gt_path);
  const AccuracyReport r = ValidateCandidate({{python, worker}}, source.str(),
                                             gt, {timeout, batch});
  std::cout << "verdict=" << VerdictName(r.verdict.status)
            << " ordered=" << FormatCell(r.ordered, r.verdict)
            << " anyorder=" << FormatCell(r.anyorder, r.verdict)
            << " n=" << r.n_evaluated << "\n";
  if (!r.verdict.ok()) std::cout << "detail: " << r.verdict.detail << "\n";
  return 0;
}

int BlockSim(const std::string& domain, std::uint64_t elements,
             const std::string& block_text, std::optional<double> joules) {
  const DomainId d = ParseDomainFlag(domain);
  BlockShape block = BlockShape::DefaultFor(d);
  if (!block_text.empty()) {
    try {
      block = BlockShape::Parse(block_text);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  }
  std::string out = std::string(BlockStatsCsvHeader()) + "\n";
  out += BlockStatsCsvRow(d, "bounding_box",
                          SimulateBoundingBox(d, elements, block)) + "\n";
  out += BlockStatsCsvRow(d, "analytical",
                          SimulateAnalytical(elements, block.threads())) + "\n";
  std::cout << out;
  if (joules) {
    std::printf("points_per_joule=%.6g\n",
                EfficiencyPointsPerJoule({*joules, elements}));
  }
  return 0;
}

int Report(const std::string& runs, const std::string& format_name,
           const std::string& out) {
  const auto format = ParseReportFormat(format_name);
  if (!format) throw ConfigError("unknown format '" + format_name + "'");
  if (!std::filesystem::is_directory(runs)) {
    throw ConfigError("no runs directory " + runs);
  }
  const auto manifests = ManifestStore(runs).LoadAll();
  WriteOutput(out, RenderReport(TableFromManifests(manifests), *format));
  return 0;
}

int Run(const std::string& config_path) {
  const ExperimentConfig config = LoadExperimentConfig(config_path);
  const ResultsTable table = RunExperiment(config, PrintLog);
  if (table.empty()) {
    std::cerr << "no runs were recorded\n";
    return kExitRuntime;
  }
  const std::string markdown = RenderReport(table, ReportFormat::kMarkdown);
  std::filesystem::create_directories(config.paths.reports);
  WriteOutput((config.paths.reports / "results.md").string(), markdown);
  WriteOutput((config.paths.reports / "results.csv").string(),
              RenderReport(table, ReportFormat::kCsv));
  std::cout << markdown;
  return 0;
}

}  // namespace
}  // namespace mapforge

int main(int argc, char** argv) {
  using namespace mapforge;
  CLI::App app{"Thread-mapping workbench: exact domain maps, candidate "
               "inference and validation, block waste simulation"};
  app.require_subcommand(1);

  std::string domain, out, gt_path, config, model, candidate, worker, block,
      runs, format = "markdown", python = "python3";
  std::uint64_t count = 0, stage = 0, n = 1000000, elements = 0;
  std::uint64_t batch = RunnerLimits{}.batch_size;
  double timeout = RunnerLimits{}.timeout_seconds;
  std::uint32_t attempt = 0;
  std::optional<double> joules;

  auto* gen = app.add_subcommand("gen", "Write the first --count points as JSONL");
  gen->add_option("--domain", domain)->required();
  gen->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* prompt = app.add_subcommand("prompt", "Build the few-shot prompt");
  prompt->add_option("--domain", domain)->required();
  prompt->add_option("--stage", stage)->required();
  prompt->add_option("--gt", gt_path, "Ground-truth JSONL (default: generate)");
  prompt->add_option("--out", out, "Output file (default stdout)");

  auto* infer = app.add_subcommand("infer", "Run one cell and persist its manifest");
  infer->add_option("--config", config)->required();
  infer->add_option("--domain", domain)->required();
  infer->add_option("--stage", stage)->required();
  infer->add_option("--model", model)->required();
  infer->add_option("--attempt", attempt);

  auto* validate = app.add_subcommand("validate", "Score a candidate source file");
  validate->add_option("--candidate", candidate)->required();
  validate->add_option("--domain", domain)->required();
  validate->add_option("--n", n);
  validate->add_option("--gt", gt_path, "Ground-truth JSONL (default: generate)");
  validate->add_option("--worker", worker, "Worker script (default $MAPFORGE_WORKER)");
  validate->add_option("--python", python);
  validate->add_option("--timeout", timeout, "Seconds")->check(CLI::PositiveNumber);
  validate->add_option("--batch", batch)->check(CLI::PositiveNumber);

  auto* blocksim = app.add_subcommand("blocksim", "Block counts as CSV");
  blocksim->add_option("--domain", domain)->required();
  blocksim->add_option("--elements", elements)->required()->check(CLI::PositiveNumber);
  blocksim->add_option("--block", block, "e.g. 16x16 or 8x8x4");
  blocksim->add_option("--joules", joules, "Measured energy for points/J");

  auto* report = app.add_subcommand("report", "Render persisted runs");
  report->add_option("--runs", runs)->required();
  report->add_option("--format", format, "csv or markdown");
  report->add_option("--out", out, "Output file (default stdout)");

  auto* run = app.add_subcommand("run", "Run the whole sweep of a config");
  run->add_option("--config", config)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return Gen(domain, count, out);
    if (*prompt) return Prompt(domain, stage, gt_path, out);
    if (*infer) return Infer(config, domain, stage, model, attempt);
    if (*validate) {
      return Validate(candidate, domain, n, gt_path, worker, python, timeout,
                      batch);
    }
    if (*blocksim) return BlockSim(domain, elements, block, joules);
    if (*report) return Report(runs, format, out);
    if (*run) return Run(config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
