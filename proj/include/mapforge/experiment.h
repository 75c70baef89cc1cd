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

// Experiment sweep: for every (endpoint, domain, stage) cell, build the
// prompt, query the model, extract and validate the candidate, and persist a
// run manifest. Per-run failures are recorded, never thrown.

#ifndef MAPFORGE_EXPERIMENT_H_
#define MAPFORGE_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mapforge/domain.h"
#include "mapforge/ground_truth.h"
#include "mapforge/inference.h"
#include "mapforge/manifest.h"
#include "mapforge/report.h"
#include "mapforge/runner.h"

namespace mapforge {

// Environment variable naming the worker script when the config has none.
inline constexpr std::string_view kWorkerEnvVar = "MAPFORGE_WORKER";

struct ExperimentPaths {
  std::filesystem::path datasets = "datasets";
  std::filesystem::path runs = "runs";
  std::filesystem::path reports = "reports";
};

struct ExperimentConfig {
  std::vector<DomainId> domains;
  std::vector<std::uint64_t> stages;
  std::vector<ModelEndpoint> endpoints;
  std::uint64_t validate_n = 1000000;
  // Attempts per cell. Every attempt is persisted.
  std::uint32_t repeats = 1;
  // Query distinct endpoints concurrently instead of one after another.
  bool parallel_endpoints = false;
  ExperimentPaths paths;
  WorkerCommand worker;
  RunnerLimits limits;

  // Throws InvalidArgument on empty domains, stages, endpoints or worker,
  // a zero stage, validate_n < max(stages), zero repeats or duplicate model
  // names.
  void Validate() const;
  const ModelEndpoint& Endpoint(const std::string& model_name) const;
};

// Parses the JSON config schema documented in the README. Relative paths are
// resolved against base_dir. Throws ParseError or InvalidArgument.
ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& j,
                                          const std::filesystem::path& base_dir);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Ground-truth files under a directory, one per (domain, count), each with a
// SHA-256 sidecar. A file whose digest does not match is regenerated.
class GroundTruthCache {
 public:
  explicit GroundTruthCache(std::filesystem::path dir);

  const GroundTruth& Get(DomainId domain, std::uint64_t count);
  std::filesystem::path PathFor(DomainId domain, std::uint64_t count) const;

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
  std::map<std::pair<DomainId, std::uint64_t>, GroundTruth> loaded_;
};

// Receives one line per notable event (skipped fences, finished runs).
using ExperimentLog = std::function<void(const std::string&)>;

// One attempt of one cell; gt must hold at least validate_n points. The
// manifest is persisted before it is returned.
RunManifest RunCell(const ExperimentConfig& config,
                    const ModelEndpoint& endpoint, DomainId domain,
                    std::uint64_t stage, std::uint32_t attempt,
                    const GroundTruth& gt, ManifestStore& store,
                    const ExperimentLog& log = {});

// Validates the config (the only source of exceptions) and runs every cell.
ResultsTable RunExperiment(const ExperimentConfig& config,
                           const ExperimentLog& log = {});

}  // namespace mapforge

#endif  // MAPFORGE_EXPERIMENT_H_
