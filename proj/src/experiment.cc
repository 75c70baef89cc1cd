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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "mapforge/digest.h"
#include "mapforge/error.h"
#include "mapforge/extract.h"
#include "mapforge/prompt.h"
#include "mapforge/validation.h"

namespace mapforge {
namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelKeys = {
    "domains", "stages",   "endpoints",          "validate_n",
    "repeats", "paths",    "parallel_endpoints", "runner"};

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

ModelEndpoint EndpointFromJson(const json& j) {
  ModelEndpoint e;
  e.base_url = j.at("base_url").get<std::string>();
  e.model_name = j.at("model").get<std::string>();
  if (j.contains("params")) {
    e.params = j.at("params");
    if (!e.params.is_object()) throw ParseError("endpoint params must be an object");
  }
  if (j.contains("timeout_s")) e.timeout_seconds = j.at("timeout_s").get<double>();
  if (j.contains("api_key")) e.api_key = j.at("api_key").get<std::string>();
  if (j.contains("api_key_env")) {
    const std::string var = j.at("api_key_env").get<std::string>();
    if (const char* v = std::getenv(var.c_str()); v != nullptr && *v != '\0') {
      e.api_key = v;
    }
  }
  return e;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

double SecondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (domains.empty()) throw InvalidArgument("config lists no domains");
  if (stages.empty()) throw InvalidArgument("config lists no stages");
  if (endpoints.empty()) throw InvalidArgument("config lists no endpoints");
  if (worker.argv.empty()) {
    throw InvalidArgument("no worker configured (set runner.worker or $" +
                          std::string(kWorkerEnvVar) + ")");
  }
  if (repeats == 0) throw InvalidArgument("repeats must be >= 1");
  for (std::uint64_t s : stages) {
    if (s == 0) throw InvalidArgument("stages must be >= 1");
  }
  const std::uint64_t max_stage = *std::max_element(stages.begin(), stages.end());
  if (validate_n < max_stage) {
    throw InvalidArgument("validate_n must be at least the largest stage");
  }
  if (limits.timeout_seconds <= 0 || limits.batch_size == 0) {
    throw InvalidArgument("runner timeout and batch size must be positive");
  }
  std::set<std::string> names;
  for (const ModelEndpoint& e : endpoints) {
    e.Validate();
    if (!names.insert(e.model_name).second) {
      throw InvalidArgument("duplicate model '" + e.model_name + "'");
    }
  }
}

const ModelEndpoint& ExperimentConfig::Endpoint(
    const std::string& model_name) const {
  for (const ModelEndpoint& e : endpoints) {
    if (e.model_name == model_name) return e;
  }
  throw NotFoundError("no endpoint for model '" + model_name + "'");
}

ExperimentConfig ExperimentConfigFromJson(const json& j,
                                          const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kTopLevelKeys.count(key)) {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  ExperimentConfig c;
  try {
    const json& domains = j.at("domains");
    if (domains.is_string() && domains.get<std::string>() == "all") {
      c.domains.assign(kAllDomains.begin(), kAllDomains.end());
    } else {
      for (const json& d : domains) {
        c.domains.push_back(DomainFromString(d.get<std::string>()));
      }
    }
    if (j.contains("stages")) {
      c.stages = j.at("stages").get<std::vector<std::uint64_t>>();
    } else {
      c.stages.assign(kStandardStages.begin(), kStandardStages.end());
    }
    for (const json& e : j.at("endpoints")) c.endpoints.push_back(EndpointFromJson(e));
    if (j.contains("validate_n")) c.validate_n = j.at("validate_n").get<std::uint64_t>();
    if (j.contains("repeats")) c.repeats = j.at("repeats").get<std::uint32_t>();
    if (j.contains("parallel_endpoints")) {
      c.parallel_endpoints = j.at("parallel_endpoints").get<bool>();
    }

    const json paths = j.value("paths", json::object());
    c.paths.datasets = Resolve(base_dir, paths.value("datasets", "datasets"));
    c.paths.runs = Resolve(base_dir, paths.value("runs", "runs"));
    c.paths.reports = Resolve(base_dir, paths.value("reports", "reports"));

    const json runner = j.value("runner", json::object());
    if (runner.contains("command")) {
      c.worker.argv = runner.at("command").get<std::vector<std::string>>();
    } else {
      std::string worker;
      if (runner.contains("worker")) {
        worker = Resolve(base_dir, runner.at("worker").get<std::string>());
      } else if (const char* env = std::getenv(std::string(kWorkerEnvVar).c_str());
                 env != nullptr && *env != '\0') {
        worker = env;
      }
      if (!worker.empty()) {
        c.worker.argv = {runner.value("python", "python3"), worker};
      }
    }
    if (runner.contains("timeout_s")) {
      c.limits.timeout_seconds = runner.at("timeout_s").get<double>();
    }
    if (runner.contains("batch_size")) {
      c.limits.batch_size = runner.at("batch_size").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  c.Validate();
  return c;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return ExperimentConfigFromJson(j, path.parent_path());
}

GroundTruthCache::GroundTruthCache(std::filesystem::path dir)
    : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path GroundTruthCache::PathFor(DomainId domain,
                                                std::uint64_t count) const {
  return dir_ /
         (std::string(DomainName(domain)) + "-" + std::to_string(count) + ".jsonl");
}

const GroundTruth& GroundTruthCache::Get(DomainId domain, std::uint64_t count) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto key = std::make_pair(domain, count);
  if (auto it = loaded_.find(key); it != loaded_.end()) return it->second;

  const std::filesystem::path path = PathFor(domain, count);
  const std::filesystem::path digest_path = path.string() + ".sha256";
  if (std::filesystem::exists(path) && std::filesystem::exists(digest_path)) {
    const std::string text = ReadFile(path);
    std::string expected = ReadFile(digest_path);
    while (!expected.empty() && std::isspace(static_cast<unsigned char>(expected.back()))) {
      expected.pop_back();
    }
    if (Sha256Hex(text) == expected) {
      std::istringstream in(text);
      GroundTruth gt{domain, ReadCoordsJsonl(in)};
      if (gt.count() == count) {
        return loaded_.emplace(key, std::move(gt)).first->second;
      }
    }
  }
  GroundTruth gt = GenerateGroundTruth(domain, count);
  std::ostringstream out;
  WriteGroundTruthJsonl(out, gt.coords);
  const std::string text = out.str();
  WriteFileAtomically(path, text);
  WriteFileAtomically(digest_path, Sha256Hex(text) + "\n");
  return loaded_.emplace(key, std::move(gt)).first->second;
}

RunManifest RunCell(const ExperimentConfig& config,
                    const ModelEndpoint& endpoint, DomainId domain,
                    std::uint64_t stage, std::uint32_t attempt,
                    const GroundTruth& gt, ManifestStore& store,
                    const ExperimentLog& log) {
  RunManifest m;
  m.domain = domain;
  m.stage = stage;
  m.model_name = endpoint.model_name;
  m.base_url = endpoint.base_url;
  m.params = endpoint.params;
  m.attempt = attempt;
  m.validate_n = gt.count();

  const std::string prompt = BuildPrompt({domain, stage}, gt);
  m.prompt_hash = Sha256Hex(prompt);
  m.started_at = UtcTimestamp();

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const InferenceResult result = RunInference(endpoint, prompt);
    m.raw_response = result.text;
    m.inference_seconds = result.seconds;
  } catch (const InferenceError& e) {
    m.inference_seconds = SecondsSince(t0);
    m.inference_error =
        std::string(InferenceErrorKindName(e.kind())) + ": " + e.what();
    m.verdict = CandidateVerdict::Failure(
        e.kind() == InferenceError::Kind::kTimeout
            ? VerdictStatus::kTimeout
            : VerdictStatus::kRuntimeFailure,
        *m.inference_error);
  }

  if (!m.inference_error) {
    const Extraction extraction = ExtractCode(m.raw_response);
    if (extraction.ignored_extra_fences && log) {
      log(std::string(DomainName(domain)) + " s" + std::to_string(stage) + " " +
          endpoint.model_name + ": response has several fenced blocks, using "
          "the first");
    }
    if (!extraction.source) {
      m.verdict = extraction.verdict;
    } else {
      m.extracted_source = extraction.source;
      try {
        m.report = ValidateCandidate(config.worker, *extraction.source, gt,
                                     config.limits);
      } catch (const std::exception& e) {
        m.report = ScoreCandidate(
            CandidateVerdict::Failure(VerdictStatus::kRuntimeFailure, e.what()),
            gt);
      }
      m.verdict = m.report->verdict;
    }
  }
  if (!m.report) m.report = ScoreCandidate(m.verdict, gt);
  m.finished_at = UtcTimestamp();

  // Run ids carry a random suffix; retry the rare collision.
  for (int tries = 0;; ++tries) {
    m.run_id = NewRunId(domain, stage, endpoint.model_name);
    try {
      store.Persist(m);
      break;
    } catch (const ConflictError&) {
      if (tries >= 3) throw;
    }
  }
  if (log) {
    log(m.run_id + ": " + std::string(VerdictName(m.verdict.status)) +
        " ordered=" + std::to_string(m.report->ordered) +
        " anyorder=" + std::to_string(m.report->anyorder));
  }
  return m;
}

ResultsTable RunExperiment(const ExperimentConfig& config,
                           const ExperimentLog& log) {
  config.Validate();
  GroundTruthCache cache(config.paths.datasets);
  ManifestStore store(config.paths.runs);
  for (DomainId d : config.domains) cache.Get(d, config.validate_n);

  std::mutex mu;
  std::mutex log_mu;
  std::vector<RunManifest> manifests;
  ExperimentLog locked_log;
  if (log) {
    locked_log = [&log, &log_mu](const std::string& line) {
      std::lock_guard<std::mutex> lock(log_mu);
      log(line);
    };
  }
  auto sweep = [&](const ModelEndpoint& endpoint) {
    for (DomainId domain : config.domains) {
      const GroundTruth& gt = cache.Get(domain, config.validate_n);
      for (std::uint64_t stage : config.stages) {
        for (std::uint32_t attempt = 0; attempt < config.repeats; ++attempt) {
          try {
            RunManifest m =
                RunCell(config, endpoint, domain, stage, attempt, gt, store,
                        locked_log);
            std::lock_guard<std::mutex> lock(mu);
            manifests.push_back(std::move(m));
          } catch (const std::exception& e) {
            if (locked_log) {
              locked_log(std::string(DomainName(domain)) + " s" +
                  std::to_string(stage) + " " + endpoint.model_name +
                  ": run not recorded: " + e.what());
            }
          }
        }
      }
    }
  };

  if (config.parallel_endpoints) {
    std::vector<std::jthread> threads;
    for (const ModelEndpoint& e : config.endpoints) {
      threads.emplace_back([&sweep, &e] { sweep(e); });
    }
  } else {
    for (const ModelEndpoint& e : config.endpoints) sweep(e);
  }
  return TableFromManifests(manifests);
}

}  // namespace mapforge
