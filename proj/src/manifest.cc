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

#include "mapforge/manifest.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "mapforge/error.h"

namespace mapforge {
namespace {

using nlohmann::json;

bool IsSafeId(const std::string& id) {
  if (id.empty() || id.size() > 200 || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '-' || ch == '_' || ch == '.';
  });
}

json VerdictToJson(const CandidateVerdict& v) {
  return {{"status", VerdictName(v.status)}, {"detail", v.detail}};
}

CandidateVerdict VerdictFromJson(const json& j) {
  auto status = ParseVerdict(j.at("status").get<std::string>());
  if (!status) throw ParseError("unknown verdict status");
  return {*status, j.at("detail").get<std::string>()};
}

std::string FormatUtc(std::chrono::system_clock::time_point t,
                      const char* format) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, format, &tm);
  return buf;
}

}  // namespace

void RunManifest::Validate() const {
  if (!IsSafeId(run_id)) {
    throw InvalidArgument("run_id '" + run_id + "' is not a safe file name");
  }
  if (inference_error) {
    if (extracted_source || verdict.status == VerdictStatus::kOk ||
        verdict.status == VerdictStatus::kNonCompiling) {
      throw InvalidArgument(
          "a failed inference must have no source and a Timeout or "
          "RuntimeFailure verdict");
    }
    return;
  }
  if (!extracted_source && verdict.status != VerdictStatus::kNonCompiling) {
    throw InvalidArgument(
        "a manifest without extracted source must be NonCompiling");
  }
}

json ManifestToJson(const RunManifest& m) {
  json j = {
      {"run_id", m.run_id},
      {"domain", DomainName(m.domain)},
      {"stage", m.stage},
      {"model_name", m.model_name},
      {"base_url", m.base_url},
      {"params", m.params},
      {"attempt", m.attempt},
      {"prompt_hash", m.prompt_hash},
      {"raw_response", m.raw_response},
      {"extracted_source", m.extracted_source ? json(*m.extracted_source)
                                              : json(nullptr)},
      {"inference_error",
       m.inference_error ? json(*m.inference_error) : json(nullptr)},
      {"verdict", VerdictToJson(m.verdict)},
      {"validate_n", m.validate_n},
      {"started_at", m.started_at},
      {"finished_at", m.finished_at},
      {"inference_seconds", m.inference_seconds},
      {"joules", m.joules ? json(*m.joules) : json(nullptr)},
  };
  if (m.report) {
    j["report"] = {{"ordered", m.report->ordered},
                   {"anyorder", m.report->anyorder},
                   {"n_evaluated", m.report->n_evaluated},
                   {"verdict", VerdictToJson(m.report->verdict)}};
  } else {
    j["report"] = nullptr;
  }
  return j;
}

RunManifest ManifestFromJson(const json& j) {
  try {
    RunManifest m;
    m.run_id = j.at("run_id").get<std::string>();
    m.domain = DomainFromString(j.at("domain").get<std::string>());
    m.stage = j.at("stage").get<std::uint64_t>();
    m.model_name = j.at("model_name").get<std::string>();
    m.base_url = j.at("base_url").get<std::string>();
    m.params = j.at("params");
    m.attempt = j.at("attempt").get<std::uint32_t>();
    m.prompt_hash = j.at("prompt_hash").get<std::string>();
    m.raw_response = j.at("raw_response").get<std::string>();
    if (!j.at("extracted_source").is_null()) {
      m.extracted_source = j.at("extracted_source").get<std::string>();
    }
    if (j.contains("inference_error") && !j["inference_error"].is_null()) {
      m.inference_error = j["inference_error"].get<std::string>();
    }
    m.verdict = VerdictFromJson(j.at("verdict"));
    if (!j.at("report").is_null()) {
      const json& r = j.at("report");
      m.report = AccuracyReport{r.at("ordered").get<double>(),
                                r.at("anyorder").get<double>(),
                                r.at("n_evaluated").get<std::uint64_t>(),
                                VerdictFromJson(r.at("verdict"))};
    }
    m.validate_n = j.at("validate_n").get<std::uint64_t>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    m.inference_seconds = j.at("inference_seconds").get<double>();
    if (!j.at("joules").is_null()) m.joules = j.at("joules").get<double>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed run manifest: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed run manifest: ") + e.what());
  }
}

std::string NewRunId(DomainId domain, std::uint64_t stage,
                     const std::string& model_name) {
  std::string model;
  for (unsigned char ch : model_name) {
    model += (std::isalnum(ch) || ch == '.' || ch == '_') ? static_cast<char>(ch)
                                                          : '_';
  }
  if (model.size() > 64) model.resize(64);
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char suffix[9];
  std::snprintf(suffix, sizeof suffix, "%08x",
                static_cast<unsigned>(rng() & 0xffffffffu));
  return std::string(DomainName(domain)) + "-s" + std::to_string(stage) + "-" +
         model + "-" +
         FormatUtc(std::chrono::system_clock::now(), "%Y%m%dT%H%M%S") + "-" +
         suffix;
}

std::string UtcTimestamp() {
  return FormatUtc(std::chrono::system_clock::now(), "%Y-%m-%dT%H:%M:%SZ");
}

ManifestStore::ManifestStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ManifestStore::PathFor(const std::string& run_id) const {
  if (!IsSafeId(run_id)) {
    throw InvalidArgument("run_id '" + run_id + "' is not a safe file name");
  }
  return dir_ / (run_id + ".json");
}

void ManifestStore::Persist(const RunManifest& manifest) {
  manifest.Validate();
  const std::string text = ManifestToJson(manifest).dump(2) + "\n";
  const std::filesystem::path path = PathFor(manifest.run_id);

  std::lock_guard<std::mutex> lock(write_mu_);
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC,
                        0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      throw ConflictError("run " + manifest.run_id + " already exists");
    }
    throw Error("cannot create " + path.string());
  }
  std::size_t written = 0;
  while (written < text.size()) {
    const ssize_t n = ::write(fd, text.data() + written, text.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      std::filesystem::remove(path);
      throw Error("failed writing " + path.string());
    }
    written += static_cast<std::size_t>(n);
  }
  ::close(fd);
}

bool ManifestStore::Contains(const std::string& run_id) const {
  return std::filesystem::exists(PathFor(run_id));
}

RunManifest ManifestStore::Load(const std::string& run_id) const {
  const std::filesystem::path path = PathFor(run_id);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("no run with id " + run_id);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return ManifestFromJson(j);
}

std::vector<RunManifest> ManifestStore::LoadAll() const {
  std::vector<std::string> ids;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") {
      continue;
    }
    ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  std::vector<RunManifest> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) out.push_back(Load(id));
  return out;
}

}  // namespace mapforge
