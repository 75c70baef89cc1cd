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

#ifndef MAPFORGE_MANIFEST_H_
#define MAPFORGE_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mapforge/domain.h"
#include "mapforge/validation.h"

namespace mapforge {

// Everything recorded about one inference attempt. raw_response is stored
// verbatim so a run can be re-extracted and re-scored without the model.
struct RunManifest {
  std::string run_id;
  DomainId domain = DomainId::kTriangular2D;
  std::uint64_t stage = 0;
  std::string model_name;
  std::string base_url;
  nlohmann::json params = nlohmann::json::object();
  std::uint32_t attempt = 0;
  std::string prompt_hash;  // SHA-256 of the exact prompt text
  std::string raw_response;
  std::optional<std::string> extracted_source;
  // Set when the model request itself failed ("<kind>: <message>"); the
  // verdict is then Timeout or RuntimeFailure and there is no source.
  std::optional<std::string> inference_error;
  CandidateVerdict verdict;
  std::optional<AccuracyReport> report;
  std::uint64_t validate_n = 0;
  std::string started_at;   // ISO 8601, UTC
  std::string finished_at;  // ISO 8601, UTC
  double inference_seconds = 0.0;
  // Inference-host energy for this attempt, supplied by the operator.
  std::optional<double> joules;

  // Throws InvalidArgument if extracted_source is absent while the verdict
  // is not NonCompiling (unless inference failed), if an inference failure
  // carries an Ok or NonCompiling verdict, or if the run_id is not a usable
  // file name.
  void Validate() const;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

nlohmann::json ManifestToJson(const RunManifest& m);
// Throws ParseError on missing or mistyped fields.
RunManifest ManifestFromJson(const nlohmann::json& j);

// "<Domain>-s<stage>-<model>-<yyyymmddThhmmss>-<8 hex>", restricted to
// characters safe in file names.
std::string NewRunId(DomainId domain, std::uint64_t stage,
                     const std::string& model_name);

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string UtcTimestamp();

// One JSON document per run in a directory, file name = run_id + ".json".
// Writes are serialized; concurrent persists of distinct ids are safe.
class ManifestStore {
 public:
  explicit ManifestStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // Throws ConflictError if the id already exists.
  void Persist(const RunManifest& manifest);
  // Throws NotFoundError for an unknown id.
  RunManifest Load(const std::string& run_id) const;
  bool Contains(const std::string& run_id) const;
  // All manifests in the directory, sorted by run_id.
  std::vector<RunManifest> LoadAll() const;

 private:
  std::filesystem::path PathFor(const std::string& run_id) const;

  std::filesystem::path dir_;
  std::mutex write_mu_;
};

}  // namespace mapforge

#endif  // MAPFORGE_MANIFEST_H_
