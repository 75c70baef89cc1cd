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

#ifndef MAPFORGE_INFERENCE_H_
#define MAPFORGE_INFERENCE_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mapforge/error.h"

namespace mapforge {

inline constexpr std::string_view kApiKeyEnvVar = "MAPFORGE_API_KEY";

// An OpenAI-compatible chat-completions server.
struct ModelEndpoint {
  // e.g. "http://localhost:11434/v1"; requests go to <base_url>/chat/completions.
  std::string base_url;
  std::string model_name;
  // Merged verbatim into the request body. Empty means server defaults.
  nlohmann::json params = nlohmann::json::object();
  double timeout_seconds = 600.0;
  // Bearer token. Falls back to $MAPFORGE_API_KEY when unset.
  std::optional<std::string> api_key;

  // Throws InvalidArgument on an empty URL or model, or a non-positive
  // timeout.
  void Validate() const;
};

class InferenceError : public Error {
 public:
  enum class Kind { kNetwork, kHttpStatus, kTimeout, kBadResponse };

  InferenceError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view InferenceErrorKindName(InferenceError::Kind kind);

struct InferenceResult {
  std::string text;
  double seconds = 0.0;
};

// Sends the prompt as a single user message and returns the first choice's
// content. Throws InferenceError; the kind tells network failures, HTTP error
// statuses, timeouts and unparseable bodies apart.
InferenceResult RunInference(const ModelEndpoint& endpoint,
                             std::string_view prompt);

}  // namespace mapforge

#endif  // MAPFORGE_INFERENCE_H_
