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

#ifndef MAPFORGE_PROMPT_H_
#define MAPFORGE_PROMPT_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "mapforge/domain.h"
#include "mapforge/ground_truth.h"

namespace mapforge {

inline constexpr std::string_view kMappingDataPlaceholder =
    "__MAPPING_DATA_HERE__";

// Few-shot sizes used by the standard sweep.
inline constexpr std::array<std::uint64_t, 3> kStandardStages = {20, 50, 100};

struct PromptSpec {
  DomainId domain;
  std::uint64_t stage;  // number of points shown to the model, >= 1

  bool is_standard_stage() const;
};

// The inference prompt, with the placeholder intact, exactly as stored in
// assets/prompt_template.txt.
std::string_view PromptTemplate();

// "<n> -> (<c1>, <c2>[, <c3>])"
std::string FormatMappingLine(std::uint64_t n, const Coord& c);

// The template with the placeholder replaced by spec.stage mapping lines
// (LF separated, no trailing newline of their own). Throws InvalidArgument if
// stage is 0, if the ground truth belongs to another domain, or if it holds
// fewer than stage points.
std::string BuildPrompt(const PromptSpec& spec, const GroundTruth& gt);

}  // namespace mapforge

#endif  // MAPFORGE_PROMPT_H_
