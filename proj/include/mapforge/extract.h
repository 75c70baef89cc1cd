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

#ifndef MAPFORGE_EXTRACT_H_
#define MAPFORGE_EXTRACT_H_

#include <optional>
#include <string>
#include <string_view>

#include "mapforge/validation.h"

namespace mapforge {

inline constexpr std::string_view kCandidateFunctionName =
    "map_to_coordinates";

struct Extraction {
  // Present iff verdict is Ok.
  std::optional<std::string> source;
  CandidateVerdict verdict;
  // More than one fenced block was found; only the first was used.
  bool ignored_extra_fences = false;
};

// Pulls the candidate source out of a raw model response. The first fenced
// block wins; without a fence the whole response is used after dropping
// <think>...</think> sections. The result must define a top-level
// `map_to_coordinates` with exactly one parameter, otherwise the verdict is
// NonCompiling.
Extraction ExtractCode(std::string_view raw);

// True iff `source` has a top-level `def map_to_coordinates(<one param>)`.
bool DefinesCandidateFunction(std::string_view source);

}  // namespace mapforge

#endif  // MAPFORGE_EXTRACT_H_
