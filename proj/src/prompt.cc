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

#include "mapforge/prompt.h"

#include <algorithm>

#include "mapforge/error.h"

namespace mapforge {
namespace {
#include "prompt_template.inc"
}  // namespace

bool PromptSpec::is_standard_stage() const {
  return std::find(kStandardStages.begin(), kStandardStages.end(), stage) !=
         kStandardStages.end();
}

std::string_view PromptTemplate() {
  return std::string_view(kPromptTemplate, sizeof(kPromptTemplate) - 1);
}

std::string FormatMappingLine(std::uint64_t n, const Coord& c) {
  return std::to_string(n) + " -> " + c.ToString();
}

std::string BuildPrompt(const PromptSpec& spec, const GroundTruth& gt) {
  if (spec.stage == 0) throw InvalidArgument("prompt stage must be >= 1");
  if (gt.domain != spec.domain) {
    throw InvalidArgument("ground truth is for " +
                          std::string(DomainName(gt.domain)) + ", prompt for " +
                          std::string(DomainName(spec.domain)));
  }
  if (gt.count() < spec.stage) {
    throw InvalidArgument("stage " + std::to_string(spec.stage) +
                          " needs that many ground-truth points, have " +
                          std::to_string(gt.count()));
  }
  std::string data;
  for (std::uint64_t n = 0; n < spec.stage; ++n) {
    if (n > 0) data += '\n';
    data += FormatMappingLine(n, gt.coords[n]);
  }
  const std::string_view tmpl = PromptTemplate();
  const std::size_t at = tmpl.find(kMappingDataPlaceholder);
  std::string out;
  out.reserve(tmpl.size() + data.size());
  out.append(tmpl.substr(0, at));
  out.append(data);
  out.append(tmpl.substr(at + kMappingDataPlaceholder.size()));
  return out;
}

}  // namespace mapforge
