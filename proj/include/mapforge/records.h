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

#ifndef MAPFORGE_RECORDS_H_
#define MAPFORGE_RECORDS_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapforge/coord.h"

namespace mapforge {

// Result of evaluating a candidate at one index: either a coordinate or the
// error message the candidate raised there.
struct CandidateRecord {
  std::optional<Coord> coord;
  std::string error;

  static CandidateRecord Ok(const Coord& c) { return {c, {}}; }
  static CandidateRecord Failure(std::string message) {
    return {std::nullopt, std::move(message)};
  }
  bool ok() const { return coord.has_value(); }

  friend bool operator==(const CandidateRecord&,
                         const CandidateRecord&) = default;
};

// JSON Lines shared by ground-truth and candidate files:
//   {"n": 3, "c": [2, 0]}
//   {"n": 4, "err": "ValueError: ..."}
// Records must be numbered 0, 1, 2, ... without gaps.
void WriteRecordsJsonl(std::ostream& out,
                       std::span<const CandidateRecord> records);
std::vector<CandidateRecord> ReadRecordsJsonl(std::istream& in);

// Formats one record line without the trailing newline.
std::string FormatRecordLine(std::uint64_t n, const Coord& c);

}  // namespace mapforge

#endif  // MAPFORGE_RECORDS_H_
