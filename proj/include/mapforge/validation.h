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

// Scoring of candidate coordinate sequences against ground truth.
//
// Two accuracies are reported for every candidate:
//   ordered  - fraction of indices k whose candidate coordinate equals
//              gt.coords[k] exactly;
//   anyorder - fraction of ground-truth coordinates that the candidate
//              produces somewhere, ignoring the index it produced them at.
// Both share the denominator gt.count(). An index where the candidate raised
// is a mismatch for both.

#ifndef MAPFORGE_VALIDATION_H_
#define MAPFORGE_VALIDATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mapforge/ground_truth.h"
#include "mapforge/records.h"

namespace mapforge {

enum class VerdictStatus { kOk, kNonCompiling, kRuntimeFailure, kTimeout };

std::string_view VerdictName(VerdictStatus status);  // "Ok", "NonCompiling"..
std::optional<VerdictStatus> ParseVerdict(std::string_view name);

struct CandidateVerdict {
  VerdictStatus status = VerdictStatus::kOk;
  std::string detail;

  static CandidateVerdict Ok() { return {}; }
  // Failure verdicts always carry a reason; an empty one is replaced by the
  // status name.
  static CandidateVerdict Failure(VerdictStatus status, std::string detail);

  bool ok() const { return status == VerdictStatus::kOk; }
  friend bool operator==(const CandidateVerdict&,
                         const CandidateVerdict&) = default;
};

struct BijectivityReport {
  std::uint64_t duplicates = 0;
  std::uint64_t omissions = 0;
  bool bijective = false;
};

struct AccuracyReport {
  double ordered = 0.0;
  double anyorder = 0.0;
  std::uint64_t n_evaluated = 0;
  CandidateVerdict verdict;

  friend bool operator==(const AccuracyReport&,
                         const AccuracyReport&) = default;
};

// Everything a runner can hand back: the per-index records of a completed
// evaluation, or the verdict that stopped it.
using RunOutcome = std::variant<std::vector<CandidateRecord>, CandidateVerdict>;

// The three metrics throw InvalidArgument if the candidate length differs
// from gt.count().
double OrderedAccuracy(std::span<const CandidateRecord> candidate,
                       const GroundTruth& gt);
double AnyOrderAccuracy(std::span<const CandidateRecord> candidate,
                        const GroundTruth& gt);
BijectivityReport CheckBijective(std::span<const CandidateRecord> candidate,
                                 const GroundTruth& gt);

// Ok records -> both metrics; a verdict -> zeros with that verdict. A record
// sequence of the wrong length is reported as a RuntimeFailure.
AccuracyReport ScoreCandidate(const RunOutcome& outcome,
                              const GroundTruth& gt);

// Convenience for sequences of plain coordinates.
std::vector<CandidateRecord> ToRecords(std::span<const Coord> coords);

}  // namespace mapforge

#endif  // MAPFORGE_VALIDATION_H_
