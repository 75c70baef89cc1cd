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

#include "mapforge/validation.h"

#include <algorithm>

#include "mapforge/error.h"

namespace mapforge {
namespace {

void CheckLength(std::span<const CandidateRecord> candidate,
                 const GroundTruth& gt) {
  if (candidate.size() != gt.count()) {
    throw InvalidArgument("candidate has " + std::to_string(candidate.size()) +
                          " records but ground truth has " +
                          std::to_string(gt.count()));
  }
}

// Marks which ground-truth coordinates occur anywhere in the candidate.
// Returns the marks and the number of distinct Ok coordinates.
struct Coverage {
  std::vector<bool> found;
  std::uint64_t distinct_candidates = 0;
  std::uint64_t ok_records = 0;
};

Coverage ComputeCoverage(std::span<const CandidateRecord> candidate,
                         const GroundTruth& gt) {
  std::vector<Coord> sorted_gt = gt.coords;
  std::sort(sorted_gt.begin(), sorted_gt.end());

  std::vector<Coord> produced;
  produced.reserve(candidate.size());
  for (const CandidateRecord& r : candidate) {
    if (r.ok()) produced.push_back(*r.coord);
  }
  Coverage cov;
  cov.ok_records = produced.size();
  std::sort(produced.begin(), produced.end());
  produced.erase(std::unique(produced.begin(), produced.end()),
                 produced.end());
  cov.distinct_candidates = produced.size();

  cov.found.assign(sorted_gt.size(), false);
  for (const Coord& c : produced) {
    auto it = std::lower_bound(sorted_gt.begin(), sorted_gt.end(), c);
    if (it != sorted_gt.end() && *it == c) {
      cov.found[static_cast<std::size_t>(it - sorted_gt.begin())] = true;
    }
  }
  return cov;
}

}  // namespace

std::string_view VerdictName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kOk: return "Ok";
    case VerdictStatus::kNonCompiling: return "NonCompiling";
    case VerdictStatus::kRuntimeFailure: return "RuntimeFailure";
    case VerdictStatus::kTimeout: return "Timeout";
  }
  return "?";
}

std::optional<VerdictStatus> ParseVerdict(std::string_view name) {
  for (VerdictStatus s :
       {VerdictStatus::kOk, VerdictStatus::kNonCompiling,
        VerdictStatus::kRuntimeFailure, VerdictStatus::kTimeout}) {
    if (VerdictName(s) == name) return s;
  }
  return std::nullopt;
}

CandidateVerdict CandidateVerdict::Failure(VerdictStatus status,
                                           std::string detail) {
  if (detail.empty()) detail = std::string(VerdictName(status));
  return {status, std::move(detail)};
}

double OrderedAccuracy(std::span<const CandidateRecord> candidate,
                       const GroundTruth& gt) {
  CheckLength(candidate, gt);
  if (gt.count() == 0) return 0.0;
  std::uint64_t hits = 0;
  for (std::size_t k = 0; k < candidate.size(); ++k) {
    if (candidate[k].ok() && *candidate[k].coord == gt.coords[k]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(gt.count());
}

double AnyOrderAccuracy(std::span<const CandidateRecord> candidate,
                        const GroundTruth& gt) {
  CheckLength(candidate, gt);
  if (gt.count() == 0) return 0.0;
  const Coverage cov = ComputeCoverage(candidate, gt);
  const auto hits = std::count(cov.found.begin(), cov.found.end(), true);
  return static_cast<double>(hits) / static_cast<double>(gt.count());
}

BijectivityReport CheckBijective(std::span<const CandidateRecord> candidate,
                                 const GroundTruth& gt) {
  CheckLength(candidate, gt);
  const Coverage cov = ComputeCoverage(candidate, gt);
  BijectivityReport report;
  report.duplicates = cov.ok_records - cov.distinct_candidates;
  report.omissions = static_cast<std::uint64_t>(
      std::count(cov.found.begin(), cov.found.end(), false));
  report.bijective = report.duplicates == 0 && report.omissions == 0;
  return report;
}

AccuracyReport ScoreCandidate(const RunOutcome& outcome,
                              const GroundTruth& gt) {
  AccuracyReport report;
  if (const auto* verdict = std::get_if<CandidateVerdict>(&outcome)) {
    report.verdict = *verdict;
    if (report.verdict.ok()) {
      report.verdict = CandidateVerdict::Failure(
          VerdictStatus::kRuntimeFailure, "runner returned no records");
    }
    return report;
  }
  const auto& records = std::get<std::vector<CandidateRecord>>(outcome);
  if (records.size() != gt.count()) {
    report.verdict = CandidateVerdict::Failure(
        VerdictStatus::kRuntimeFailure,
        "expected " + std::to_string(gt.count()) + " records, got " +
            std::to_string(records.size()));
    return report;
  }
  report.ordered = OrderedAccuracy(records, gt);
  report.anyorder = AnyOrderAccuracy(records, gt);
  report.n_evaluated = records.size();
  report.verdict = CandidateVerdict::Ok();
  return report;
}

std::vector<CandidateRecord> ToRecords(std::span<const Coord> coords) {
  std::vector<CandidateRecord> out;
  out.reserve(coords.size());
  for (const Coord& c : coords) out.push_back(CandidateRecord::Ok(c));
  return out;
}

}  // namespace mapforge
