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

#ifndef MAPFORGE_REPORT_H_
#define MAPFORGE_REPORT_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mapforge/domain.h"
#include "mapforge/manifest.h"
#include "mapforge/validation.h"

namespace mapforge {

struct ResultKey {
  DomainId domain;
  std::string model_name;
  std::uint64_t stage;

  friend auto operator<=>(const ResultKey&, const ResultKey&) = default;
};

struct ResultRow {
  double ordered = 0.0;
  double anyorder = 0.0;
  CandidateVerdict verdict;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

class ResultsTable {
 public:
  // Inserts or replaces the row for key. Throws InvalidArgument for
  // fractions outside [0, 1].
  void Set(const ResultKey& key, const ResultRow& row);
  std::optional<ResultRow> Get(const ResultKey& key) const;

  bool empty() const { return rows_.empty(); }
  std::size_t size() const { return rows_.size(); }
  const std::map<ResultKey, ResultRow>& rows() const { return rows_; }

 private:
  std::map<ResultKey, ResultRow> rows_;
};

ResultRow RowFromManifest(const RunManifest& m);

// When a key has several attempts the one with the latest finished_at wins
// (ties go to the higher attempt, then the larger run_id).
ResultsTable TableFromManifests(std::span<const RunManifest> manifests);

enum class ReportFormat { kCsv, kMarkdown };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// "100.00%", "0.00% (NC)", "12.34% (TO)", "3.00% (RF)". Truncated, not
// rounded, so only exact results print as 100.00%.
std::string FormatCell(double fraction, const CandidateVerdict& verdict);

// Markdown: one section per domain in DomainId order, one row per model
// (sorted), an (Ord., Any) column pair per stage. CSV: one line per row.
// Throws InvalidArgument on an empty table.
std::string RenderReport(const ResultsTable& table, ReportFormat format);

}  // namespace mapforge

#endif  // MAPFORGE_REPORT_H_
