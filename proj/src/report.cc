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

#include "mapforge/report.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

#include "mapforge/error.h"

namespace mapforge {
namespace {

std::string_view VerdictTag(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kOk: return "";
    case VerdictStatus::kNonCompiling: return "NC";
    case VerdictStatus::kRuntimeFailure: return "RF";
    case VerdictStatus::kTimeout: return "TO";
  }
  return "";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Pipes would split a markdown cell.
std::string MarkdownText(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += (ch == '\n' || ch == '\r') ? ' ' : ch;
  }
  return out;
}

std::string Fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string RenderCsv(const ResultsTable& table) {
  std::string out = "domain,model,stage,ordered,anyorder,verdict\n";
  for (const auto& [key, row] : table.rows()) {
    out += std::string(DomainName(key.domain)) + "," +
           CsvField(key.model_name) + "," + std::to_string(key.stage) + "," +
           Fraction(row.ordered) + "," + Fraction(row.anyorder) + "," +
           std::string(VerdictName(row.verdict.status)) + "\n";
  }
  return out;
}

std::string RenderMarkdown(const ResultsTable& table) {
  std::string out = "# Results\n";
  for (DomainId domain : kAllDomains) {
    std::set<std::string> models;
    std::set<std::uint64_t> stages;
    for (const auto& [key, row] : table.rows()) {
      if (key.domain != domain) continue;
      models.insert(key.model_name);
      stages.insert(key.stage);
    }
    if (models.empty()) continue;

    out += "\n## " + std::string(DomainName(domain)) + "\n\n| Model |";
    for (std::uint64_t s : stages) {
      const std::string label = std::to_string(s) + " pts";
      out += " " + label + " Ord. | " + label + " Any |";
    }
    out += "\n|---|";
    for (std::size_t i = 0; i < stages.size(); ++i) out += "---:|---:|";
    out += "\n";
    for (const std::string& model : models) {
      out += "| " + MarkdownText(model) + " |";
      for (std::uint64_t s : stages) {
        const auto row = table.Get({domain, model, s});
        if (!row) {
          out += " - | - |";
          continue;
        }
        out += " " + FormatCell(row->ordered, row->verdict) + " | " +
               FormatCell(row->anyorder, row->verdict) + " |";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace

void ResultsTable::Set(const ResultKey& key, const ResultRow& row) {
  for (double v : {row.ordered, row.anyorder}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidArgument("result fractions must lie in [0, 1]");
    }
  }
  rows_[key] = row;
}

std::optional<ResultRow> ResultsTable::Get(const ResultKey& key) const {
  const auto it = rows_.find(key);
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

ResultRow RowFromManifest(const RunManifest& m) {
  if (m.report) return {m.report->ordered, m.report->anyorder, m.verdict};
  return {0.0, 0.0, m.verdict};
}

ResultsTable TableFromManifests(std::span<const RunManifest> manifests) {
  std::map<ResultKey, const RunManifest*> latest;
  for (const RunManifest& m : manifests) {
    const ResultKey key{m.domain, m.model_name, m.stage};
    const RunManifest*& slot = latest[key];
    if (slot == nullptr ||
        std::tie(slot->finished_at, slot->attempt, slot->run_id) <
            std::tie(m.finished_at, m.attempt, m.run_id)) {
      slot = &m;
    }
  }
  ResultsTable table;
  for (const auto& [key, m] : latest) table.Set(key, RowFromManifest(*m));
  return table;
}

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  std::string lower;
  for (char ch : name) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (lower == "csv") return ReportFormat::kCsv;
  if (lower == "markdown" || lower == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string FormatCell(double fraction, const CandidateVerdict& verdict) {
  // Integer hundredths of a percent, truncated.
  const auto bp = static_cast<long long>(std::floor(fraction * 10000.0 + 1e-9));
  char buf[48];
  std::snprintf(buf, sizeof buf, "%lld.%02lld%%", bp / 100, bp % 100);
  std::string out = buf;
  const std::string_view tag = VerdictTag(verdict.status);
  if (!tag.empty()) out += " (" + std::string(tag) + ")";
  return out;
}

std::string RenderReport(const ResultsTable& table, ReportFormat format) {
  if (table.empty()) throw InvalidArgument("cannot render an empty table");
  return format == ReportFormat::kCsv ? RenderCsv(table)
                                      : RenderMarkdown(table);
}

}  // namespace mapforge
