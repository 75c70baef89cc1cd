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

#include "mapforge/records.h"

#include <istream>
#include <ostream>

#include "json.hpp"
#include "mapforge/error.h"

namespace mapforge {

std::string FormatRecordLine(std::uint64_t n, const Coord& c) {
  std::string line = "{\"n\": " + std::to_string(n) + ", \"c\": [";
  for (int a = 0; a < c.dim(); ++a) {
    if (a > 0) line += ", ";
    line += std::to_string(c[a]);
  }
  line += "]}";
  return line;
}

void WriteRecordsJsonl(std::ostream& out,
                       std::span<const CandidateRecord> records) {
  std::uint64_t n = 0;
  for (const CandidateRecord& r : records) {
    if (r.ok()) {
      out << FormatRecordLine(n, *r.coord) << '\n';
    } else {
      nlohmann::json j = {{"n", n}, {"err", r.error}};
      out << j.dump() << '\n';
    }
    ++n;
  }
}

std::vector<CandidateRecord> ReadRecordsJsonl(std::istream& in) {
  std::vector<CandidateRecord> records;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(e.what());
    }
    if (!j.is_object() || !j.contains("n") ||
        !j["n"].is_number_unsigned()) {
      fail("record needs a non-negative integer \"n\"");
    }
    if (j["n"].get<std::uint64_t>() != records.size()) {
      fail("expected n = " + std::to_string(records.size()));
    }
    if (j.contains("err")) {
      if (!j["err"].is_string()) fail("\"err\" must be a string");
      records.push_back(CandidateRecord::Failure(j["err"].get<std::string>()));
      continue;
    }
    if (!j.contains("c") || !j["c"].is_array()) {
      fail("record needs \"c\" or \"err\"");
    }
    const auto& c = j["c"];
    if (c.size() != 2 && c.size() != 3) fail("\"c\" must have 2 or 3 items");
    for (const auto& v : c) {
      if (!v.is_number_unsigned()) {
        fail("coordinates must be non-negative integers");
      }
    }
    if (c.size() == 2) {
      records.push_back(CandidateRecord::Ok(
          Coord(c[0].get<std::uint64_t>(), c[1].get<std::uint64_t>())));
    } else {
      records.push_back(CandidateRecord::Ok(Coord(c[0].get<std::uint64_t>(),
                                                  c[1].get<std::uint64_t>(),
                                                  c[2].get<std::uint64_t>())));
    }
  }
  return records;
}

}  // namespace mapforge
