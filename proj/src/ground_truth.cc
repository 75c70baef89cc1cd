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

#include "mapforge/ground_truth.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <thread>

#include "mapforge/error.h"
#include "mapforge/records.h"

namespace mapforge {

GroundTruth GenerateGroundTruth(DomainId domain, std::uint64_t count,
                                unsigned partitions) {
  if (count == 0) throw InvalidArgument("ground truth needs count >= 1");
  if (count - 1 > kMaxLinearIndex) {
    throw CapacityError("ground truth count exceeds the index range");
  }
  if (partitions == 0) {
    partitions = std::max(1u, std::thread::hardware_concurrency());
  }
  partitions = static_cast<unsigned>(
      std::min<std::uint64_t>(partitions, count));

  GroundTruth gt{domain, std::vector<Coord>(count)};
  std::vector<std::exception_ptr> errors(partitions);
  auto fill = [&](unsigned part) {
    using u128 = unsigned __int128;
    const auto begin =
        static_cast<std::uint64_t>(u128{count} * part / partitions);
    const auto end =
        static_cast<std::uint64_t>(u128{count} * (part + 1) / partitions);
    try {
      for (std::uint64_t k = begin; k < end; ++k) {
        gt.coords[k] = MapDomain(domain, k);
      }
    } catch (...) {
      errors[part] = std::current_exception();
    }
  };
  if (partitions == 1) {
    fill(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(partitions);
    for (unsigned p = 0; p < partitions; ++p) workers.emplace_back(fill, p);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (!AllDistinct(gt.coords)) {
    throw Error("generated ground truth for " +
                std::string(DomainName(domain)) + " is not bijective");
  }
  return gt;
}

bool AllDistinct(std::span<const Coord> coords) {
  std::vector<Coord> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void WriteGroundTruthJsonl(std::ostream& out, std::span<const Coord> coords) {
  std::uint64_t n = 0;
  for (const Coord& c : coords) out << FormatRecordLine(n++, c) << '\n';
}

void WriteGroundTruthFile(const std::filesystem::path& path,
                          const GroundTruth& gt) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  WriteGroundTruthJsonl(out, gt.coords);
  if (!out.flush()) throw Error("failed writing " + path.string());
}

std::vector<Coord> ReadCoordsJsonl(std::istream& in) {
  std::vector<Coord> coords;
  for (CandidateRecord& r : ReadRecordsJsonl(in)) {
    if (!r.ok()) {
      throw ParseError("ground truth record " + std::to_string(coords.size()) +
                       " is an error record");
    }
    if (!coords.empty() && coords.front().dim() != r.coord->dim()) {
      throw ParseError("ground truth mixes 2D and 3D coordinates");
    }
    coords.push_back(*r.coord);
  }
  return coords;
}

GroundTruth ReadGroundTruthFile(const std::filesystem::path& path,
                                DomainId domain) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path.string());
  GroundTruth gt{domain, ReadCoordsJsonl(in)};
  if (!gt.coords.empty() && gt.coords.front().dim() != DomainDim(domain)) {
    throw ParseError(path.string() + " does not hold " +
                     std::string(DomainName(domain)) + " coordinates");
  }
  return gt;
}

}  // namespace mapforge
