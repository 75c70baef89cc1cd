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

#ifndef MAPFORGE_GROUND_TRUTH_H_
#define MAPFORGE_GROUND_TRUTH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "mapforge/coord.h"
#include "mapforge/domain.h"

namespace mapforge {

// The first count() coordinates of a domain; coords[k] = MapDomain(domain, k)
// and all entries are distinct.
struct GroundTruth {
  DomainId domain;
  std::vector<Coord> coords;

  std::uint64_t count() const { return coords.size(); }
};

// Evaluates the closed-form map over [0, count), split into `partitions`
// contiguous index ranges evaluated on separate threads (0 picks the
// hardware concurrency). The result does not depend on the partitioning.
// Throws InvalidArgument for count == 0 and Error if the generated prefix is
// not bijective.
GroundTruth GenerateGroundTruth(DomainId domain, std::uint64_t count,
                                unsigned partitions = 0);

// True iff the coordinates are pairwise distinct.
bool AllDistinct(std::span<const Coord> coords);

// JSON Lines, one `{"n": <k>, "c": [x, y(, z)]}` record per index, ascending
// from 0, LF terminated.
void WriteGroundTruthJsonl(std::ostream& out, std::span<const Coord> coords);
void WriteGroundTruthFile(const std::filesystem::path& path,
                          const GroundTruth& gt);

// Reads the format above. Throws ParseError on malformed lines, gaps in n,
// or mixed dimensions.
std::vector<Coord> ReadCoordsJsonl(std::istream& in);
GroundTruth ReadGroundTruthFile(const std::filesystem::path& path,
                                DomainId domain);

}  // namespace mapforge

#endif  // MAPFORGE_GROUND_TRUTH_H_
