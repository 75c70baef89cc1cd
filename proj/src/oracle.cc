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

#include "mapforge/oracle.h"

#include "mapforge/error.h"

namespace mapforge {
namespace {

constexpr std::uint64_t kMaxOracleCount = std::uint64_t{1} << 32;

std::vector<Coord> ScanTriangle(std::uint64_t count) {
  std::vector<Coord> out;
  out.reserve(count);
  for (std::uint64_t x = 0; out.size() < count; ++x) {
    for (std::uint64_t y = 0; y <= x && out.size() < count; ++y) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Coord> ScanPyramid(std::uint64_t count) {
  std::vector<Coord> out;
  out.reserve(count);
  for (std::uint64_t z = 0; out.size() < count; ++z) {
    for (std::uint64_t x = 0; x <= z && out.size() < count; ++x) {
      for (std::uint64_t y = 0; y <= x && out.size() < count; ++y) {
        out.emplace_back(x, y, z);
      }
    }
  }
  return out;
}

// Level k+1 is `base` translated copies of level k, copy d shifted by
// vectors[d] * scale^k.
std::vector<Coord> Subdivide(const FractalSpec& spec, std::uint64_t count) {
  std::vector<Coord> level = {spec.dim() == 2 ? Coord(0, 0)
                                              : Coord(0, 0, 0)};
  std::uint64_t side = 1;
  while (level.size() < count) {
    std::vector<Coord> next;
    next.reserve(level.size() * spec.base());
    for (const Coord& v : spec.vectors()) {
      for (const Coord& p : level) {
        if (next.size() == count) break;
        if (spec.dim() == 2) {
          next.emplace_back(p.x() + v.x() * side, p.y() + v.y() * side);
        } else {
          next.emplace_back(p.x() + v.x() * side, p.y() + v.y() * side,
                            p.z() + v.z() * side);
        }
      }
    }
    level = std::move(next);
    side *= spec.scale();
  }
  level.resize(count);
  return level;
}

}  // namespace

std::vector<Coord> OracleEnumerate(DomainId domain, std::uint64_t count) {
  if (count > kMaxOracleCount) {
    throw CapacityError("oracle enumeration is limited to 2^32 points");
  }
  if (count == 0) return {};
  switch (domain) {
    case DomainId::kTriangular2D: return ScanTriangle(count);
    case DomainId::kPyramid3D: return ScanPyramid(count);
    default: return Subdivide(BuiltinSpec(domain), count);
  }
}

}  // namespace mapforge
