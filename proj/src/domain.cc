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

#include "mapforge/domain.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "mapforge/dense_maps.h"
#include "mapforge/error.h"

namespace mapforge {
namespace {

// Cells of {0,1,2}^dim with fewer than two components equal to 1, in
// ascending lexicographic order. In 2D this drops only the centre.
std::vector<Coord> TernaryCellsWithoutVoids(int dim) {
  std::vector<Coord> cells;
  for (std::uint64_t x = 0; x < 3; ++x) {
    for (std::uint64_t y = 0; y < 3; ++y) {
      if (dim == 2) {
        if (x == 1 && y == 1) continue;
        cells.emplace_back(x, y);
        continue;
      }
      for (std::uint64_t z = 0; z < 3; ++z) {
        if ((x == 1) + (y == 1) + (z == 1) >= 2) continue;
        cells.emplace_back(x, y, z);
      }
    }
  }
  return cells;
}

// Counts the base-3 digit positions of the given values that equal 1,
// returning the largest per-position count.
int MaxOnesPerTernaryDigit(std::uint64_t a, std::uint64_t b,
                           std::uint64_t c) {
  int worst = 0;
  while (a != 0 || b != 0 || c != 0) {
    worst = std::max(worst, (a % 3 == 1) + (b % 3 == 1) + (c % 3 == 1));
    a /= 3;
    b /= 3;
    c /= 3;
  }
  return worst;
}

}  // namespace

std::string_view DomainName(DomainId domain) {
  switch (domain) {
    case DomainId::kTriangular2D: return "Triangular2D";
    case DomainId::kPyramid3D: return "Pyramid3D";
    case DomainId::kGasket2D: return "Gasket2D";
    case DomainId::kCarpet2D: return "Carpet2D";
    case DomainId::kSierpinski3D: return "Sierpinski3D";
    case DomainId::kMenger3D: return "Menger3D";
  }
  return "?";
}

std::optional<DomainId> ParseDomain(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) {
      return static_cast<char>(std::tolower(ch));
    });
    return out;
  };
  const std::string wanted = lower(name);
  for (DomainId d : kAllDomains) {
    if (lower(DomainName(d)) == wanted) return d;
  }
  return std::nullopt;
}

DomainId DomainFromString(std::string_view name) {
  if (auto d = ParseDomain(name)) return *d;
  std::ostringstream msg;
  msg << "unknown domain '" << name << "'; expected one of";
  for (DomainId d : kAllDomains) msg << ' ' << DomainName(d);
  throw InvalidArgument(msg.str());
}

int DomainDim(DomainId domain) {
  switch (domain) {
    case DomainId::kTriangular2D:
    case DomainId::kGasket2D:
    case DomainId::kCarpet2D:
      return 2;
    default:
      return 3;
  }
}

bool IsFractal(DomainId domain) {
  return domain != DomainId::kTriangular2D && domain != DomainId::kPyramid3D;
}

const FractalSpec& BuiltinSpec(DomainId domain) {
  static const FractalSpec kGasket(3, 2, 2,
                                   {Coord(0, 0), Coord(1, 0), Coord(0, 1)});
  static const FractalSpec kSierpinski(
      4, 2, 3,
      {Coord(0, 0, 0), Coord(1, 0, 0), Coord(0, 1, 0), Coord(0, 0, 1)});
  static const FractalSpec kCarpet(8, 3, 2, TernaryCellsWithoutVoids(2));
  static const FractalSpec kMenger(20, 3, 3, TernaryCellsWithoutVoids(3));
  switch (domain) {
    case DomainId::kGasket2D: return kGasket;
    case DomainId::kSierpinski3D: return kSierpinski;
    case DomainId::kCarpet2D: return kCarpet;
    case DomainId::kMenger3D: return kMenger;
    default:
      throw InvalidArgument(std::string(DomainName(domain)) +
                            " is a dense domain and has no fractal spec");
  }
}

Coord MapDomain(DomainId domain, LinearIndex lambda) {
  switch (domain) {
    case DomainId::kTriangular2D: return MapTriangular(lambda);
    case DomainId::kPyramid3D: return MapPyramid(lambda);
    default: return FractalMap(BuiltinSpec(domain), lambda);
  }
}

bool Membership(DomainId domain, const Coord& c) {
  if (c.dim() != DomainDim(domain)) {
    throw InvalidArgument("coordinate " + c.ToString() + " does not match " +
                          std::string(DomainName(domain)));
  }
  switch (domain) {
    case DomainId::kTriangular2D:
      return c.y() <= c.x();
    case DomainId::kPyramid3D:
      return c.y() <= c.x() && c.x() <= c.z();
    case DomainId::kGasket2D:
      return (c.x() & c.y()) == 0;
    case DomainId::kSierpinski3D:
      return (c.x() & c.y()) == 0 && (c.x() & c.z()) == 0 &&
             (c.y() & c.z()) == 0;
    case DomainId::kCarpet2D:
      return MaxOnesPerTernaryDigit(c.x(), c.y(), 0) < 2;
    case DomainId::kMenger3D:
      return MaxOnesPerTernaryDigit(c.x(), c.y(), c.z()) < 2;
  }
  return false;
}

}  // namespace mapforge
