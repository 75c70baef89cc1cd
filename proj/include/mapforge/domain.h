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

#ifndef MAPFORGE_DOMAIN_H_
#define MAPFORGE_DOMAIN_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mapforge/coord.h"
#include "mapforge/fractal.h"

namespace mapforge {

// Declaration order is the canonical order used for reports.
enum class DomainId {
  kTriangular2D,
  kPyramid3D,
  kGasket2D,
  kCarpet2D,
  kSierpinski3D,
  kMenger3D,
};

inline constexpr std::array<DomainId, 6> kAllDomains = {
    DomainId::kTriangular2D, DomainId::kPyramid3D,    DomainId::kGasket2D,
    DomainId::kCarpet2D,     DomainId::kSierpinski3D, DomainId::kMenger3D,
};

// "Triangular2D", "Pyramid3D", ...
std::string_view DomainName(DomainId domain);

// Case-insensitive inverse of DomainName.
std::optional<DomainId> ParseDomain(std::string_view name);

// Like ParseDomain but throws InvalidArgument listing the accepted names.
DomainId DomainFromString(std::string_view name);

int DomainDim(DomainId domain);
bool IsFractal(DomainId domain);

// Canonical digit rule of a fractal domain. Throws InvalidArgument for the
// dense domains.
//   Gasket2D      base 3,  scale 2, [(0,0), (1,0), (0,1)]
//   Sierpinski3D  base 4,  scale 2, [(0,0,0), (1,0,0), (0,1,0), (0,0,1)]
//   Carpet2D      base 8,  scale 3, {0,1,2}^2 minus (1,1), lexicographic
//   Menger3D      base 20, scale 3, {0,1,2}^3 minus cells with two or more
//                 components equal to 1, lexicographic
const FractalSpec& BuiltinSpec(DomainId domain);

Coord MapDomain(DomainId domain, LinearIndex lambda);

// Whether c belongs to the (unbounded) domain. Throws InvalidArgument if the
// coordinate dimension does not match.
bool Membership(DomainId domain, const Coord& c);

}  // namespace mapforge

#endif  // MAPFORGE_DOMAIN_H_
