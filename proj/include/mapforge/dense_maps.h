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

// Closed-form maps for the two dense domains: the lower triangle
// {(x, y) : y <= x} enumerated row by row, and the tetrahedral pyramid
// {(x, y, z) : y <= x <= z} enumerated layer by layer.
//
// Both maps are evaluated entirely in integer arithmetic. The textbook
// formulas use real square / cube roots that misround near triangular and
// tetrahedral boundaries once the index gets large.

#ifndef MAPFORGE_DENSE_MAPS_H_
#define MAPFORGE_DENSE_MAPS_H_

#include <cstdint>

#include "mapforge/coord.h"

namespace mapforge {

// floor(sqrt(n)), exact for every 64-bit n.
std::uint64_t IntegerSqrt(std::uint64_t n);

// x(x+1)/2. Throws CapacityError if the result does not fit in 64 bits.
std::uint64_t TriangularNumber(std::uint64_t x);

// z(z+1)(z+2)/6. Throws CapacityError if the result does not fit in 64 bits.
std::uint64_t TetrahedralNumber(std::uint64_t z);

// Largest index MapTriangular accepts: 8*lambda + 1 must fit in 64 bits.
inline constexpr LinearIndex kMaxTriangularIndex =
    (UINT64_MAX - 1) / 8;

// lambda -> (x, y) with y <= x and x(x+1)/2 + y == lambda.
Coord MapTriangular(LinearIndex lambda);

// lambda -> (x, y, z) with y <= x <= z, where z is the layer holding lambda
// and (x, y) is the triangular map of the offset inside that layer.
Coord MapPyramid(LinearIndex lambda);

}  // namespace mapforge

#endif  // MAPFORGE_DENSE_MAPS_H_
