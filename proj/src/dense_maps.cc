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

#include "mapforge/dense_maps.h"

#include <bit>
#include <cmath>
#include <string>

#include "mapforge/error.h"

namespace mapforge {
namespace {

using u128 = unsigned __int128;

void CheckIndex(LinearIndex lambda, LinearIndex max) {
  if (lambda > max) {
    throw CapacityError("index " + std::to_string(lambda) +
                        " exceeds the supported maximum " +
                        std::to_string(max));
  }
}

u128 Tetrahedral128(std::uint64_t z) {
  return static_cast<u128>(z) * (z + 1) * (z + 2) / 6;
}

}  // namespace

std::uint64_t IntegerSqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton iteration from an overestimate decreases monotonically to the
  // floor of the root.
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    const std::uint64_t next = (x + n / x) / 2;
    if (next >= x) break;
    x = next;
  }
  return x;
}

std::uint64_t TriangularNumber(std::uint64_t x) {
  const u128 t = static_cast<u128>(x) * (x + 1) / 2;
  if (t > UINT64_MAX) {
    throw CapacityError("triangular number of " + std::to_string(x) +
                        " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(t);
}

std::uint64_t TetrahedralNumber(std::uint64_t z) {
  const u128 t = Tetrahedral128(z);
  if (t > UINT64_MAX) {
    throw CapacityError("tetrahedral number of " + std::to_string(z) +
                        " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(t);
}

Coord MapTriangular(LinearIndex lambda) {
  CheckIndex(lambda, kMaxTriangularIndex);
  // x = floor((sqrt(8*lambda + 1) - 1) / 2), then nudge until
  // T(x) <= lambda < T(x + 1).
  std::uint64_t x = (IntegerSqrt(8 * lambda + 1) - 1) / 2;
  auto tri = [](std::uint64_t v) {
    return static_cast<u128>(v) * (v + 1) / 2;
  };
  while (tri(x) > lambda) --x;
  while (tri(x + 1) <= lambda) ++x;
  const auto y = static_cast<std::uint64_t>(lambda - tri(x));
  return Coord(x, y);
}

Coord MapPyramid(LinearIndex lambda) {
  CheckIndex(lambda, kMaxLinearIndex);
  // Seed from the real cube root of 6*lambda; the integer loops below make
  // the result exact regardless of how the seed rounds.
  auto z = static_cast<std::uint64_t>(
      std::cbrt(6.0 * static_cast<double>(lambda)));
  while (z > 0 && Tetrahedral128(z) > lambda) --z;
  while (Tetrahedral128(z + 1) <= lambda) ++z;
  const auto layer_offset =
      static_cast<std::uint64_t>(lambda - Tetrahedral128(z));
  const Coord xy = MapTriangular(layer_offset);
  return Coord(xy.x(), xy.y(), z);
}

}  // namespace mapforge
