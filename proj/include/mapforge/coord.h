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

#ifndef MAPFORGE_COORD_H_
#define MAPFORGE_COORD_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>

namespace mapforge {

// Zero-based thread / linear index.
using LinearIndex = std::uint64_t;

// Largest index accepted by the mapping functions. Anything above is a
// CapacityError.
inline constexpr LinearIndex kMaxLinearIndex =
    static_cast<LinearIndex>(std::numeric_limits<std::int64_t>::max());

// A 2D or 3D lattice point. Unused trailing components are always zero so
// that equality and ordering are well defined across the whole value.
class Coord {
 public:
  constexpr Coord() = default;
  constexpr Coord(std::uint64_t x, std::uint64_t y) : dim_(2), c_{x, y, 0} {}
  constexpr Coord(std::uint64_t x, std::uint64_t y, std::uint64_t z)
      : dim_(3), c_{x, y, z} {}

  constexpr int dim() const { return dim_; }
  constexpr std::uint64_t operator[](std::size_t axis) const {
    return c_[axis];
  }
  constexpr std::uint64_t x() const { return c_[0]; }
  constexpr std::uint64_t y() const { return c_[1]; }
  constexpr std::uint64_t z() const { return c_[2]; }

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;

  // "(x, y)" / "(x, y, z)".
  std::string ToString() const;

 private:
  std::uint8_t dim_ = 2;
  std::array<std::uint64_t, 3> c_{};
};

std::ostream& operator<<(std::ostream& os, const Coord& c);

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL * (c.dim() + 1);
    for (std::size_t i = 0; i < 3; ++i) {
      h ^= c[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mapforge

#endif  // MAPFORGE_COORD_H_
