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

#include "mapforge/fractal.h"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "mapforge/error.h"

namespace mapforge {
namespace {

using u128 = unsigned __int128;

Coord MakeCoord(int dim, const std::array<u128, 3>& c) {
  for (int a = 0; a < dim; ++a) {
    if (c[a] > UINT64_MAX) {
      throw CapacityError("fractal coordinate overflows 64 bits");
    }
  }
  if (dim == 2) {
    return Coord(static_cast<std::uint64_t>(c[0]),
                 static_cast<std::uint64_t>(c[1]));
  }
  return Coord(static_cast<std::uint64_t>(c[0]),
               static_cast<std::uint64_t>(c[1]),
               static_cast<std::uint64_t>(c[2]));
}

// Next power of the scale; saturates instead of wrapping so that a
// coordinate that actually uses it is caught by MakeCoord.
u128 NextPower(u128 power, std::uint32_t scale) {
  constexpr u128 kSaturated = static_cast<u128>(UINT64_MAX) + 1;
  const u128 next = power * scale;
  return next > kSaturated ? kSaturated : next;
}

}  // namespace

FractalSpec::FractalSpec(std::uint32_t base, std::uint32_t scale, int dim,
                         std::vector<Coord> vectors)
    : base_(base), scale_(scale), dim_(dim), vectors_(std::move(vectors)) {
  if (base_ < 2) throw InvalidArgument("fractal base must be >= 2");
  if (scale_ < 2) throw InvalidArgument("fractal scale must be >= 2");
  if (dim_ != 2 && dim_ != 3) {
    throw InvalidArgument("fractal dimension must be 2 or 3");
  }
  if (vectors_.size() != base_) {
    throw InvalidArgument("fractal spec needs exactly " +
                          std::to_string(base_) + " vectors, got " +
                          std::to_string(vectors_.size()));
  }
  std::set<Coord> seen;
  for (const Coord& v : vectors_) {
    if (v.dim() != dim_) {
      throw InvalidArgument("translation vector " + v.ToString() +
                            " has the wrong dimension");
    }
    for (int a = 0; a < dim_; ++a) {
      if (v[a] >= scale_) {
        throw InvalidArgument("translation vector " + v.ToString() +
                              " leaves the [0, scale) cell");
      }
    }
    if (!seen.insert(v).second) {
      throw InvalidArgument("duplicate translation vector " + v.ToString());
    }
  }
}

Coord FractalMap(const FractalSpec& spec, LinearIndex lambda) {
  if (lambda > kMaxLinearIndex) {
    throw CapacityError("index " + std::to_string(lambda) +
                        " exceeds the supported maximum");
  }
  std::array<u128, 3> acc{};
  u128 power = 1;
  for (LinearIndex rest = lambda; rest != 0; rest /= spec.base()) {
    const Coord& v = spec.vector(rest % spec.base());
    for (int a = 0; a < spec.dim(); ++a) acc[a] += v[a] * power;
    power = NextPower(power, spec.scale());
  }
  return MakeCoord(spec.dim(), acc);
}

Coord FractalPrefixExtent(const FractalSpec& spec, std::uint64_t count) {
  if (count == 0) throw InvalidArgument("prefix extent needs count >= 1");

  std::vector<std::uint32_t> digits;
  for (std::uint64_t rest = count; rest != 0; rest /= spec.base()) {
    digits.push_back(static_cast<std::uint32_t>(rest % spec.base()));
  }
  // full_max[l][a]: largest axis-a coordinate inside a complete level-l
  // subtree, i.e. sum_{i<l} scale^i * max_d vectors[d][a].
  std::array<u128, 3> max_component{};
  for (const Coord& v : spec.vectors()) {
    for (int a = 0; a < spec.dim(); ++a) {
      max_component[a] = std::max<u128>(max_component[a], v[a]);
    }
  }
  std::vector<u128> powers(digits.size() + 1, 1);
  for (std::size_t l = 1; l < powers.size(); ++l) {
    powers[l] = NextPower(powers[l - 1], spec.scale());
  }

  std::array<u128, 3> offset{};
  std::array<u128, 3> extent{};
  for (std::size_t level = digits.size(); level-- > 0;) {
    const std::uint32_t digit = digits[level];
    for (int a = 0; a < spec.dim(); ++a) {
      if (digit == 0) continue;
      u128 best = 0;
      for (std::uint32_t d = 0; d < digit; ++d) {
        best = std::max<u128>(best, spec.vector(d)[a]);
      }
      // Subtrees 0..digit-1 at this level are complete.
      const u128 full_max = max_component[a] * (powers[level] - 1) /
                            (spec.scale() - 1);
      extent[a] =
          std::max(extent[a], offset[a] + best * powers[level] + full_max);
    }
    for (int a = 0; a < spec.dim(); ++a) {
      offset[a] += spec.vector(digit)[a] * powers[level];
    }
  }
  return MakeCoord(spec.dim(), extent);
}

}  // namespace mapforge
