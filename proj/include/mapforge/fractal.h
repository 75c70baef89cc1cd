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

#ifndef MAPFORGE_FRACTAL_H_
#define MAPFORGE_FRACTAL_H_

#include <cstdint>
#include <vector>

#include "mapforge/coord.h"

namespace mapforge {

// Digit-decomposition rule for a self-similar domain. Writing
// lambda = sum_i d_i * base^i, the mapped point is
// sum_i vectors[d_i] * scale^i.
class FractalSpec {
 public:
  // Throws InvalidArgument unless base >= 2, scale >= 2, dim is 2 or 3,
  // vectors has exactly `base` distinct entries of dimension `dim`, and
  // every component lies in [0, scale).
  FractalSpec(std::uint32_t base, std::uint32_t scale, int dim,
              std::vector<Coord> vectors);

  std::uint32_t base() const { return base_; }
  std::uint32_t scale() const { return scale_; }
  int dim() const { return dim_; }
  const std::vector<Coord>& vectors() const { return vectors_; }
  const Coord& vector(std::size_t digit) const { return vectors_[digit]; }

  friend bool operator==(const FractalSpec&, const FractalSpec&) = default;

 private:
  std::uint32_t base_;
  std::uint32_t scale_;
  int dim_;
  std::vector<Coord> vectors_;
};

// O(log_base lambda). Throws CapacityError if lambda > kMaxLinearIndex or a
// coordinate overflows 64 bits.
Coord FractalMap(const FractalSpec& spec, LinearIndex lambda);

// Per-axis maximum over the first `count` points (count >= 1) of the
// fractal, computed from the base-B digits of count without enumerating.
Coord FractalPrefixExtent(const FractalSpec& spec, std::uint64_t count);

}  // namespace mapforge

#endif  // MAPFORGE_FRACTAL_H_
