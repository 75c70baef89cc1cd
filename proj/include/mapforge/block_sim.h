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

// Block-level launch accounting for the bounding-box (BB) strategy versus an
// analytical map.
//
// The BB strategy launches a grid of thread blocks over the axis-aligned box
// enclosing the first N domain points (rounded up to whole blocks); each
// thread tests membership of its own cell and exits when it is outside the
// domain. A block is valid if at least one of its cells is a domain member
// and wasted otherwise. An analytical map launches exactly ceil(N / threads)
// blocks, all of them valid.

#ifndef MAPFORGE_BLOCK_SIM_H_
#define MAPFORGE_BLOCK_SIM_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mapforge/coord.h"
#include "mapforge/domain.h"

namespace mapforge {

class BlockShape {
 public:
  // Throws InvalidArgument unless there are 2 or 3 extents, all >= 1, whose
  // product fits in 32 bits.
  explicit BlockShape(std::vector<std::uint64_t> dims);

  // "16x16", "8x8x4" (also accepts ',' and '*' separators).
  static BlockShape Parse(std::string_view text);
  // 16x16 in 2D, 8x8x4 in 3D, except 27x27 / 9x9x9 for the scale-3
  // fractals so block edges stay powers of the fractal scale.
  static BlockShape DefaultFor(DomainId domain);

  const std::vector<std::uint64_t>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(dims_.size()); }
  std::uint64_t threads() const { return threads_; }
  std::string ToString() const;  // "16x16"

 private:
  std::vector<std::uint64_t> dims_;
  std::uint64_t threads_;
};

struct BlockStats {
  std::uint64_t total_blocks = 0;
  std::uint64_t valid_blocks = 0;
  std::uint64_t wasted_blocks = 0;
  // Valid blocks in which some thread still falls outside the domain.
  std::uint64_t partially_filled = 0;
  std::uint64_t elements = 0;

  friend bool operator==(const BlockStats&, const BlockStats&) = default;
};

// Per-axis maximum coordinate over the first `count` (>= 1) points.
Coord PrefixExtent(DomainId domain, std::uint64_t count);

// BB accounting for a grid of blocks_per_axis[a] blocks along each axis,
// anchored at the origin. `elements` is copied into the result. Fractal
// domains are counted from the digit structure without visiting cells; when
// a block edge is not a power of the fractal scale the count falls back to
// visiting the domain points inside the grid and throws CapacityError if
// there are too many.
BlockStats SimulateGrid(DomainId domain,
                        const std::vector<std::uint64_t>& blocks_per_axis,
                        const BlockShape& block, std::uint64_t elements);

// BB accounting for the minimal box enclosing the first num_elements points.
// Throws InvalidArgument for num_elements == 0 or a block of the wrong
// dimension.
BlockStats SimulateBoundingBox(DomainId domain, std::uint64_t num_elements,
                               const BlockShape& block);

BlockStats SimulateAnalytical(std::uint64_t num_elements,
                              std::uint64_t block_threads);

// wasted / total. Throws InvalidArgument when total is 0.
double WasteFraction(const BlockStats& stats);

// Operator-supplied energy measurement of one run.
struct EnergySample {
  double joules = 0.0;
  std::uint64_t points = 0;  // correctly mapped points
};

// points / joules. Throws InvalidArgument unless joules > 0.
double EfficiencyPointsPerJoule(const EnergySample& sample);

// CSV in the column order
//   domain,strategy,total_blocks,wasted_blocks,waste_fraction,elements
std::string_view BlockStatsCsvHeader();
std::string BlockStatsCsvRow(DomainId domain, std::string_view strategy,
                             const BlockStats& stats);

}  // namespace mapforge

#endif  // MAPFORGE_BLOCK_SIM_H_
