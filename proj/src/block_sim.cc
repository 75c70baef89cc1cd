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

#include "mapforge/block_sim.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <unordered_map>

#include "mapforge/dense_maps.h"
#include "mapforge/error.h"
#include "mapforge/fractal.h"

namespace mapforge {
namespace {

using u128 = unsigned __int128;

constexpr u128 kU64Max = UINT64_MAX;
// Points of one level-J subtree enumerated to seed the aligned count.
constexpr std::uint64_t kMaxSeedPoints = std::uint64_t{1} << 26;
// Domain points visited by the unaligned fallback.
constexpr std::uint64_t kMaxVisitedPoints = std::uint64_t{1} << 28;

std::uint64_t CheckedU64(u128 v, const char* what) {
  if (v > kU64Max) throw CapacityError(std::string(what) + " overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) {
  return a / b + (a % b != 0);
}

struct Counts {
  u128 valid = 0;
  u128 full = 0;
};

// (max x, max y) over the first `count` triangle points.
std::pair<std::uint64_t, std::uint64_t> TriangleExtent(std::uint64_t count) {
  const Coord last = MapTriangular(count - 1);
  const std::uint64_t below = last.x() > 0 ? last.x() - 1 : 0;
  return {last.x(), std::max(last.y(), below)};
}

// Valid / full blocks of the lower triangle y <= x. A block is valid iff its
// smallest y is <= its largest x, and full iff its largest y is <= its
// smallest x.
Counts CountTriangleGrid(const std::vector<std::uint64_t>& g,
                         const std::vector<std::uint64_t>& e) {
  Counts c;
  for (std::uint64_t bx = 0; bx < g[0]; ++bx) {
    const std::uint64_t x0 = bx * e[0];
    const std::uint64_t x1 = x0 + e[0] - 1;
    c.valid += std::min(g[1], x1 / e[1] + 1);
    if (x0 + 1 >= e[1]) c.full += std::min(g[1], (x0 + 1 - e[1]) / e[1] + 1);
  }
  return c;
}

// Pyramid y <= x <= z. Valid iff x0 <= z1 and y0 <= min(x1, z1); full iff
// y1 <= x0 and x1 <= z0.
Counts CountPyramidGrid(const std::vector<std::uint64_t>& g,
                        const std::vector<std::uint64_t>& e) {
  Counts c;
  for (std::uint64_t bz = 0; bz < g[2]; ++bz) {
    const std::uint64_t z0 = bz * e[2];
    const std::uint64_t z1 = z0 + e[2] - 1;
    for (std::uint64_t bx = 0; bx < g[0]; ++bx) {
      const std::uint64_t x0 = bx * e[0];
      const std::uint64_t x1 = x0 + e[0] - 1;
      if (x0 > z1) break;
      c.valid += std::min(g[1], std::min(x1, z1) / e[1] + 1);
      if (x1 <= z0 && x0 + 1 >= e[1]) {
        c.full += std::min(g[1], (x0 + 1 - e[1]) / e[1] + 1);
      }
    }
  }
  return c;
}

// Counts blocks of a grid anchored at the origin that intersect a digit
// fractal, walking the subdivision tree top-down.
//
// When every block edge is scale^j_a, a level-l region with l >= J =
// max j_a is a union of whole blocks, so regions at that level own disjoint
// block sets and a region entirely inside the grid contributes
// base^(l-J) times the count of one level-J region. Only regions cut by the
// grid boundary are descended into.
//
// Otherwise the walk goes down to regions no larger than the smallest block
// edge and collects block ids of the points themselves.
class FractalGridCounter {
 public:
  FractalGridCounter(const FractalSpec& spec, const std::vector<std::uint64_t>& g,
                     const std::vector<std::uint64_t>& e)
      : spec_(spec), dim_(spec.dim()) {
    for (int a = 0; a < dim_; ++a) {
      blocks_[a] = g[a];
      edge_[a] = e[a];
      grid_[a] = static_cast<u128>(g[a]) * e[a];
    }
    aligned_ = true;
    int j_max = 0;
    u128 min_edge = edge_[0];
    for (int a = 0; a < dim_; ++a) {
      int j = 0;
      u128 p = 1;
      while (p < edge_[a]) {
        p *= spec_.scale();
        ++j;
      }
      if (p != edge_[a]) aligned_ = false;
      j_max = std::max(j_max, j);
      min_edge = std::min<u128>(min_edge, edge_[a]);
    }
    if (aligned_) {
      seed_level_ = j_max;
    } else {
      seed_level_ = 0;
      for (u128 p = spec_.scale(); p <= min_edge; p *= spec_.scale()) {
        ++seed_level_;
      }
    }
    u128 seed_points = 1;
    for (int l = 0; l < seed_level_; ++l) {
      seed_points *= spec_.base();
      if (seed_points > kMaxSeedPoints) {
        throw CapacityError("block shape is too large for fractal counting");
      }
    }
    seed_.reserve(static_cast<std::size_t>(seed_points));
    for (std::uint64_t k = 0; k < seed_points; ++k) {
      seed_.push_back(FractalMap(spec_, k));
    }
  }

  Counts Run() {
    u128 max_grid = 0;
    for (int a = 0; a < dim_; ++a) max_grid = std::max(max_grid, grid_[a]);
    if (max_grid == 0) return {};
    int top = seed_level_;
    u128 side = Power(top);
    while (side < max_grid) {
      side *= spec_.scale();
      ++top;
    }
    if (aligned_) {
      seed_counts_ = CountSeedRegion({0, 0, 0}, /*clip=*/false);
      std::array<u128, 3> origin{};
      return Descend(top, origin);
    }
    std::array<u128, 3> origin{};
    Collect(top, origin);
    Counts c;
    for (const auto& [id, n] : bins_) {
      ++c.valid;
      if (n == Threads()) ++c.full;
    }
    return c;
  }

 private:
  u128 Power(int level) const {
    u128 p = 1;
    for (int l = 0; l < level; ++l) p *= spec_.scale();
    return p;
  }

  u128 Threads() const {
    u128 t = 1;
    for (int a = 0; a < dim_; ++a) t *= edge_[a];
    return t;
  }

  bool Outside(const std::array<u128, 3>& o) const {
    for (int a = 0; a < dim_; ++a) {
      if (o[a] >= grid_[a]) return true;
    }
    return false;
  }

  bool Inside(const std::array<u128, 3>& o, u128 side) const {
    for (int a = 0; a < dim_; ++a) {
      if (o[a] + side > grid_[a]) return false;
    }
    return true;
  }

  // Blocks of the level-J region at `o`, optionally ignoring points past the
  // grid edge.
  Counts CountSeedRegion(const std::array<u128, 3>& o, bool clip) const {
    const u128 side = Power(seed_level_);
    std::array<std::uint64_t, 3> per_axis{1, 1, 1};
    for (int a = 0; a < dim_; ++a) {
      per_axis[a] = static_cast<std::uint64_t>(side / edge_[a]);
    }
    std::vector<std::uint32_t> bins(per_axis[0] * per_axis[1] * per_axis[2]);
    for (const Coord& p : seed_) {
      std::uint64_t id = 0;
      bool keep = true;
      for (int a = dim_ - 1; a >= 0; --a) {
        if (clip && o[a] + p[a] >= grid_[a]) keep = false;
        id = id * per_axis[a] + static_cast<std::uint64_t>(p[a] / edge_[a]);
      }
      if (keep) ++bins[id];
    }
    Counts c;
    for (std::uint32_t n : bins) {
      if (n > 0) ++c.valid;
      if (n == Threads()) ++c.full;
    }
    return c;
  }

  Counts Descend(int level, const std::array<u128, 3>& o) const {
    if (Outside(o)) return {};
    const u128 side = Power(level);
    if (Inside(o, side)) {
      u128 copies = 1;
      for (int l = seed_level_; l < level; ++l) copies *= spec_.base();
      return {seed_counts_.valid * copies, seed_counts_.full * copies};
    }
    if (level == seed_level_) return CountSeedRegion(o, /*clip=*/true);
    Counts total;
    const u128 child_side = side / spec_.scale();
    for (const Coord& v : spec_.vectors()) {
      std::array<u128, 3> child = o;
      for (int a = 0; a < dim_; ++a) child[a] += v[a] * child_side;
      const Counts c = Descend(level - 1, child);
      total.valid += c.valid;
      total.full += c.full;
    }
    return total;
  }

  void Collect(int level, const std::array<u128, 3>& o) {
    if (Outside(o)) return;
    if (level == seed_level_) {
      for (const Coord& p : seed_) {
        if (++visited_ > kMaxVisitedPoints) {
          throw CapacityError(
              "too many domain points for this block shape; use block edges "
              "that are powers of the fractal scale");
        }
        u128 id = 0;
        bool keep = true;
        for (int a = dim_ - 1; a >= 0; --a) {
          const u128 c = o[a] + p[a];
          if (c >= grid_[a]) keep = false;
          id = id * blocks_[a] + c / edge_[a];
        }
        if (keep) ++bins_[static_cast<std::uint64_t>(id)];
      }
      return;
    }
    const u128 child_side = Power(level - 1);
    for (const Coord& v : spec_.vectors()) {
      std::array<u128, 3> child = o;
      for (int a = 0; a < dim_; ++a) child[a] += v[a] * child_side;
      Collect(level - 1, child);
    }
  }

  const FractalSpec& spec_;
  int dim_;
  std::array<u128, 3> blocks_{1, 1, 1};
  std::array<u128, 3> edge_{1, 1, 1};
  std::array<u128, 3> grid_{1, 1, 1};
  bool aligned_ = false;
  int seed_level_ = 0;
  std::vector<Coord> seed_;
  Counts seed_counts_;
  std::unordered_map<std::uint64_t, std::uint64_t> bins_;
  std::uint64_t visited_ = 0;
};

}  // namespace

BlockShape::BlockShape(std::vector<std::uint64_t> dims)
    : dims_(std::move(dims)), threads_(1) {
  if (dims_.size() != 2 && dims_.size() != 3) {
    throw InvalidArgument("block shape needs 2 or 3 extents");
  }
  for (std::uint64_t d : dims_) {
    if (d == 0) throw InvalidArgument("block extents must be >= 1");
    const u128 t = static_cast<u128>(threads_) * d;
    if (t > UINT32_MAX) throw InvalidArgument("block has too many threads");
    threads_ = static_cast<std::uint64_t>(t);
  }
}

BlockShape BlockShape::Parse(std::string_view text) {
  std::vector<std::uint64_t> dims;
  std::uint64_t value = 0;
  bool have_digit = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : 'x';
    if (ch >= '0' && ch <= '9') {
      if (value > (UINT64_MAX - 9) / 10) {
        throw InvalidArgument("block extent too large");
      }
      value = value * 10 + static_cast<std::uint64_t>(ch - '0');
      have_digit = true;
    } else if (ch == 'x' || ch == 'X' || ch == ',' || ch == '*') {
      if (!have_digit) {
        throw InvalidArgument("malformed block shape '" + std::string(text) +
                              "'");
      }
      dims.push_back(value);
      value = 0;
      have_digit = false;
    } else {
      throw InvalidArgument("malformed block shape '" + std::string(text) +
                            "'");
    }
  }
  return BlockShape(std::move(dims));
}

BlockShape BlockShape::DefaultFor(DomainId domain) {
  switch (domain) {
    case DomainId::kCarpet2D: return BlockShape({27, 27});
    case DomainId::kMenger3D: return BlockShape({9, 9, 9});
    default:
      return DomainDim(domain) == 2 ? BlockShape({16, 16})
                                    : BlockShape({8, 8, 4});
  }
}

std::string BlockShape::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) out += 'x';
    out += std::to_string(dims_[i]);
  }
  return out;
}

Coord PrefixExtent(DomainId domain, std::uint64_t count) {
  if (count == 0) throw InvalidArgument("prefix extent needs count >= 1");
  switch (domain) {
    case DomainId::kTriangular2D: {
      const auto [x, y] = TriangleExtent(count);
      return Coord(x, y);
    }
    case DomainId::kPyramid3D: {
      const Coord last = MapPyramid(count - 1);
      const std::uint64_t z = last.z();
      if (z == 0) return Coord(0, 0, 0);
      // Layer z-1 is complete; layer z holds the remaining points.
      const auto [tx, ty] = TriangleExtent(count - TetrahedralNumber(z));
      return Coord(std::max(z - 1, tx), std::max(z - 1, ty), z);
    }
    default:
      return FractalPrefixExtent(BuiltinSpec(domain), count);
  }
}

BlockStats SimulateGrid(DomainId domain,
                        const std::vector<std::uint64_t>& blocks_per_axis,
                        const BlockShape& block, std::uint64_t elements) {
  const int dim = DomainDim(domain);
  if (block.dim() != dim ||
      blocks_per_axis.size() != static_cast<std::size_t>(dim)) {
    throw InvalidArgument("block shape " + block.ToString() +
                          " does not match " + std::string(DomainName(domain)));
  }
  u128 total = 1;
  for (int a = 0; a < dim; ++a) {
    CheckedU64(static_cast<u128>(blocks_per_axis[a]) * block.dims()[a],
               "grid extent");
    total *= blocks_per_axis[a];
    CheckedU64(total, "block count");
  }

  Counts c;
  switch (domain) {
    case DomainId::kTriangular2D:
      c = CountTriangleGrid(blocks_per_axis, block.dims());
      break;
    case DomainId::kPyramid3D:
      c = CountPyramidGrid(blocks_per_axis, block.dims());
      break;
    default:
      c = FractalGridCounter(BuiltinSpec(domain), blocks_per_axis,
                             block.dims())
              .Run();
      break;
  }
  BlockStats stats;
  stats.total_blocks = static_cast<std::uint64_t>(total);
  stats.valid_blocks = CheckedU64(c.valid, "valid block count");
  stats.wasted_blocks = stats.total_blocks - stats.valid_blocks;
  stats.partially_filled = stats.valid_blocks -
                           CheckedU64(c.full, "full block count");
  stats.elements = elements;
  return stats;
}

BlockStats SimulateBoundingBox(DomainId domain, std::uint64_t num_elements,
                               const BlockShape& block) {
  if (num_elements == 0) {
    throw InvalidArgument("bounding-box simulation needs num_elements >= 1");
  }
  if (block.dim() != DomainDim(domain)) {
    throw InvalidArgument("block shape " + block.ToString() +
                          " does not match " + std::string(DomainName(domain)));
  }
  const Coord extent = PrefixExtent(domain, num_elements);
  std::vector<std::uint64_t> blocks(static_cast<std::size_t>(block.dim()));
  for (int a = 0; a < block.dim(); ++a) {
    blocks[a] = CeilDiv(CheckedU64(static_cast<u128>(extent[a]) + 1, "extent"),
                        block.dims()[a]);
  }
  return SimulateGrid(domain, blocks, block, num_elements);
}

BlockStats SimulateAnalytical(std::uint64_t num_elements,
                              std::uint64_t block_threads) {
  if (num_elements == 0 || block_threads == 0) {
    throw InvalidArgument("analytical simulation needs positive arguments");
  }
  BlockStats stats;
  stats.total_blocks = CeilDiv(num_elements, block_threads);
  stats.valid_blocks = stats.total_blocks;
  stats.partially_filled = num_elements % block_threads != 0 ? 1 : 0;
  stats.elements = num_elements;
  return stats;
}

double WasteFraction(const BlockStats& stats) {
  if (stats.total_blocks == 0) {
    throw InvalidArgument("waste fraction of an empty launch");
  }
  return static_cast<double>(stats.wasted_blocks) /
         static_cast<double>(stats.total_blocks);
}

double EfficiencyPointsPerJoule(const EnergySample& sample) {
  if (!(sample.joules > 0)) {
    throw InvalidArgument("energy must be positive");
  }
  return static_cast<double>(sample.points) / sample.joules;
}

std::string_view BlockStatsCsvHeader() {
  return "domain,strategy,total_blocks,wasted_blocks,waste_fraction,elements";
}

std::string BlockStatsCsvRow(DomainId domain, std::string_view strategy,
                             const BlockStats& stats) {
  char fraction[32];
  std::snprintf(fraction, sizeof fraction, "%.6f",
                stats.total_blocks ? WasteFraction(stats) : 0.0);
  return std::string(DomainName(domain)) + "," + std::string(strategy) + "," +
         std::to_string(stats.total_blocks) + "," +
         std::to_string(stats.wasted_blocks) + "," + fraction + "," +
         std::to_string(stats.elements);
}

}  // namespace mapforge
