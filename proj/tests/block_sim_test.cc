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

#include <gtest/gtest.h>

#include <random>

#include "mapforge/error.h"
#include "mapforge/oracle.h"

namespace mapforge {
namespace {

// Visits every cell of the grid and tests membership directly.
BlockStats BruteForceGrid(DomainId domain, const std::vector<std::uint64_t>& g,
                          const BlockShape& block) {
  const auto& e = block.dims();
  const bool three = block.dim() == 3;
  const std::uint64_t gz = three ? g[2] : 1;
  BlockStats s;
  s.total_blocks = g[0] * g[1] * gz;
  for (std::uint64_t bz = 0; bz < gz; ++bz) {
    for (std::uint64_t by = 0; by < g[1]; ++by) {
      for (std::uint64_t bx = 0; bx < g[0]; ++bx) {
        std::uint64_t members = 0;
        const std::uint64_t ez = three ? e[2] : 1;
        for (std::uint64_t dz = 0; dz < ez; ++dz) {
          for (std::uint64_t dy = 0; dy < e[1]; ++dy) {
            for (std::uint64_t dx = 0; dx < e[0]; ++dx) {
              const std::uint64_t x = bx * e[0] + dx, y = by * e[1] + dy;
              const Coord c = three ? Coord(x, y, bz * e[2] + dz) : Coord(x, y);
              members += Membership(domain, c);
            }
          }
        }
        if (members > 0) {
          ++s.valid_blocks;
          if (members < block.threads()) ++s.partially_filled;
        }
      }
    }
  }
  s.wasted_blocks = s.total_blocks - s.valid_blocks;
  return s;
}

TEST(BlockShapeTest, ParseAndValidate) {
  EXPECT_EQ(BlockShape::Parse("16x16").dims(), (std::vector<std::uint64_t>{16, 16}));
  EXPECT_EQ(BlockShape::Parse("8x8x4").threads(), 256u);
  EXPECT_EQ(BlockShape::Parse("8,8,4").ToString(), "8x8x4");
  for (const char* bad : {"", "16", "16x", "x16", "0x4", "4x4x4x4", "ax4",
                          "99999999999999999999x2", "65536x65536"}) {
    EXPECT_THROW(BlockShape::Parse(bad), InvalidArgument) << bad;
  }
  EXPECT_EQ(BlockShape::DefaultFor(DomainId::kTriangular2D).threads(), 256u);
  EXPECT_EQ(BlockShape::DefaultFor(DomainId::kPyramid3D).ToString(), "8x8x4");
  EXPECT_EQ(BlockShape::DefaultFor(DomainId::kMenger3D).ToString(), "9x9x9");
}

TEST(PrefixExtentTest, MatchesEnumeration) {
  for (DomainId d : kAllDomains) {
    const auto points = OracleEnumerate(d, 5000);
    std::uint64_t mx[3] = {0, 0, 0};
    for (std::uint64_t n = 1; n <= points.size(); ++n) {
      const Coord& c = points[n - 1];
      for (int a = 0; a < c.dim(); ++a) mx[a] = std::max(mx[a], c[a]);
      const Coord ext = PrefixExtent(d, n);
      for (int a = 0; a < c.dim(); ++a) {
        ASSERT_EQ(ext[a], mx[a]) << DomainName(d) << " n=" << n << " axis " << a;
      }
    }
  }
  EXPECT_THROW(PrefixExtent(DomainId::kGasket2D, 0), InvalidArgument);
}

TEST(SimulateBoundingBoxTest, TriangleExample) {
  const BlockStats s =
      SimulateBoundingBox(DomainId::kTriangular2D, 36, BlockShape({4, 4}));
  EXPECT_EQ(s.total_blocks, 4u);
  EXPECT_EQ(s.valid_blocks, 3u);
  EXPECT_EQ(s.wasted_blocks, 1u);
  EXPECT_EQ(s.partially_filled, 2u);
  EXPECT_EQ(s.elements, 36u);
}

struct GridCase {
  DomainId domain;
  std::vector<std::uint64_t> block;
};

class GridOracleTest : public ::testing::TestWithParam<GridCase> {};

TEST_P(GridOracleTest, MatchesCellByCellCount) {
  const GridCase& p = GetParam();
  const BlockShape block(p.block);
  const int dim = block.dim();
  const std::uint64_t max_side = dim == 2 ? 128 : 48;
  std::mt19937_64 rng(static_cast<std::uint64_t>(p.domain) * 131 +
                      block.threads());
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::uint64_t> g(dim);
    for (int a = 0; a < dim; ++a) {
      const std::uint64_t most = std::max<std::uint64_t>(1, max_side / p.block[a]);
      g[a] = 1 + rng() % most;
    }
    const BlockStats fast = SimulateGrid(p.domain, g, block, 0);
    const BlockStats slow = BruteForceGrid(p.domain, g, block);
    EXPECT_EQ(fast, slow) << DomainName(p.domain) << " block "
                          << block.ToString() << " grid " << g[0] << "x"
                          << g[1] << (dim == 3 ? "x" + std::to_string(g[2]) : "");
    EXPECT_EQ(fast.total_blocks, fast.valid_blocks + fast.wasted_blocks);
    EXPECT_LE(fast.partially_filled, fast.valid_blocks);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Shapes, GridOracleTest,
    ::testing::Values(
        GridCase{DomainId::kTriangular2D, {4, 4}},
        GridCase{DomainId::kTriangular2D, {3, 7}},
        GridCase{DomainId::kTriangular2D, {1, 1}},
        GridCase{DomainId::kPyramid3D, {2, 2, 2}},
        GridCase{DomainId::kPyramid3D, {3, 5, 2}},
        GridCase{DomainId::kPyramid3D, {8, 8, 4}},
        GridCase{DomainId::kGasket2D, {16, 16}},
        GridCase{DomainId::kGasket2D, {4, 8}},
        GridCase{DomainId::kGasket2D, {3, 5}},
        GridCase{DomainId::kCarpet2D, {9, 9}},
        GridCase{DomainId::kCarpet2D, {27, 3}},
        GridCase{DomainId::kCarpet2D, {4, 4}},
        GridCase{DomainId::kSierpinski3D, {8, 8, 4}},
        GridCase{DomainId::kSierpinski3D, {2, 4, 2}},
        GridCase{DomainId::kSierpinski3D, {3, 3, 3}},
        GridCase{DomainId::kMenger3D, {9, 9, 9}},
        GridCase{DomainId::kMenger3D, {3, 9, 1}},
        GridCase{DomainId::kMenger3D, {4, 4, 4}}),
    [](const ::testing::TestParamInfo<GridCase>& info) {
      return std::string(DomainName(info.param.domain)) + "_" +
             BlockShape(info.param.block).ToString();
    });

TEST(SimulateGridTest, MonotoneInBoxSize) {
  for (DomainId d : kAllDomains) {
    const int dim = DomainDim(d);
    const BlockShape block = dim == 2 ? BlockShape({4, 4}) : BlockShape({3, 3, 3});
    std::vector<std::uint64_t> g(dim, 1);
    std::uint64_t last = 0;
    std::mt19937_64 rng(static_cast<std::uint64_t>(d));
    for (int step = 0; step < 30; ++step) {
      g[rng() % dim] += 1;
      const std::uint64_t wasted = SimulateGrid(d, g, block, 0).wasted_blocks;
      EXPECT_GE(wasted, last) << DomainName(d) << " step " << step;
      last = wasted;
    }
  }
}

TEST(SimulateGridTest, Errors) {
  EXPECT_THROW(SimulateGrid(DomainId::kGasket2D, {1, 1}, BlockShape({2, 2, 2}), 0),
               InvalidArgument);
  EXPECT_THROW(SimulateGrid(DomainId::kPyramid3D, {1, 1}, BlockShape({2, 2, 2}), 0),
               InvalidArgument);
  EXPECT_THROW(SimulateBoundingBox(DomainId::kGasket2D, 0, BlockShape({2, 2})),
               InvalidArgument);
  EXPECT_THROW(SimulateGrid(DomainId::kTriangular2D,
                            {std::uint64_t{1} << 40, std::uint64_t{1} << 40},
                            BlockShape({16, 16}), 0),
               CapacityError);
}

TEST(SimulateGridTest, AlignedFractalScalesFarBeyondCellCounts) {
  // 2^30 x 2^30 cells: only the digit recursion can answer this.
  const BlockStats s = SimulateGrid(DomainId::kGasket2D,
                                    {std::uint64_t{1} << 26, std::uint64_t{1} << 26},
                                    BlockShape({16, 16}), 0);
  EXPECT_EQ(s.total_blocks, std::uint64_t{1} << 52);
  // Gasket blocks at level 26 of a 16x16-aligned tiling: 3^26.
  std::uint64_t p = 1;
  for (int i = 0; i < 26; ++i) p *= 3;
  EXPECT_EQ(s.valid_blocks, p);
  EXPECT_EQ(s.partially_filled, p);
}

TEST(SimulateAnalyticalTest, Examples) {
  const BlockStats big = SimulateAnalytical(500000000, 256);
  EXPECT_EQ(big.total_blocks, 1953125u);
  EXPECT_EQ(big.wasted_blocks, 0u);
  EXPECT_EQ(big.valid_blocks, 1953125u);
  EXPECT_EQ(big.partially_filled, 0u);
  EXPECT_EQ(SimulateAnalytical(36, 16).total_blocks, 3u);
  EXPECT_EQ(SimulateAnalytical(36, 16).partially_filled, 1u);
  EXPECT_EQ(SimulateAnalytical(1, 256).total_blocks, 1u);
  EXPECT_THROW(SimulateAnalytical(0, 256), InvalidArgument);
}

TEST(WasteFractionTest, Examples) {
  BlockStats s;
  s.total_blocks = 8000000000;
  s.wasted_blocks = 7998046875;
  EXPECT_NEAR(WasteFraction(s), 0.99976, 5e-6);
  s.wasted_blocks = 0;
  EXPECT_EQ(WasteFraction(s), 0.0);
  s.total_blocks = 0;
  EXPECT_THROW(WasteFraction(s), InvalidArgument);
}

TEST(EfficiencyTest, Examples) {
  EXPECT_DOUBLE_EQ(EfficiencyPointsPerJoule({100.0, 1000000}), 10000.0);
  EXPECT_DOUBLE_EQ(EfficiencyPointsPerJoule({50.0, 0}), 0.0);
  EXPECT_NEAR(EfficiencyPointsPerJoule({0.44, 500000000}), 1.136e9, 1e6);
  EXPECT_THROW(EfficiencyPointsPerJoule({0.0, 1}), InvalidArgument);
  EXPECT_THROW(EfficiencyPointsPerJoule({-1.0, 1}), InvalidArgument);
}

TEST(BlockStatsCsvTest, Format) {
  EXPECT_EQ(BlockStatsCsvHeader(),
            "domain,strategy,total_blocks,wasted_blocks,waste_fraction,elements");
  const BlockStats s =
      SimulateBoundingBox(DomainId::kTriangular2D, 36, BlockShape({4, 4}));
  EXPECT_EQ(BlockStatsCsvRow(DomainId::kTriangular2D, "bounding_box", s),
            "Triangular2D,bounding_box,4,1,0.250000,36");
}

}  // namespace
}  // namespace mapforge
