#include <gtest/gtest.h>

#include "inthull/hull_new.hpp"
#include "inthull/oracle.hpp"

using namespace inthull;

namespace {

Point2 pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

PolySet2 fig5() {
  return PolySet2::from_vertices(std::vector<Point2>{pt("-2", "-1/5"), pt("3", "-1/5"), pt("17/10", "39/10")});
}

PolySet2 fig7() {
  return PolySet2::from_vertices(std::vector<Point2>{pt("-5/2", "-1/5"), pt("11/5", "-7/10"), pt("18/5", "39/10")});
}

}  // namespace

TEST(HullNew, Figure5) {
  EXPECT_EQ(integer_hull_new(fig5()).points,
            (std::vector<IntPoint2>{{-1, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}}));
}

TEST(HullNew, Figure7) {
  EXPECT_EQ(integer_hull_new(fig7()).points,
            (std::vector<IntPoint2>{{-2, 0}, {2, 0}, {3, 2}, {3, 3}, {1, 2}}));
}

TEST(HullNew, ReplaceFacetsOnFigure7) {
  const ReplacedFacets r = replace_facets(fig7());
  EXPECT_EQ(r.chords.size(), 3u);
  // Every candidate is a lattice point of the set.
  for (const IntPoint2& p : r.candidates) EXPECT_TRUE(contains(fig7(), p));
  const auto core = trim_to_chords(fig7(), r);
  ASSERT_TRUE(core);
  EXPECT_LT(area(*core), area(fig7()));
  EXPECT_EQ(oracle::enumerate_integer_points(*core), oracle::enumerate_integer_points(fig7()));
}

TEST(HullNew, ResidualRegionsOfTwoPointHull) {
  const PolySet2 sq = PolySet2::from_vertices(std::vector<Point2>{pt("-1/2", "-1/2"), pt("5/2", "-1/2"), pt("5/2", "1/2"), pt("-1/2", "1/2")});
  const HullResult chord{{{0, 0}, {2, 0}}};
  const auto regions = residual_regions(sq, chord);
  EXPECT_EQ(regions.size(), 2u);
  EXPECT_EQ(residual_regions(sq, HullResult{{{0, 0}}}).size(), 1u);
}

TEST(HullNew, TrivialInputs) {
  const PolySet2 sq = PolySet2::from_vertices(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(integer_hull_new(sq).points, (std::vector<IntPoint2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const PolySet2 tiny = PolySet2::from_vertices(std::vector<Point2>{pt("1/4", "1/4"), pt("3/4", "1/4"), pt("1/2", "3/4")});
  EXPECT_TRUE(integer_hull_new(tiny).empty());
  const PolySet2 seg = PolySet2::from_points(std::vector<Point2>{pt("-1/2", "-1/4"), pt("7/2", "7/4")});
  EXPECT_EQ(integer_hull_new(seg).points, (std::vector<IntPoint2>{{0, 0}, {2, 1}}));
  const PolySet2 p = PolySet2::from_points(std::vector<Point2>{{3, -2}});
  EXPECT_EQ(integer_hull_new(p).points, (std::vector<IntPoint2>{{3, -2}}));
}

TEST(HullNew, ConfigValidationAndStats) {
  RefineConfig bad;
  bad.brute_force_cell_threshold = 0;
  EXPECT_THROW(integer_hull_new(fig5(), bad), std::invalid_argument);
  EngineStats stats;
  integer_hull_new(fig5(), {}, &stats);
  EXPECT_GT(stats.sweeps, 0u);
  EXPECT_GE(stats.brute_cells, 0);
}

TEST(HullNew, ForcedBruteForceAtDepthLimit) {
  RefineConfig cfg;
  cfg.brute_force_cell_threshold = 1;
  cfg.max_depth = 1;
  EngineStats stats;
  EXPECT_EQ(integer_hull_new(fig7(), cfg, &stats), oracle::integer_hull_oracle(fig7()));
  EXPECT_LE(stats.max_depth_reached, 1u);
}

TEST(HullNew, TraceRecordsChords) {
  Trace trace;
  integer_hull_new(fig7(), {}, nullptr, &trace);
  EXPECT_GE(trace.chords.size(), 3u);
}

TEST(HullNew, RejectsUnboundedInput) {
  try {
    integer_hull_new(fig5().with_rays({{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnboundedInput);
  }
}
