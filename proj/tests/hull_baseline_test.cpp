#include <gtest/gtest.h>

#include "inthull/hull_baseline.hpp"
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

TEST(HullBaseline, Figure5) {
  EXPECT_EQ(integer_hull_baseline(fig5()).points,
            (std::vector<IntPoint2>{{-1, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}}));
}

TEST(HullBaseline, Figure7) {
  EXPECT_EQ(integer_hull_baseline(fig7()).points,
            (std::vector<IntPoint2>{{-2, 0}, {2, 0}, {3, 2}, {3, 3}, {1, 2}}));
}

TEST(HullBaseline, NormalizeFigure7) {
  const PolySet2 p = fig7();
  const Normalized n = normalize_facets(p);
  ASSERT_TRUE(n.tightened);
  ASSERT_EQ(n.hits.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const HalfPlane& f = p.halfplanes()[i];
    EXPECT_LE(Rational(n.hits[i].offset), f.b());
    EXPECT_EQ(f.a() * n.hits[i].lo.x + f.c() * n.hits[i].lo.y, n.hits[i].offset);
    EXPECT_EQ(f.a() * n.hits[i].hi.x + f.c() * n.hits[i].hi.y, n.hits[i].offset);
  }
  EXPECT_EQ(oracle::enumerate_integer_points(*n.tightened), oracle::enumerate_integer_points(p));
}

TEST(HullBaseline, PartitionCoversHits) {
  const Normalized n = normalize_facets(fig5());
  const Partition part = partition(*n.tightened, n.hits);
  for (const SweepHit& h : n.hits) {
    EXPECT_TRUE(hull_contains(part.central, h.lo));
    EXPECT_TRUE(hull_contains(part.central, h.hi));
  }
  for (const PolySet2& c : part.corners) EXPECT_LT(area(c), area(*n.tightened));
}

TEST(HullBaseline, EmptyMarker) {
  const PolySet2 tiny = PolySet2::from_vertices(std::vector<Point2>{pt("1/4", "1/4"), pt("3/4", "1/4"), pt("1/2", "3/4")});
  EXPECT_FALSE(normalize_facets(tiny).tightened);
  EXPECT_TRUE(integer_hull_baseline(tiny).empty());
}

TEST(HullBaseline, IntegralPolygonIsItsOwnHull) {
  const PolySet2 p = PolySet2::from_vertices(std::vector<Point2>{{0, 0}, {4, 1}, {3, 5}, {-1, 2}});
  EngineStats stats;
  const HullResult h = integer_hull_baseline(p, {}, &stats);
  EXPECT_EQ(h.points, (std::vector<IntPoint2>{{-1, 2}, {0, 0}, {4, 1}, {3, 5}}));
  EXPECT_EQ(stats.brute_cells, 0);
}

TEST(HullBaseline, SweepLimit) {
  BaselineConfig cfg;
  cfg.sweep.max_steps = 1;
  const PolySet2 sliver = PolySet2::from_vertices(
      std::vector<Point2>{pt("0", "1/3"), pt("1000", "1001/3"), pt("0", "2/3")});
  try {
    integer_hull_baseline(sliver, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SweepLimitExceeded);
  }
}
