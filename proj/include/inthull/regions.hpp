#pragma once

#include <cstdint>
#include <vector>

#include "inthull/geom.hpp"

namespace inthull {

// Cost counters shared by the hull engines.
struct EngineStats {
  // Bounding-box lattice cells of every region handed to brute force.
  Integer brute_cells = 0;
  std::uint64_t brute_regions = 0;
  std::uint64_t sweeps = 0;
  // Deepest refinement level entered (0 = the input itself).
  unsigned max_depth_reached = 0;
};

// Intermediate geometry for plotting.
struct Trace {
  std::vector<Segment> chords;
  std::vector<PolySet2> regions;
};

// Lattice cells (points) of the axis-aligned bounding box of the vertices.
Integer bbox_cells(const PolySet2& set);

// Lattice hull of a point or segment set, read off the chord lattice.
HullResult degenerate_hull(const PolySet2& set);

// The closed side of line(u, w) to the right of the direction u -> w.
HalfPlane right_side(const IntPoint2& u, const IntPoint2& w);

// Pieces of `region` lying outside the hull: one clip per hull edge (both
// sides of the chord for a 2-point hull). Degenerate pieces whose lattice
// points all lie on the generating hull edge are dropped.
std::vector<PolySet2> regions_outside(const PolySet2& region, const HullResult& hull);

}  // namespace inthull
