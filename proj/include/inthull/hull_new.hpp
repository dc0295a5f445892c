#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "inthull/geom.hpp"
#include "inthull/lattice.hpp"
#include "inthull/regions.hpp"

namespace inthull {

// How residual regions are finished: regions whose bounding box holds at
// most brute_force_cell_threshold lattice cells are enumerated, larger ones
// are refined again with the same algorithm. At max_depth levels of
// refinement brute force is forced. Both values only change the cost.
struct RefineConfig {
  std::uint64_t brute_force_cell_threshold = 256;
  unsigned max_depth = 16;
  SweepOptions sweep;
};

using CandidateSet = std::set<IntPoint2>;

struct FacetChord {
  std::size_t facet_index;
  Line line;
  SweepHit hit;
};

struct ReplacedFacets {
  CandidateSet candidates;
  std::vector<FacetChord> chords;
};

// Opposite-vertex sweep for every facet of a polygon.
ReplacedFacets replace_facets(const PolySet2& set, const SweepOptions& options = {});

// The polygon cut back to the stopping chords found by replace_facets:
// set ∩ { a*x + c*y >= offset } for every facet chord. Contains every
// lattice point of set. nullopt only when there are no chords and the set
// is empty of lattice points along every sweep.
std::optional<PolySet2> trim_to_chords(const PolySet2& set, const ReplacedFacets& replaced);

std::vector<PolySet2> residual_regions(const PolySet2& set, const HullResult& hull_so_far);

CandidateSet brute_force_region(const PolySet2& region);

HullResult integer_hull_new(const PolySet2& set, const RefineConfig& config = {},
                            EngineStats* stats = nullptr, Trace* trace = nullptr);

}  // namespace inthull
