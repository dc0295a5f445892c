#pragma once

#include <optional>
#include <span>
#include <vector>

#include "inthull/geom.hpp"
#include "inthull/lattice.hpp"
#include "inthull/regions.hpp"

namespace inthull {

struct BaselineConfig {
  SweepOptions sweep;
};

// Facets moved inward to their first lattice-bearing chord. `tightened` is
// empty when some sweep finds nothing, i.e. the set has no lattice points.
struct Normalized {
  std::optional<PolySet2> tightened;
  std::vector<SweepHit> hits;
};

struct Partition {
  HullResult central;
  std::vector<PolySet2> corners;
};

Normalized normalize_facets(const PolySet2& set, const SweepOptions& options = {});
Partition partition(const PolySet2& tightened, std::span<const SweepHit> hits);

HullResult integer_hull_baseline(const PolySet2& set, const BaselineConfig& config = {},
                                 EngineStats* stats = nullptr, Trace* trace = nullptr);

}  // namespace inthull
