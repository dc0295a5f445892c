#pragma once

#include <optional>
#include <string>

#include "inthull/geom.hpp"
#include "inthull/regions.hpp"

namespace inthull::cli {

// Lattice dots and grid lines are drawn only when the padded bounding box
// has at most this many cells.
inline constexpr std::uint64_t kPlotCellBudget = 10'000;

// Deterministic SVG of the set outline, lattice points of its padded
// bounding box (class "lattice-in" inside the set, "lattice-out"
// otherwise), the shaded hull and, when given, an engine trace. The set is
// nullopt for empty instances.
std::string render_svg(const std::optional<PolySet2>& set, const HullResult& hull,
                       const Trace* trace = nullptr);

}  // namespace inthull::cli
