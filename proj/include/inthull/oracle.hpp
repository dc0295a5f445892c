#pragma once

#include <cstdint>
#include <vector>

#include "inthull/geom.hpp"

namespace inthull::oracle {

// Bounding boxes above this many lattice cells are refused.
inline constexpr std::uint64_t kCellBudget = 100'000'000;

// Every lattice point of the set, sorted lexicographically. Scans the columns
// x = ceil(xmin) .. floor(xmax) and intersects all half-planes to an exact
// y-interval per column.
std::vector<IntPoint2> enumerate_integer_points(const PolySet2& set,
                                                std::uint64_t cell_budget = kCellBudget);

HullResult integer_hull_oracle(const PolySet2& set, std::uint64_t cell_budget = kCellBudget);

}  // namespace inthull::oracle
