#include "inthull/oracle.hpp"

#include <algorithm>
#include <optional>


namespace inthull::oracle {

std::vector<IntPoint2> enumerate_integer_points(const PolySet2& set, std::uint64_t cell_budget) {
  if (!set.bounded()) throw Error(Errc::UnboundedInput, "enumeration needs a bounded set");
  const auto& vs = set.vertices();
  const auto [x_lo, x_hi] = std::minmax_element(
      vs.begin(), vs.end(), [](const Point2& p, const Point2& q) { return p.x < q.x; });
  const auto [y_min, y_max] = std::minmax_element(
      vs.begin(), vs.end(), [](const Point2& p, const Point2& q) { return p.y < q.y; });
  const Integer first = ceil(x_lo->x);
  const Integer last = floor(x_hi->x);
  const Integer rows = floor(y_max->y) - ceil(y_min->y) + 1;
  std::vector<IntPoint2> points;
  if (last < first || rows <= 0) return points;
  const Integer cells = (last - first + 1) * rows;
  if (cells > Integer(std::to_string(cell_budget))) {
    throw Error(Errc::BudgetExceeded, "bounding box has " + to_string(cells) + " cells");
  }
  for (Integer x = first; x <= last; ++x) {
    const Rational xq(x);
    std::optional<Rational> y_lo;
    std::optional<Rational> y_hi;
    bool feasible = true;
    for (const HalfPlane& h : set.halfplanes()) {
      const Rational room = h.b() - Rational(h.a()) * xq;
      if (sgn(h.c()) == 0) {
        if (sgn(room) < 0) {
          feasible = false;
          break;
        }
        continue;
      }
      const Rational bound = room / Rational(h.c());
      if (sgn(h.c()) > 0) {
        if (!y_hi || bound < *y_hi) y_hi = bound;
      } else {
        if (!y_lo || bound > *y_lo) y_lo = bound;
      }
    }
    if (!feasible) continue;
    if (!y_lo || !y_hi) throw Error(Errc::UnboundedInput, "column is unbounded");
    for (Integer y = ceil(*y_lo), y_end = floor(*y_hi); y <= y_end; ++y) points.push_back({x, y});
  }
  return points;
}

HullResult integer_hull_oracle(const PolySet2& set, std::uint64_t cell_budget) {
  const std::vector<IntPoint2> points = enumerate_integer_points(set, cell_budget);
  return convex_hull(points);
}

}  // namespace inthull::oracle
