#include "inthull/regions.hpp"

#include <algorithm>
#include <stdexcept>

#include "inthull/lattice.hpp"

namespace inthull {

Integer bbox_cells(const PolySet2& set) {
  const auto& vs = set.vertices();
  if (vs.empty()) return 0;
  const auto [x_lo, x_hi] = std::minmax_element(
      vs.begin(), vs.end(), [](const Point2& p, const Point2& q) { return p.x < q.x; });
  const auto [y_lo, y_hi] = std::minmax_element(
      vs.begin(), vs.end(), [](const Point2& p, const Point2& q) { return p.y < q.y; });
  const Integer cols = floor(x_hi->x) - ceil(x_lo->x) + 1;
  const Integer rows = floor(y_hi->y) - ceil(y_lo->y) + 1;
  if (cols <= 0 || rows <= 0) return 0;
  return cols * rows;
}

HullResult degenerate_hull(const PolySet2& set) {
  const auto& vs = set.vertices();
  if (vs.size() == 1) {
    if (auto p = as_int_point(vs[0])) return HullResult{{*p}};
    return {};
  }
  if (vs.size() != 2) throw std::logic_error("degenerate_hull on a polygon");
  const auto hit = integer_points_on_chord(line_through(vs[0], vs[1]), Segment{vs[0], vs[1]});
  if (!hit) return {};
  if (hit->lo == hit->hi) return HullResult{{hit->lo}};
  return HullResult{{hit->lo, hit->hi}};
}

HalfPlane right_side(const IntPoint2& u, const IntPoint2& w) {
  const Integer dx = w.x - u.x;
  const Integer dy = w.y - u.y;
  return HalfPlane::make(Rational(-dy), Rational(dx), Rational(dx * u.y - dy * u.x));
}

namespace {

void add_piece(std::vector<PolySet2>& out, const PolySet2& region, const IntPoint2& u,
               const IntPoint2& w) {
  std::optional<PolySet2> piece = clip(region, right_side(u, w));
  if (!piece) return;
  if (piece->degenerate()) {
    const HullResult edge = w < u ? HullResult{{w, u}} : HullResult{{u, w}};
    const HullResult lattice = degenerate_hull(*piece);
    const bool nothing_new = std::all_of(lattice.points.begin(), lattice.points.end(),
                                         [&](const IntPoint2& p) { return hull_contains(edge, p); });
    if (nothing_new) return;
  }
  out.push_back(*std::move(piece));
}

}  // namespace

std::vector<PolySet2> regions_outside(const PolySet2& region, const HullResult& hull) {
  const auto& hv = hull.points;
  if (hv.size() < 2) return {region};
  std::vector<PolySet2> out;
  if (hv.size() == 2) {
    add_piece(out, region, hv[0], hv[1]);
    add_piece(out, region, hv[1], hv[0]);
    return out;
  }
  for (std::size_t i = 0; i < hv.size(); ++i) add_piece(out, region, hv[i], hv[(i + 1) % hv.size()]);
  return out;
}

}  // namespace inthull
