#include "inthull/geom.hpp"

#include <algorithm>

namespace inthull {

namespace {

template <class P>
auto cross(const P& o, const P& a, const P& b) {
  using Coord = decltype(P{}.x);
  Coord r = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  return r;
}

// Andrew's monotone chain; strict (collinear points dropped). Output starts
// at the lexicographically smallest point and runs counter-clockwise.
template <class P>
std::vector<P> monotone_chain(std::vector<P> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (const P& p : pts) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Orientation from_sign(int s) {
  if (s > 0) return Orientation::Left;
  if (s < 0) return Orientation::Right;
  return Orientation::Collinear;
}

// Outward half-plane of the CCW edge u -> w.
HalfPlane edge_halfplane(const Point2& u, const Point2& w) {
  const Rational dx = w.x - u.x;
  const Rational dy = w.y - u.y;
  return HalfPlane::make(dy, -dx, dy * u.x - dx * u.y);
}

// Sutherland-Hodgman step against one half-plane. Works for rings of any
// size, including the 1- and 2-vertex rings of degenerate sets.
std::vector<Point2> clip_ring(const std::vector<Point2>& ring, const HalfPlane& h) {
  const std::size_t k = ring.size();
  std::vector<Rational> slack(k);
  bool any_in = false;
  bool any_out = false;
  for (std::size_t i = 0; i < k; ++i) {
    slack[i] = h.slack(ring[i]);
    if (sgn(slack[i]) <= 0) any_in = true;
    if (sgn(slack[i]) > 0) any_out = true;
  }
  if (!any_out) return ring;
  if (!any_in) return {};

  std::vector<Point2> out;
  out.reserve(k + 2);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    const int si = sgn(slack[i]);
    const int sj = sgn(slack[j]);
    if (si <= 0) out.push_back(ring[i]);
    if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
      const Rational t = slack[i] / (slack[i] - slack[j]);
      out.push_back(Point2{ring[i].x + t * (ring[j].x - ring[i].x),
                           ring[i].y + t * (ring[j].y - ring[i].y)});
    }
  }
  return out;
}

Rational abs_q(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

}  // namespace

std::optional<IntPoint2> as_int_point(const Point2& p) {
  if (!is_integer(p.x) || !is_integer(p.y)) return std::nullopt;
  return IntPoint2{p.x.get_num(), p.y.get_num()};
}

Line Line::make(const Rational& a, const Rational& c, const Rational& b) {
  if (sgn(a) == 0 && sgn(c) == 0) throw Error(Errc::Degenerate, "line with zero normal");
  const Integer scale = lcm(a.get_den(), c.get_den());
  Integer ai = a.get_num() * (scale / a.get_den());
  Integer ci = c.get_num() * (scale / c.get_den());
  const Integer g = gcd(ai, ci);
  ai /= g;
  ci /= g;
  Rational bi = b * Rational(scale) / Rational(g);
  if (sgn(ai) < 0 || (sgn(ai) == 0 && sgn(ci) < 0)) {
    ai = -ai;
    ci = -ci;
    bi = -bi;
  }
  return Line(std::move(ai), std::move(ci), std::move(bi));
}

HalfPlane HalfPlane::make(const Rational& a, const Rational& c, const Rational& b) {
  if (sgn(a) == 0 && sgn(c) == 0) throw Error(Errc::Degenerate, "half-plane with zero normal");
  const Integer scale = lcm(a.get_den(), c.get_den());
  Integer ai = a.get_num() * (scale / a.get_den());
  Integer ci = c.get_num() * (scale / c.get_den());
  const Integer g = gcd(ai, ci);
  ai /= g;
  ci /= g;
  Rational bi = b * Rational(scale) / Rational(g);
  return HalfPlane(std::move(ai), std::move(ci), std::move(bi));
}

Orientation orient(const Point2& p, const Point2& q, const Point2& r) {
  return from_sign(sgn(cross(p, q, r)));
}

Orientation orient(const IntPoint2& p, const IntPoint2& q, const IntPoint2& r) {
  return from_sign(sgn(cross(p, q, r)));
}

Line line_through(const Point2& p, const Point2& q) {
  if (p == q) throw Error(Errc::IdenticalPoints, "line_through needs two distinct points");
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  return Line::make(dy, -dx, dy * p.x - dx * p.y);
}

Point2 intersect_lines(const Line& l1, const Line& l2) {
  const Integer det = l1.a() * l2.c() - l2.a() * l1.c();
  if (det == 0) {
    if (l1 == l2) throw Error(Errc::Coincident, "lines coincide");
    throw Error(Errc::Parallel, "lines are parallel");
  }
  const Rational d(det);
  return Point2{(l1.b() * Rational(l2.c()) - l2.b() * Rational(l1.c())) / d,
                (Rational(l1.a()) * l2.b() - Rational(l2.a()) * l1.b()) / d};
}

HullResult convex_hull(std::span<const IntPoint2> points) {
  return HullResult{monotone_chain(std::vector<IntPoint2>(points.begin(), points.end()))};
}

std::vector<Point2> convex_hull_rational(std::span<const Point2> points) {
  return monotone_chain(std::vector<Point2>(points.begin(), points.end()));
}

std::vector<Point2> sort_points_ccw(std::span<const Point2> points) {
  std::vector<Point2> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) throw Error(Errc::Degenerate, "need at least 3 distinct points");
  std::vector<Point2> hull = monotone_chain(distinct);
  if (hull.size() != distinct.size()) {
    throw Error(Errc::NotConvexPosition, "a point is not a vertex of the hull of the others");
  }
  return hull;
}

PolySet2 PolySet2::from_ring(std::vector<Point2> ring, std::vector<HalfPlane> cutters) {
  PolySet2 set;
  set.vertices_ = monotone_chain(std::move(ring));
  if (set.vertices_.size() >= 3) {
    const std::size_t n = set.vertices_.size();
    set.halfplanes_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      set.halfplanes_.push_back(edge_halfplane(set.vertices_[i], set.vertices_[(i + 1) % n]));
    }
  } else {
    set.halfplanes_ = std::move(cutters);
  }
  return set;
}

PolySet2 PolySet2::from_vertices(std::span<const Point2> vertices) {
  PolySet2 set = from_ring(std::vector<Point2>(vertices.begin(), vertices.end()), {});
  if (set.vertices_.size() < 3) {
    throw Error(Errc::Degenerate, "fewer than 3 distinct points or all collinear");
  }
  return set;
}

PolySet2 PolySet2::from_points(std::span<const Point2> points) {
  std::vector<Point2> hull = monotone_chain(std::vector<Point2>(points.begin(), points.end()));
  if (hull.empty()) throw Error(Errc::Degenerate, "no points");
  if (hull.size() >= 3) return from_ring(std::move(hull), {});
  const Point2& p = hull.front();
  const Point2& q = hull.back();
  std::vector<HalfPlane> cutters;
  if (hull.size() == 1) {
    cutters = {HalfPlane::make(1, 0, p.x), HalfPlane::make(-1, 0, -p.x),
               HalfPlane::make(0, 1, p.y), HalfPlane::make(0, -1, -p.y)};
  } else {
    const HalfPlane side = edge_halfplane(p, q);
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    cutters = {side, side.opposite(), HalfPlane::make(dx, dy, dx * q.x + dy * q.y),
               HalfPlane::make(-dx, -dy, -(dx * p.x + dy * p.y))};
  }
  return from_ring(std::move(hull), std::move(cutters));
}

std::optional<PolySet2> PolySet2::intersect(std::span<const HalfPlane> halfplanes) {
  // Every vertex of a bounded intersection solves a 2x2 integer system, so
  // by Cramer's rule |x|, |y| <= 2 * max|b| * max(|a|, |c|) < box.
  Rational b_max = 0;
  Integer coeff_max = 1;
  for (const HalfPlane& h : halfplanes) {
    b_max = std::max(b_max, abs_q(h.b()));
    coeff_max = std::max({coeff_max, abs(h.a()), abs(h.c())});
  }
  const Rational box(ceil(Rational(2) * b_max * Rational(coeff_max)) + 1);
  std::vector<Point2> ring{{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (const HalfPlane& h : halfplanes) {
    ring = clip_ring(ring, h);
    if (ring.empty()) return std::nullopt;
  }
  for (const Point2& v : ring) {
    if (abs_q(v.x) >= box || abs_q(v.y) >= box) {
      throw Error(Errc::Unbounded, "half-plane intersection is unbounded");
    }
  }
  return from_ring(std::move(ring), std::vector<HalfPlane>(halfplanes.begin(), halfplanes.end()));
}

PolySet2 PolySet2::from_halfplanes(std::span<const HalfPlane> halfplanes) {
  std::optional<PolySet2> set = intersect(halfplanes);
  if (!set) throw Error(Errc::EmptySet, "half-planes have empty intersection");
  if (set->degenerate()) throw Error(Errc::Degenerate, "intersection is a point or a segment");
  return *std::move(set);
}

PolySet2 PolySet2::with_rays(std::vector<Point2> rays) const {
  PolySet2 copy = *this;
  copy.rays_ = std::move(rays);
  return copy;
}

PolySet2 polyset_from_vertices(std::span<const Point2> vertices) {
  return PolySet2::from_vertices(vertices);
}

PolySet2 polyset_from_halfplanes(std::span<const HalfPlane> halfplanes) {
  return PolySet2::from_halfplanes(halfplanes);
}

PolySet2 polyset_from_points(std::span<const Point2> points) { return PolySet2::from_points(points); }

bool contains(const PolySet2& set, const Point2& p) {
  return std::all_of(set.halfplanes().begin(), set.halfplanes().end(),
                     [&](const HalfPlane& h) { return h.satisfied(p); });
}

bool contains(const PolySet2& set, const IntPoint2& p) { return contains(set, p.to_point()); }

Rational area(const PolySet2& set) {
  const auto& v = set.vertices();
  if (v.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

std::optional<PolySet2> clip(const PolySet2& set, const HalfPlane& h) {
  std::vector<Point2> ring = clip_ring(set.vertices(), h);
  if (ring.empty()) return std::nullopt;
  if (ring.size() == set.vertices().size() && ring == set.vertices()) return set;
  std::vector<HalfPlane> cutters = set.halfplanes();
  cutters.push_back(h);
  return PolySet2::from_ring(std::move(ring), std::move(cutters));
}

std::optional<PolySet2> clip(const PolySet2& set, std::span<const HalfPlane> hs) {
  std::vector<Point2> ring = set.vertices();
  std::vector<HalfPlane> cutters = set.halfplanes();
  bool changed = false;
  for (const HalfPlane& h : hs) {
    std::vector<Point2> next = clip_ring(ring, h);
    if (next.empty()) return std::nullopt;
    if (next != ring) {
      changed = true;
      cutters.push_back(h);
      ring = std::move(next);
    }
  }
  if (!changed) return set;
  return PolySet2::from_ring(std::move(ring), std::move(cutters));
}

bool hull_contains(const HullResult& hull, const IntPoint2& p) {
  const auto& v = hull.points;
  switch (v.size()) {
    case 0:
      return false;
    case 1:
      return v[0] == p;
    case 2:
      return orient(v[0], v[1], p) == Orientation::Collinear && !(p < v[0]) && !(v[1] < p);
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (orient(v[i], v[(i + 1) % v.size()], p) == Orientation::Right) return false;
      }
      return true;
  }
}

}  // namespace inthull
