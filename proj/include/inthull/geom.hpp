#pragma once

#include <optional>
#include <span>
#include <vector>

#include "inthull/error.hpp"
#include "inthull/rational.hpp"

namespace inthull {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }
  // Lexicographic: x first, then y.
  friend bool operator<(const Point2& p, const Point2& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  }
};

struct IntPoint2 {
  Integer x;
  Integer y;

  Point2 to_point() const { return Point2{Rational(x), Rational(y)}; }

  friend bool operator==(const IntPoint2& p, const IntPoint2& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator<(const IntPoint2& p, const IntPoint2& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  }
};

// Present only when the point has integer coordinates.
std::optional<IntPoint2> as_int_point(const Point2& p);

// a*x + c*y = b with gcd(|a|, |c|) = 1 and a > 0 or (a = 0 and c > 0).
class Line {
 public:
  // Rescales (a, c, b) by a nonzero rational so the invariants hold.
  static Line make(const Rational& a, const Rational& c, const Rational& b);

  const Integer& a() const { return a_; }
  const Integer& c() const { return c_; }
  const Rational& b() const { return b_; }

  Rational value(const Point2& p) const { return Rational(a_) * p.x + Rational(c_) * p.y; }
  bool contains(const Point2& p) const { return value(p) == b_; }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.c_ == m.c_ && l.b_ == m.b_;
  }

 private:
  Line(Integer a, Integer c, Rational b) : a_(std::move(a)), c_(std::move(c)), b_(std::move(b)) {}

  Integer a_;
  Integer c_;
  Rational b_;
};

// a*x + c*y <= b with gcd(|a|, |c|) = 1. Orientation is meaningful, so only
// positive rescaling is applied.
class HalfPlane {
 public:
  static HalfPlane make(const Rational& a, const Rational& c, const Rational& b);

  const Integer& a() const { return a_; }
  const Integer& c() const { return c_; }
  const Rational& b() const { return b_; }

  Rational value(const Point2& p) const { return Rational(a_) * p.x + Rational(c_) * p.y; }
  // value(p) - b: nonpositive inside.
  Rational slack(const Point2& p) const { return value(p) - b_; }
  bool satisfied(const Point2& p) const { return value(p) <= b_; }

  HalfPlane with_offset(const Rational& b) const { return HalfPlane(a_, c_, b); }
  // The closed complementary side: a*x + c*y >= b.
  HalfPlane opposite() const { return HalfPlane(-a_, -c_, -b_); }
  Line boundary() const { return Line::make(Rational(a_), Rational(c_), b_); }

  friend bool operator==(const HalfPlane& h, const HalfPlane& k) {
    return h.a_ == k.a_ && h.c_ == k.c_ && h.b_ == k.b_;
  }

 private:
  HalfPlane(Integer a, Integer c, Rational b) : a_(std::move(a)), c_(std::move(c)), b_(std::move(b)) {}

  Integer a_;
  Integer c_;
  Rational b_;
};

// A chord. p == q is allowed and denotes a single-point chord.
struct Segment {
  Point2 p;
  Point2 q;
};

// Bounded convex subset of Q^2 with both representations.
//
// Full-dimensional sets keep strictly CCW vertices starting at the
// lexicographically smallest one, and exactly one half-plane per edge
// (halfplanes()[i] is tight on vertices()[i] and vertices()[i+1]).
// Degenerate sets (a point or a segment, produced by clip and by
// intersections of tightened half-planes) keep 1 or 2 vertices and the
// half-planes that cut them out.
class PolySet2 {
 public:
  static PolySet2 from_vertices(std::span<const Point2> vertices);
  static PolySet2 from_halfplanes(std::span<const HalfPlane> halfplanes);
  // Convex hull of any nonempty point list; one or two distinct hull points
  // give a degenerate set.
  static PolySet2 from_points(std::span<const Point2> points);
  // Exact intersection of the half-planes; nullopt when empty. Degenerate
  // results are returned as such. Throws Unbounded when the set is unbounded.
  static std::optional<PolySet2> intersect(std::span<const HalfPlane> halfplanes);

  const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Point2>& rays() const { return rays_; }

  // 0 for a point, 1 for a segment, 2 for a polygon.
  int dimension() const { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }
  bool degenerate() const { return vertices_.size() < 3; }
  bool bounded() const { return rays_.empty(); }

  PolySet2 with_rays(std::vector<Point2> rays) const;

 private:
  friend std::optional<PolySet2> clip(const PolySet2& set, const HalfPlane& h);
// Same as clipping by each half-plane in turn, normalised once at the end.
std::optional<PolySet2> clip(const PolySet2& set, std::span<const HalfPlane> hs);
  friend std::optional<PolySet2> clip(const PolySet2& set, std::span<const HalfPlane> hs);
  PolySet2() = default;
  static PolySet2 from_ring(std::vector<Point2> ring, std::vector<HalfPlane> cutters);

  std::vector<HalfPlane> halfplanes_;
  std::vector<Point2> vertices_;
  std::vector<Point2> rays_;
};

// Canonical integer hull: empty, one point, two points in lexicographic
// order, or >= 3 points strictly CCW from the lexicographically smallest.
struct HullResult {
  std::vector<IntPoint2> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  friend bool operator==(const HullResult& a, const HullResult& b) { return a.points == b.points; }
};

enum class Orientation { Left, Right, Collinear };

Orientation orient(const Point2& p, const Point2& q, const Point2& r);
Orientation orient(const IntPoint2& p, const IntPoint2& q, const IntPoint2& r);

Line line_through(const Point2& p, const Point2& q);
Point2 intersect_lines(const Line& l1, const Line& l2);

HullResult convex_hull(std::span<const IntPoint2> points);
// Strict convex hull of rational points in the same canonical order.
std::vector<Point2> convex_hull_rational(std::span<const Point2> points);
std::vector<Point2> sort_points_ccw(std::span<const Point2> points);

PolySet2 polyset_from_vertices(std::span<const Point2> vertices);
PolySet2 polyset_from_halfplanes(std::span<const HalfPlane> halfplanes);
PolySet2 polyset_from_points(std::span<const Point2> points);

bool contains(const PolySet2& set, const Point2& p);
bool contains(const PolySet2& set, const IntPoint2& p);
Rational area(const PolySet2& set);
// nullopt when the intersection is empty.
std::optional<PolySet2> clip(const PolySet2& set, const HalfPlane& h);

// Point-in-closed-polygon test for a canonical HullResult (any size).
bool hull_contains(const HullResult& hull, const IntPoint2& p);

}  // namespace inthull
