#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "inthull/geom.hpp"

namespace inthull {

struct Egcd {
  Integer g;  // gcd(|a|, |c|) > 0
  Integer u;
  Integer v;  // a*u + c*v = g
};

Egcd egcd(const Integer& a, const Integer& c);

// All integer points of a line: base + t * dir, t in Z.
struct LineLattice {
  IntPoint2 base;
  IntPoint2 dir;  // (c, -a)

  IntPoint2 at(const Integer& t) const { return {base.x + t * dir.x, base.y + t * dir.y}; }
};

// Extreme lattice points of one chord. lo <= hi lexicographically; every
// lattice point of the chord lies between them on the line. For sweeps the
// offset is in the facet's own (a, c) frame.
struct SweepHit {
  Integer offset;
  IntPoint2 lo;
  IntPoint2 hi;
};

struct SweepOptions {
  // Upper bound on the number of offsets examined by one sweep; exceeding it
  // throws Errc::SweepLimitExceeded.
  std::optional<std::uint64_t> max_steps;
};

bool line_has_integer_point(const Line& l);
LineLattice lattice_of_line(const Line& l);

// seg must lie on l. The returned offset is l.b().
std::optional<SweepHit> integer_points_on_chord(const Line& l, const Segment& seg);

// P ∩ l, computed by clipping the parameter interval of l against every
// half-plane of P. A single-point chord has p == q.
std::optional<Segment> chord(const PolySet2& set, const Line& l);

// Translate the facet's line toward the interior one integer offset at a
// time, starting at floor(b_f), until its chord holds a lattice point.
std::optional<SweepHit> sweep_inward(const PolySet2& set, std::size_t facet_index,
                                     const SweepOptions& options = {});

// Translate a line parallel to the facet from the far side of the set (the
// vertex minimising a*x + c*y) toward the facet until its chord holds a
// lattice point.
std::optional<SweepHit> sweep_from_opposite(const PolySet2& set, std::size_t facet_index,
                                            const SweepOptions& options = {});

// Precomputed slicing of a full-dimensional set by the level lines of
// a*x + c*y. chord_at is O(log n) in the number of vertices.
class DirectionalSlicer {
 public:
  // Keeps a view of set's vertices; set must outlive the slicer.
  DirectionalSlicer(const PolySet2& set, Integer a, Integer c);

  const Rational& min_value() const { return values_[min_last_]; }
  const Rational& max_value() const { return values_[max_first_]; }
  std::optional<Segment> chord_at(const Rational& offset) const;

 private:
  Point2 cross_chain(std::size_t from, std::size_t to, const Rational& offset) const;

  std::span<const Point2> vertices_;
  Integer a_;
  Integer c_;
  std::vector<Rational> values_;
  // The extreme level sets are a vertex or an edge; *_first / *_last are the
  // ends of that run in CCW order.
  std::size_t min_first_ = 0;
  std::size_t min_last_ = 0;
  std::size_t max_first_ = 0;
  std::size_t max_last_ = 0;
};

}  // namespace inthull
