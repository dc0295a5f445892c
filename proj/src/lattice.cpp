#include "inthull/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace inthull {

namespace {

Rational param_on(const LineLattice& lat, const Point2& p) {
  const Rational dx = p.x - Rational(lat.base.x);
  const Rational dy = p.y - Rational(lat.base.y);
  const Integer norm2 = lat.dir.x * lat.dir.x + lat.dir.y * lat.dir.y;
  return (dx * Rational(lat.dir.x) + dy * Rational(lat.dir.y)) / Rational(norm2);
}

// Ends of the run of indices attaining `target` in a cyclic sequence whose
// extreme level set is one vertex or one edge.
std::pair<std::size_t, std::size_t> extreme_run(const std::vector<Rational>& values,
                                                const Rational& target) {
  const std::size_t n = values.size();
  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == target && values[(i + n - 1) % n] != target) {
      first = i;
      break;
    }
  }
  std::size_t last = first;
  while (values[(last + 1) % n] == target && (last + 1) % n != first) last = (last + 1) % n;
  return {first, last};
}

void count_step(std::uint64_t& steps, const SweepOptions& options) {
  ++steps;
  if (options.max_steps && steps > *options.max_steps) {
    throw Error(Errc::SweepLimitExceeded, "sweep exceeded " + std::to_string(*options.max_steps) + " steps");
  }
}

const HalfPlane& facet_of(const PolySet2& set, std::size_t facet_index) {
  if (set.degenerate()) throw Error(Errc::Degenerate, "sweeps need a full-dimensional set");
  if (facet_index >= set.halfplanes().size()) throw std::out_of_range("facet index");
  return set.halfplanes()[facet_index];
}

// Lattice points of the level lines a*x + c*y = k of one facet, with the
// extended-gcd base solution computed once per sweep. Facet normals are
// primitive, so every integer level holds lattice points.
class LevelLattice {
 public:
  LevelLattice(const Integer& a, const Integer& c);

  std::optional<SweepHit> points_on(const Integer& k, const Segment& seg) const {
    // Parameter of p along dir, relative to base(k) = k * (u, v).
    const Rational shift(k * base_dot_dir_);
    const Rational tp = (p_dot_dir(seg.p) - shift) / norm2_;
    const Rational tq = (p_dot_dir(seg.q) - shift) / norm2_;
    const Integer t_lo = ceil(std::min(tp, tq));
    const Integer t_hi = floor(std::max(tp, tq));
    if (t_lo > t_hi) return std::nullopt;
    IntPoint2 first = at(k, t_lo);
    IntPoint2 second = at(k, t_hi);
    if (second < first) std::swap(first, second);
    return SweepHit{k, std::move(first), std::move(second)};
  }

 private:
  Rational p_dot_dir(const Point2& p) const { return p.x * dir_x_ - p.y * a_; }
  IntPoint2 at(const Integer& k, const Integer& t) const {
    return {k * u_ + t * c_, k * v_ - t * a_};
  }

  Integer a_, c_, u_, v_, base_dot_dir_;
  Rational dir_x_, norm2_;
};

LevelLattice::LevelLattice(const Integer& a, const Integer& c) : a_(a), c_(c) {
  const Egcd e = egcd(a, c);
  if (e.g != 1) throw std::logic_error("facet normal is not primitive");
  u_ = e.u;
  v_ = e.v;
  base_dot_dir_ = u_ * c_ - v_ * a_;
  dir_x_ = Rational(c_);
  norm2_ = Rational(a_ * a_ + c_ * c_);
}

std::optional<SweepHit> hit_at(const DirectionalSlicer& slicer, const LevelLattice& lattice,
                               const Integer& offset) {
  std::optional<Segment> seg = slicer.chord_at(Rational(offset));
  if (!seg) return std::nullopt;
  return lattice.points_on(offset, *seg);
}

}  // namespace

Egcd egcd(const Integer& a, const Integer& c) {
  Integer old_r = abs(a), r = abs(c);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (sgn(a) < 0) old_s = -old_s;
  if (sgn(c) < 0) old_t = -old_t;
  return Egcd{old_r, old_s, old_t};
}

bool line_has_integer_point(const Line& l) { return is_integer(l.b()); }

LineLattice lattice_of_line(const Line& l) {
  if (!line_has_integer_point(l)) throw Error(Errc::NoIntegerPoints, "offset " + to_string(l.b()) + " is not an integer");
  const Egcd e = egcd(l.a(), l.c());
  const Integer b = l.b().get_num();
  return LineLattice{{e.u * b, e.v * b}, {l.c(), -l.a()}};
}

std::optional<SweepHit> integer_points_on_chord(const Line& l, const Segment& seg) {
  if (!l.contains(seg.p) || !l.contains(seg.q)) {
    throw Error(Errc::SegmentNotOnLine, "chord endpoints must lie on the line");
  }
  if (!line_has_integer_point(l)) return std::nullopt;
  const LineLattice lat = lattice_of_line(l);
  const Rational tp = param_on(lat, seg.p);
  const Rational tq = param_on(lat, seg.q);
  const Integer t_lo = ceil(std::min(tp, tq));
  const Integer t_hi = floor(std::max(tp, tq));
  if (t_lo > t_hi) return std::nullopt;
  IntPoint2 first = lat.at(t_lo);
  IntPoint2 second = lat.at(t_hi);
  if (second < first) std::swap(first, second);
  return SweepHit{l.b().get_num(), std::move(first), std::move(second)};
}

std::optional<Segment> chord(const PolySet2& set, const Line& l) {
  const Point2 origin = sgn(l.a()) != 0 ? Point2{l.b() / Rational(l.a()), 0}
                                        : Point2{0, l.b() / Rational(l.c())};
  const Rational dx(l.c());
  const Rational dy(-l.a());
  std::optional<Rational> t_lo;
  std::optional<Rational> t_hi;
  for (const HalfPlane& h : set.halfplanes()) {
    const Rational rate = Rational(h.a()) * dx + Rational(h.c()) * dy;
    const Rational room = -h.slack(origin);
    if (sgn(rate) == 0) {
      if (sgn(room) < 0) return std::nullopt;
      continue;
    }
    const Rational bound = room / rate;
    if (sgn(rate) > 0) {
      if (!t_hi || bound < *t_hi) t_hi = bound;
    } else {
      if (!t_lo || bound > *t_lo) t_lo = bound;
    }
  }
  if (!t_lo || !t_hi) throw Error(Errc::Unbounded, "chord of an unbounded set");
  if (*t_lo > *t_hi) return std::nullopt;
  return Segment{{origin.x + *t_lo * dx, origin.y + *t_lo * dy},
                 {origin.x + *t_hi * dx, origin.y + *t_hi * dy}};
}

std::optional<SweepHit> sweep_inward(const PolySet2& set, std::size_t facet_index,
                                     const SweepOptions& options) {
  const HalfPlane& facet = facet_of(set, facet_index);
  const DirectionalSlicer slicer(set, facet.a(), facet.c());
  const LevelLattice lattice(facet.a(), facet.c());
  const Integer stop = ceil(slicer.min_value());
  std::uint64_t steps = 0;
  for (Integer offset = floor(std::min(facet.b(), slicer.max_value())); offset >= stop; --offset) {
    count_step(steps, options);
    if (auto hit = hit_at(slicer, lattice, offset)) return hit;
  }
  return std::nullopt;
}

std::optional<SweepHit> sweep_from_opposite(const PolySet2& set, std::size_t facet_index,
                                            const SweepOptions& options) {
  const HalfPlane& facet = facet_of(set, facet_index);
  const DirectionalSlicer slicer(set, facet.a(), facet.c());
  const LevelLattice lattice(facet.a(), facet.c());
  const Integer stop = floor(std::min(facet.b(), slicer.max_value()));
  std::uint64_t steps = 0;
  for (Integer offset = ceil(slicer.min_value()); offset <= stop; ++offset) {
    count_step(steps, options);
    if (auto hit = hit_at(slicer, lattice, offset)) return hit;
  }
  return std::nullopt;
}

DirectionalSlicer::DirectionalSlicer(const PolySet2& set, Integer a, Integer c)
    : vertices_(set.vertices()), a_(std::move(a)), c_(std::move(c)) {
  if (vertices_.size() < 3) throw Error(Errc::Degenerate, "slicer needs a polygon");
  values_.reserve(vertices_.size());
  for (const Point2& v : vertices_) values_.push_back(Rational(a_) * v.x + Rational(c_) * v.y);
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  std::tie(min_first_, min_last_) = extreme_run(values_, *lo);
  std::tie(max_first_, max_last_) = extreme_run(values_, *hi);
}

Point2 DirectionalSlicer::cross_chain(std::size_t from, std::size_t to, const Rational& offset) const {
  const std::size_t n = vertices_.size();
  const bool rising = values_[to] > values_[from];
  auto passed = [&](std::size_t k) {
    const Rational& v = values_[(from + k) % n];
    return rising ? v >= offset : v <= offset;
  };
  // Smallest k in (0, len] with passed(k); passed(0) is false for interior offsets.
  std::size_t lo = 0;
  std::size_t hi = (to + n - from) % n;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (passed(mid)) hi = mid;
    else lo = mid;
  }
  const std::size_t i = (from + lo) % n;
  const std::size_t j = (from + hi) % n;
  const Rational s = (offset - values_[i]) / (values_[j] - values_[i]);
  return Point2{vertices_[i].x + s * (vertices_[j].x - vertices_[i].x),
                vertices_[i].y + s * (vertices_[j].y - vertices_[i].y)};
}

std::optional<Segment> DirectionalSlicer::chord_at(const Rational& offset) const {
  if (offset < min_value() || offset > max_value()) return std::nullopt;
  if (offset == min_value()) return Segment{vertices_[min_first_], vertices_[min_last_]};
  if (offset == max_value()) return Segment{vertices_[max_first_], vertices_[max_last_]};
  return Segment{cross_chain(min_last_, max_first_, offset), cross_chain(max_last_, min_first_, offset)};
}

}  // namespace inthull
