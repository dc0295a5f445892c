#include "inthull/hull_baseline.hpp"

#include "inthull/oracle.hpp"

namespace inthull {

Normalized normalize_facets(const PolySet2& set, const SweepOptions& options) {
  Normalized out;
  std::vector<HalfPlane> tightened;
  tightened.reserve(set.halfplanes().size());
  for (std::size_t i = 0; i < set.halfplanes().size(); ++i) {
    std::optional<SweepHit> hit = sweep_inward(set, i, options);
    if (!hit) return Normalized{};
    tightened.push_back(set.halfplanes()[i].with_offset(Rational(hit->offset)));
    out.hits.push_back(*std::move(hit));
  }
  out.tightened = PolySet2::intersect(tightened);
  return out;
}

Partition partition(const PolySet2& tightened, std::span<const SweepHit> hits) {
  std::vector<IntPoint2> points;
  points.reserve(2 * hits.size());
  for (const SweepHit& hit : hits) {
    points.push_back(hit.lo);
    points.push_back(hit.hi);
  }
  Partition out{convex_hull(points), {}};
  out.corners = regions_outside(tightened, out.central);
  return out;
}

HullResult integer_hull_baseline(const PolySet2& set, const BaselineConfig& config,
                                 EngineStats* stats, Trace* trace) {
  if (!set.bounded()) throw Error(Errc::UnboundedInput, "integer hull of an unbounded set");
  if (set.degenerate()) return degenerate_hull(set);

  EngineStats local;
  EngineStats& counters = stats ? *stats : local;
  const Normalized normalized = normalize_facets(set, config.sweep);
  counters.sweeps += set.halfplanes().size();
  if (!normalized.tightened) return {};
  const PolySet2& q = *normalized.tightened;
  if (trace) {
    for (std::size_t i = 0; i < normalized.hits.size(); ++i) {
      const HalfPlane& facet = set.halfplanes()[i];
      const Line level = Line::make(Rational(facet.a()), Rational(facet.c()),
                                    Rational(normalized.hits[i].offset));
      if (auto seg = chord(set, level)) trace->chords.push_back(*seg);
    }
  }
  if (q.degenerate()) return degenerate_hull(q);

  const Partition parts = partition(q, normalized.hits);
  std::vector<IntPoint2> points = parts.central.points;
  for (const PolySet2& corner : parts.corners) {
    if (trace) trace->regions.push_back(corner);
    const HullResult local_hull =
        corner.degenerate() ? degenerate_hull(corner) : [&] {
          counters.brute_cells += bbox_cells(corner);
          ++counters.brute_regions;
          return oracle::integer_hull_oracle(corner);
        }();
    points.insert(points.end(), local_hull.points.begin(), local_hull.points.end());
  }
  return convex_hull(points);
}

}  // namespace inthull
