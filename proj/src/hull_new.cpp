#include "inthull/hull_new.hpp"

#include <algorithm>
#include <stdexcept>

#include "inthull/oracle.hpp"

namespace inthull {

namespace {

struct Refiner {
  const RefineConfig& config;
  EngineStats& stats;
  Trace* trace;
  CandidateSet& found;

  void insert(const HullResult& hull) { found.insert(hull.points.begin(), hull.points.end()); }

  void brute_force(const PolySet2& region) {
    stats.brute_cells += bbox_cells(region);
    ++stats.brute_regions;
    const CandidateSet points = brute_force_region(region);
    insert(convex_hull(std::vector<IntPoint2>(points.begin(), points.end())));
  }

  void solve(const PolySet2& set, unsigned depth_left, unsigned level) {
    stats.max_depth_reached = std::max(stats.max_depth_reached, level);
    ReplacedFacets replaced = replace_facets(set, config.sweep);
    stats.sweeps += set.halfplanes().size();
    if (replaced.candidates.empty()) return;
    found.insert(replaced.candidates.begin(), replaced.candidates.end());
    if (trace) {
      for (const FacetChord& fc : replaced.chords) {
        if (auto seg = chord(set, fc.line)) trace->chords.push_back(*seg);
      }
    }

    const std::optional<PolySet2> core = trim_to_chords(set, replaced);
    if (!core) throw std::logic_error("trimmed set lost its sweep hits");
    if (core->degenerate()) {
      insert(degenerate_hull(*core));
      return;
    }
    const HullResult partial = convex_hull(
        std::vector<IntPoint2>(replaced.candidates.begin(), replaced.candidates.end()));
    if (partial.size() < 2) throw std::logic_error("single candidate inside a full-dimensional core");

    const Rational parent_area = area(set);
    for (const PolySet2& region : residual_regions(*core, partial)) {
      if (trace) trace->regions.push_back(region);
      if (region.degenerate()) {
        insert(degenerate_hull(region));
        continue;
      }
      if (area(region) >= parent_area) throw std::logic_error("residual region did not shrink");
      if (depth_left == 0 ||
          bbox_cells(region) <= Integer(std::to_string(config.brute_force_cell_threshold))) {
        brute_force(region);
      } else {
        solve(region, depth_left - 1, level + 1);
      }
    }
  }
};

}  // namespace

ReplacedFacets replace_facets(const PolySet2& set, const SweepOptions& options) {
  ReplacedFacets out;
  for (std::size_t i = 0; i < set.halfplanes().size(); ++i) {
    std::optional<SweepHit> hit = sweep_from_opposite(set, i, options);
    if (!hit) continue;
    const HalfPlane& facet = set.halfplanes()[i];
    out.candidates.insert(hit->lo);
    out.candidates.insert(hit->hi);
    out.chords.push_back(FacetChord{
        i, Line::make(Rational(facet.a()), Rational(facet.c()), Rational(hit->offset)), *hit});
  }
  return out;
}

std::optional<PolySet2> trim_to_chords(const PolySet2& set, const ReplacedFacets& replaced) {
  std::vector<HalfPlane> cuts;
  cuts.reserve(replaced.chords.size());
  for (const FacetChord& fc : replaced.chords) {
    const HalfPlane& facet = set.halfplanes()[fc.facet_index];
    cuts.push_back(facet.with_offset(Rational(fc.hit.offset)).opposite());
  }
  return clip(set, cuts);
}

std::vector<PolySet2> residual_regions(const PolySet2& set, const HullResult& hull_so_far) {
  return regions_outside(set, hull_so_far);
}

CandidateSet brute_force_region(const PolySet2& region) {
  const std::vector<IntPoint2> points = oracle::enumerate_integer_points(region);
  return CandidateSet(points.begin(), points.end());
}

HullResult integer_hull_new(const PolySet2& set, const RefineConfig& config, EngineStats* stats,
                            Trace* trace) {
  if (config.brute_force_cell_threshold < 1 || config.max_depth < 1) {
    throw std::invalid_argument("RefineConfig values must be >= 1");
  }
  if (!set.bounded()) throw Error(Errc::UnboundedInput, "integer hull of an unbounded set");
  if (set.degenerate()) return degenerate_hull(set);

  EngineStats local;
  CandidateSet found;
  Refiner refiner{config, stats ? *stats : local, trace, found};
  refiner.solve(set, config.max_depth, 0);
  return convex_hull(std::vector<IntPoint2>(found.begin(), found.end()));
}

}  // namespace inthull
