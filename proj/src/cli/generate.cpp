#include "inthull/cli/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "inthull/lattice.hpp"

namespace inthull::cli {

namespace {

constexpr int kMaxAttempts = 10000;

std::vector<IntPoint2> primitive_normals(int radius) {
  std::vector<IntPoint2> out;
  for (int a = -radius; a <= radius; ++a) {
    for (int c = -radius; c <= radius; ++c) {
      if ((a != 0 || c != 0) && std::gcd(a, c) == 1) out.push_back({a, c});
    }
  }
  return out;
}

bool tightened_lines_rich(const PolySet2& set) {
  for (std::size_t i = 0; i < set.halfplanes().size(); ++i) {
    const auto hit = sweep_inward(set, i);
    if (!hit || hit->lo == hit->hi) return false;
  }
  return true;
}

}  // namespace

std::int64_t SeedStream::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

double SeedStream::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

InstanceFile generate_random(int n, const Rational& scale, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::Degenerate, "random instances need n >= 3");
  if (sgn(scale) <= 0) throw Error(Errc::Degenerate, "scale must be positive");
  SeedStream rng(seed);
  const double rx = to_double(scale) * static_cast<double>(rng.uniform(90, 110)) / 100;
  const double ry = to_double(scale) * static_cast<double>(rng.uniform(90, 110)) / 100;
  const Point2 center{make_rational(rng.uniform(0, 99), 100), make_rational(rng.uniform(0, 99), 100)};
  const std::size_t m = 8 * static_cast<std::size_t>(n);
  std::vector<double> angles(m);
  for (std::size_t i = 0; i < m; ++i) angles[i] = 2 * std::numbers::pi * (i + 0.5 * rng.unit()) / m;

  // Round to the 1/q grid, refining the grid until enough points stay
  // extreme; any subset of the hull vertices is again in convex position.
  for (long q = 10;; q *= 2) {
    std::vector<Point2> pts;
    for (double theta : angles) {
      const Integer px = static_cast<long>(std::lround(rx * std::cos(theta) * q));
      const Integer py = static_cast<long>(std::lround(ry * std::sin(theta) * q));
      pts.push_back(Point2{center.x + make_rational(px, q), center.y + make_rational(py, q)});
    }
    std::vector<Point2> hull = convex_hull_rational(pts);
    if (hull.size() < static_cast<std::size_t>(n)) continue;
    std::vector<std::size_t> keep(hull.size());
    std::iota(keep.begin(), keep.end(), 0);
    for (int i = 0; i < n; ++i) {
      std::swap(keep[i], keep[rng.uniform(i, static_cast<std::int64_t>(keep.size()) - 1)]);
    }
    keep.resize(n);
    std::sort(keep.begin(), keep.end());
    std::vector<Point2> vs;
    for (std::size_t k : keep) vs.push_back(hull[k]);
    InstanceFile out;
    out.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
    out.body = std::move(vs);
    return out;
  }
}

InstanceFile generate_edgecase(int n, const Rational& scale, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::Degenerate, "edge-case instances need n >= 3");
  if (sgn(scale) <= 0) throw Error(Errc::Degenerate, "scale must be positive");
  int radius = 2;
  std::vector<IntPoint2> normals = primitive_normals(radius);
  while (normals.size() < 2 * static_cast<std::size_t>(n)) normals = primitive_normals(++radius);

  SeedStream rng(seed);
  const double s = to_double(scale);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < n; ++i) {
      std::swap(normals[i], normals[rng.uniform(i, static_cast<std::int64_t>(normals.size()) - 1)]);
    }
    std::vector<HalfPlane> hs;
    for (int i = 0; i < n; ++i) {
      const IntPoint2& v = normals[i];
      const double len = std::sqrt(Integer(v.x * v.x + v.y * v.y).get_d());
      const Integer base = static_cast<long>(std::llround(s * len));
      const std::int64_t q = rng.uniform(2, 7);
      const Rational delta = make_rational(rng.uniform(1, q - 1), q);
      hs.push_back(HalfPlane::make(Rational(v.x), Rational(v.y), Rational(base) + delta));
    }
    std::optional<PolySet2> set;
    try {
      set = PolySet2::intersect(hs);
    } catch (const Error&) {
      continue;  // normals do not span the plane
    }
    if (!set || set->vertices().size() != static_cast<std::size_t>(n)) continue;
    if (!tightened_lines_rich(*set)) continue;
    InstanceFile out;
    out.name = "edgecase-n" + std::to_string(n) + "-s" + std::to_string(seed);
    out.body = set->vertices();
    return out;
  }
  throw std::runtime_error("edge-case generator found no instance");
}

InstanceFile generate_small(std::uint64_t seed) {
  SeedStream rng(seed);
  for (;;) {
    const auto m = rng.uniform(3, 30);
    std::vector<Point2> pts;
    for (std::int64_t i = 0; i < m; ++i) {
      const auto dx = rng.uniform(1, 10);
      const auto dy = rng.uniform(1, 10);
      pts.push_back(Point2{make_rational(rng.uniform(-50, 50), dx), make_rational(rng.uniform(-50, 50), dy)});
    }
    std::vector<Point2> hull = convex_hull_rational(pts);
    if (hull.size() < 3 || hull.size() > 12) continue;
    InstanceFile out;
    out.name = "small-s" + std::to_string(seed);
    out.body = std::move(hull);
    return out;
  }
}

}  // namespace inthull::cli
