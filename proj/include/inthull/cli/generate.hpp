#pragma once

#include <cstdint>
#include <random>

#include "inthull/cli/instance.hpp"

namespace inthull::cli {

// Seeded stream with a fixed integer mapping, so instances are identical
// across standard libraries (std distributions are implementation-defined).
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; the modulo bias is irrelevant at these ranges.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

// Exactly n vertices: jittered points of an axis-aligned ellipse with
// semi-axes scale * (0.9 .. 1.1), rounded to a 1/q grid (q = 10, 20, 40, ..
// until the hull has at least n vertices) and a random n-subset of the hull
// vertices kept. n >= 3.
InstanceFile generate_random(int n, const Rational& scale, std::uint64_t seed);

// n facets with distinct small primitive normals and offsets
// round(scale * |normal|) + delta, 0 < delta < 1 non-integer. Every facet is
// non-redundant and its tightened line holds at least two lattice points.
InstanceFile generate_edgecase(int n, const Rational& scale, std::uint64_t seed);

// 3..12 vertices; hull of random points with |numerator| <= 50 and
// denominator <= 10.
InstanceFile generate_small(std::uint64_t seed);

}  // namespace inthull::cli
