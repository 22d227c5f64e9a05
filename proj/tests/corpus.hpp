#pragma once

// Shared fuzz-instance builders for the test and acceptance suites: a mix of
// uniform points in a small box (degeneracy-rich at these densities) and
// planted collinear lines with noise.

#include <cstdint>
#include <vector>

#include "collinear/generator.hpp"
#include "collinear/point_set.hpp"
#include "collinear/rng.hpp"

namespace corpus {

inline collinear::PointSet instance(std::uint64_t seed, std::size_t max_n = 60) {
  collinear::SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  const std::uint64_t flavor = rng.next() % 3;
  if (flavor == 0) {
    collinear::PlantedSpec spec;
    spec.lines = static_cast<std::size_t>(rng.in_range(1, 4));
    spec.per_line = static_cast<std::size_t>(rng.in_range(3, 7));
    spec.noise = static_cast<std::size_t>(rng.in_range(0, 12));
    spec.box = 30;
    return collinear::generate(spec, seed);
  }
  collinear::RandomSpec spec;
  spec.count = static_cast<std::size_t>(rng.in_range(3, static_cast<std::int64_t>(max_n)));
  spec.box = 20;
  return collinear::generate(spec, seed);
}

// Distinct random points in [-range, range]^2, handy for predicate-level tests.
inline std::vector<collinear::Point> raw_points(collinear::SplitMix64& rng, std::size_t count,
                                                std::int64_t range) {
  std::vector<collinear::Point> points;
  while (points.size() < count) {
    const collinear::Point p{rng.in_range(-range, range), rng.in_range(-range, range)};
    bool fresh = true;
    for (const auto& q : points)
      if (q == p) fresh = false;
    if (fresh) points.push_back(p);
  }
  return points;
}

}  // namespace corpus
