#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "collinear/enumerate.hpp"
#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

inline constexpr std::size_t kOracleCap = 500;

// Exhaustive ground truth for differential testing. For every point pair,
// gather all points on its line; that set is kept exactly once, when the pair
// is the set's two smallest indices. Shares nothing with the cyclic-sort
// pipeline beyond the orient predicate. Roughly O(n^3), hence the size cap.
inline EnumerationResult brute_force(const PointSet& ps, std::size_t min_size = 3,
                                     std::size_t cap = kOracleCap) {
  if (ps.size() > cap) throw std::invalid_argument("brute_force: point set exceeds the oracle cap");
  const auto start = detail::Clock::now();
  const std::size_t n = ps.size();
  std::vector<std::vector<std::size_t>> raw;
  std::vector<std::size_t> line;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      line.clear();
      for (std::size_t k = 0; k < n; ++k)
        if (orient(ps[i], ps[j], ps[k]) == 0) line.push_back(k);
      if (line.size() < min_size) continue;
      if (line[0] == i && line[1] == j) raw.push_back(line);
    }
  }
  return canonicalize(std::move(raw), {n, 0, "oracle", 1, detail::ms_since(start), 0});
}

// Canonical exact line through two points: A x + B y + C = 0 with integer
// A = y2-y1, B = x1-x2, C = -(A x1 + B y1), reduced by gcd and sign-normalized
// so the first nonzero of (A, B) is positive. Exact integers make the key
// collision-free.
inline std::array<std::int64_t, 3> canonical_line(const Point& a, const Point& b) {
  std::int64_t A = b.y - a.y;
  std::int64_t B = a.x - b.x;
  std::int64_t C = -(A * a.x + B * a.y);
  const std::int64_t g = std::gcd(std::gcd(A < 0 ? -A : A, B < 0 ? -B : B), C < 0 ? -C : C);
  if (g > 1) {
    A /= g;
    B /= g;
    C /= g;
  }
  if (A < 0 || (A == 0 && B < 0)) {
    A = -A;
    B = -B;
    C = -C;
  }
  return {A, B, C};
}

// Second, structurally different brute force used to cross-check the first:
// groups pairs by their canonical line key and reads the sets off the groups.
inline EnumerationResult brute_force_by_line_keys(const PointSet& ps, std::size_t min_size = 3,
                                                  std::size_t cap = kOracleCap) {
  if (ps.size() > cap) throw std::invalid_argument("brute_force: point set exceeds the oracle cap");
  const auto start = detail::Clock::now();
  const std::size_t n = ps.size();
  std::map<std::array<std::int64_t, 3>, std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& members = lines[canonical_line(ps[i], ps[j])];
      members.push_back(i);
      members.push_back(j);
    }
  std::vector<std::vector<std::size_t>> raw;
  for (auto& [key, members] : lines) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() >= min_size) raw.push_back(std::move(members));
  }
  return canonicalize(std::move(raw), {n, 0, "oracle", 1, detail::ms_since(start), 0});
}

}  // namespace collinear
