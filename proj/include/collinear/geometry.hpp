#pragma once

#include <cstdint>
#include <stdexcept>

namespace collinear {

using Coord = std::int64_t;

// 128-bit intermediate for products of coordinate differences. With
// |x|, |y| <= 2^30 every difference fits in 2^31, so a 2x2 cross determinant
// or a squared distance is bounded by 2^63 and is exact in __int128.
using Wide = __int128;

inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr bool within_coord_limit(const Point& p) {
  return -kCoordLimit <= p.x && p.x <= kCoordLimit && -kCoordLimit <= p.y && p.y <= kCoordLimit;
}

// Sign of (b-a) x (c-a): +1 counterclockwise turn, -1 clockwise, 0 collinear.
constexpr int orient(const Point& a, const Point& b, const Point& c) {
  const Wide det = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
  return det > 0 ? +1 : det < 0 ? -1 : 0;
}

constexpr Wide squared_distance(const Point& a, const Point& b) {
  const Wide dx = b.x - a.x;
  const Wide dy = b.y - a.y;
  return dx * dx + dy * dy;
}

struct Vec {
  Coord dx = 0;
  Coord dy = 0;
};

constexpr Vec direction(const Point& from, const Point& to) { return {to.x - from.x, to.y - from.y}; }

constexpr Wide cross(const Vec& u, const Vec& v) { return Wide(u.dx) * v.dy - Wide(u.dy) * v.dx; }

constexpr Wide dot(const Vec& u, const Vec& v) { return Wide(u.dx) * v.dx + Wide(u.dy) * v.dy; }

// True iff (dx,dy) has polar angle in [0, pi): the open upper half-plane plus
// the positive x-axis.
constexpr bool in_upper_half(Coord dx, Coord dy) { return dy > 0 || (dy == 0 && dx > 0); }

// Direction from a pivot with antipodal directions identified: a vector whose
// angle falls in [pi, 2pi) is negated and flagged, so the stored vector always
// lies in the closed upper half-plane excluding the negative x-axis. Two
// points share a folded direction from p exactly when they are collinear
// with p.
struct FoldedDirection {
  Coord dx = 0;
  Coord dy = 0;
  bool from_lower_half = false;
  friend constexpr bool operator==(const FoldedDirection&, const FoldedDirection&) = default;
};

inline FoldedDirection fold_direction(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("fold_direction: p and q coincide");
  const Coord dx = q.x - p.x;
  const Coord dy = q.y - p.y;
  if (in_upper_half(dx, dy)) return {dx, dy, false};
  return {-dx, -dy, true};
}

constexpr Wide cross(const FoldedDirection& u, const FoldedDirection& v) {
  return Wide(u.dx) * v.dy - Wide(u.dy) * v.dx;
}

constexpr bool same_folded_direction(const FoldedDirection& u, const FoldedDirection& v) {
  return cross(u, v) == 0;
}

// Sort key around one pivot.
struct FoldedKey {
  FoldedDirection dir;
  Wide dist2 = 0;
};

inline FoldedKey folded_key(const Point& pivot, const Point& q) {
  return {fold_direction(pivot, q), squared_distance(pivot, q)};
}

// Strict total order over distinct points around a fixed pivot. Primary key is
// the folded angle, compared exactly by cross-product sign (both vectors lie
// in the upper half-plane, so the sign is a valid angular comparison). Ties
// put the upper half-plane before the folded lower half, then nearer points
// first. Returns -1/0/+1; 0 only for the same point.
constexpr int cmp_folded(const FoldedKey& a, const FoldedKey& b) {
  if (const Wide c = cross(a.dir, b.dir); c != 0) return c > 0 ? -1 : +1;
  if (a.dir.from_lower_half != b.dir.from_lower_half) return a.dir.from_lower_half ? +1 : -1;
  if (a.dist2 != b.dist2) return a.dist2 < b.dist2 ? -1 : +1;
  return 0;
}

constexpr bool folded_less(const FoldedKey& a, const FoldedKey& b) { return cmp_folded(a, b) < 0; }

}  // namespace collinear
