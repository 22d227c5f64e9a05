#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/rng.hpp"

namespace collinear {

// Packs a bounded point into one 64-bit key; coordinates shifted to [0, 2^31]
// fit 32 bits each.
constexpr std::uint64_t pack_point(const Point& p) {
  return (static_cast<std::uint64_t>(p.x + kCoordLimit) << 32) |
         static_cast<std::uint64_t>(p.y + kCoordLimit);
}

// Immutable indexed point set. The index is the point's identity everywhere
// in this library. Construction rejects empty input, coordinates beyond the
// 2^30 bound, and duplicate points.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("PointSet: at least one point required");
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(points_.size() * 2);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!within_coord_limit(points_[i]))
        throw std::out_of_range("PointSet: coordinate magnitude exceeds 2^30 at index " +
                                std::to_string(i));
      const auto [it, inserted] = seen.emplace(pack_point(points_[i]), i);
      if (!inserted)
        throw std::invalid_argument("PointSet: duplicate point at indices " +
                                    std::to_string(it->second) + " and " + std::to_string(i));
    }
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

// Processing order over point indices; rank(i) is point i's position.
class SigmaOrder {
 public:
  static SigmaOrder identity(std::size_t n) {
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    return SigmaOrder(std::move(rank));
  }

  // order[k] = index of the point processed k-th.
  static SigmaOrder from_order(const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::vector<std::size_t> rank(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (order[pos] >= n || rank[order[pos]] != n)
        throw std::invalid_argument("SigmaOrder: order is not a permutation");
      rank[order[pos]] = pos;
    }
    return SigmaOrder(std::move(rank));
  }

  static SigmaOrder shuffled(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(seed);
    fisher_yates(order, rng);
    return from_order(order);
  }

  std::size_t size() const { return rank_.size(); }
  std::size_t rank(std::size_t i) const { return rank_[i]; }
  const std::vector<std::size_t>& ranks() const { return rank_; }

  std::vector<std::size_t> order() const {
    std::vector<std::size_t> o(rank_.size());
    for (std::size_t i = 0; i < rank_.size(); ++i) o[rank_[i]] = i;
    return o;
  }

 private:
  explicit SigmaOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {}
  std::vector<std::size_t> rank_;
};

}  // namespace collinear
