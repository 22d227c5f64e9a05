#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"
#include "collinear/rng.hpp"

namespace collinear {

// Generator specs, textual forms:
//   grid:WxH                                 all lattice points of the W x H grid
//   random:N,box=B                           N distinct uniform points in [-B, B]^2
//   planted:lines=L,per_line=K,noise=R[,box=B]
//                                            L random lines of K collinear points
//                                            plus R noise points, all distinct
struct GridSpec {
  std::int64_t width = 0;
  std::int64_t height = 0;
};
struct RandomSpec {
  std::size_t count = 0;
  std::int64_t box = 0;
};
struct PlantedSpec {
  std::size_t lines = 0;
  std::size_t per_line = 0;
  std::size_t noise = 0;
  std::int64_t box = 1000;
};
using GenSpec = std::variant<GridSpec, RandomSpec, PlantedSpec>;

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("generator spec: bad " + std::string(what) + " '" +
                                std::string(text) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto at = text.find(sep);
    parts.push_back(text.substr(0, at));
    if (at == std::string_view::npos) break;
    text.remove_prefix(at + 1);
  }
  return parts;
}

}  // namespace detail

inline GenSpec parse_gen_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("generator spec: expected '<kind>:<params>'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);

  if (kind == "grid") {
    const auto x = params.find('x');
    if (x == std::string_view::npos)
      throw std::invalid_argument("generator spec: grid wants WxH");
    GridSpec g;
    g.width = detail::parse_int(params.substr(0, x), "grid width");
    g.height = detail::parse_int(params.substr(x + 1), "grid height");
    if (g.width < 1 || g.height < 1)
      throw std::invalid_argument("generator spec: grid dimensions must be positive");
    return g;
  }

  const auto parts = detail::split(params, ',');
  if (kind == "random") {
    RandomSpec r;
    bool have_count = false, have_box = false;
    for (const auto part : parts) {
      if (part.starts_with("box=")) {
        r.box = detail::parse_int(part.substr(4), "box");
        have_box = true;
      } else {
        r.count = static_cast<std::size_t>(detail::parse_int(part, "count"));
        have_count = true;
      }
    }
    if (!have_count || !have_box)
      throw std::invalid_argument("generator spec: random wants N,box=B");
    if (r.count == 0 || r.box < 0 || r.box > kCoordLimit)
      throw std::invalid_argument("generator spec: random parameters out of range");
    return r;
  }

  if (kind == "planted") {
    PlantedSpec p;
    bool have_lines = false, have_per_line = false, have_noise = false;
    for (const auto part : parts) {
      if (part.starts_with("lines="))
        p.lines = static_cast<std::size_t>(detail::parse_int(part.substr(6), "lines")),
        have_lines = true;
      else if (part.starts_with("per_line="))
        p.per_line = static_cast<std::size_t>(detail::parse_int(part.substr(9), "per_line")),
        have_per_line = true;
      else if (part.starts_with("noise="))
        p.noise = static_cast<std::size_t>(detail::parse_int(part.substr(6), "noise")),
        have_noise = true;
      else if (part.starts_with("box="))
        p.box = detail::parse_int(part.substr(4), "box");
      else
        throw std::invalid_argument("generator spec: unknown planted parameter '" +
                                    std::string(part) + "'");
    }
    if (!have_lines || !have_per_line || !have_noise)
      throw std::invalid_argument("generator spec: planted wants lines=L,per_line=K,noise=R");
    if (p.box < 1 || p.box > kCoordLimit || p.per_line < 2)
      throw std::invalid_argument("generator spec: planted parameters out of range");
    if (p.lines == 0 && p.noise == 0)
      throw std::invalid_argument("generator spec: planted would be empty");
    return p;
  }

  throw std::invalid_argument("generator spec: unknown kind '" + std::string(kind) + "'");
}

namespace detail {

inline constexpr std::size_t kGeneratorPointCap = 20'000'000;

// Capacity of the integer square [-box, box]^2, saturating.
inline std::size_t box_capacity(std::int64_t box) {
  const auto side = static_cast<std::uint64_t>(2 * box + 1);
  if (side > (std::uint64_t{1} << 32)) return kGeneratorPointCap + 1;
  const std::uint64_t cells = side * side;
  return cells > kGeneratorPointCap ? kGeneratorPointCap + 1 : static_cast<std::size_t>(cells);
}

struct DedupedPoints {
  std::vector<Point> points;
  std::unordered_set<std::uint64_t> keys;

  bool add(Point p) {
    if (!keys.insert(pack_point(p)).second) return false;
    points.push_back(p);
    return true;
  }
};

inline void add_noise(DedupedPoints& acc, std::size_t count, std::int64_t box, SplitMix64& rng) {
  std::size_t attempts = 0;
  const std::size_t attempt_cap = 1000 * count + 10000;
  std::size_t added = 0;
  while (added < count) {
    if (++attempts > attempt_cap)
      throw std::invalid_argument("generator: cannot place distinct points, box too small");
    const Point p{rng.in_range(-box, box), rng.in_range(-box, box)};
    if (acc.add(p)) ++added;
  }
}

}  // namespace detail

inline PointSet generate(const GenSpec& spec, std::uint64_t seed) {
  SplitMix64 rng(seed);

  if (const auto* g = std::get_if<GridSpec>(&spec)) {
    if (g->width > kCoordLimit || g->height > kCoordLimit ||
        static_cast<std::uint64_t>(g->width) * static_cast<std::uint64_t>(g->height) >
            detail::kGeneratorPointCap)
      throw std::invalid_argument("generator: grid too large");
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(g->width * g->height));
    for (std::int64_t y = 0; y < g->height; ++y)
      for (std::int64_t x = 0; x < g->width; ++x) points.push_back({x, y});
    return PointSet(std::move(points));
  }

  if (const auto* r = std::get_if<RandomSpec>(&spec)) {
    if (r->count >= detail::box_capacity(r->box))
      throw std::invalid_argument("generator: box cannot hold that many distinct points");
    detail::DedupedPoints acc;
    detail::add_noise(acc, r->count, r->box, rng);
    return PointSet(std::move(acc.points));
  }

  const auto& p = std::get<PlantedSpec>(spec);
  const std::size_t total = p.lines * p.per_line + p.noise;
  if (total == 0) throw std::invalid_argument("generator: planted would be empty");
  if (total >= detail::box_capacity(p.box))
    throw std::invalid_argument("generator: box cannot hold that many distinct points");
  detail::DedupedPoints acc;
  const std::int64_t step_max =
      std::max<std::int64_t>(1, p.box / (2 * static_cast<std::int64_t>(p.per_line)));
  for (std::size_t line = 0; line < p.lines; ++line) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < 1000 && !placed; ++attempt) {
      Coord dx = 0, dy = 0;
      while (dx == 0 && dy == 0) {
        dx = rng.in_range(-step_max, step_max);
        dy = rng.in_range(-step_max, step_max);
      }
      const auto anchor_range = [&](Coord d) -> std::pair<Coord, Coord> {
        const Coord reach = d * static_cast<Coord>(p.per_line - 1);
        return d >= 0 ? std::pair{-p.box, p.box - reach} : std::pair{-p.box - reach, p.box};
      };
      const auto [x_lo, x_hi] = anchor_range(dx);
      const auto [y_lo, y_hi] = anchor_range(dy);
      const Point anchor{rng.in_range(x_lo, x_hi), rng.in_range(y_lo, y_hi)};
      std::vector<Point> line_points;
      line_points.reserve(p.per_line);
      bool clash = false;
      for (std::size_t t = 0; t < p.per_line && !clash; ++t) {
        const Point q{anchor.x + dx * static_cast<Coord>(t), anchor.y + dy * static_cast<Coord>(t)};
        if (acc.keys.count(pack_point(q))) clash = true;
        else line_points.push_back(q);
      }
      if (clash) continue;
      for (const Point& q : line_points) acc.add(q);
      placed = true;
    }
    if (!placed)
      throw std::invalid_argument("generator: cannot place distinct planted lines, box too small");
  }
  detail::add_noise(acc, p.noise, p.box, rng);
  return PointSet(std::move(acc.points));
}

inline PointSet generate(std::string_view spec_text, std::uint64_t seed) {
  return generate(parse_gen_spec(spec_text), seed);
}

}  // namespace collinear
