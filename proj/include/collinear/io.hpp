#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline std::string_view skip_space(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

inline Coord parse_coord(std::string_view& s, std::size_t line_no) {
  s = skip_space(s);
  Coord value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw std::out_of_range("line " + std::to_string(line_no) + ": coordinate out of range");
  if (ec != std::errc{} || ptr == s.data())
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": expected two integer coordinates");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace detail

// Point-list format: one "x y" pair per line (ASCII decimal integers,
// whitespace separated), '#' begins a comment line, blank lines are ignored.
// Indices are assigned in file order. Errors carry 1-based line numbers.
inline PointSet parse_points(std::istream& in) {
  std::vector<Point> points;
  std::unordered_map<std::uint64_t, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = detail::skip_space(line);
    if (rest.empty() || rest.front() == '#') continue;
    const Coord x = detail::parse_coord(rest, line_no);
    const Coord y = detail::parse_coord(rest, line_no);
    rest = detail::skip_space(rest);
    if (!rest.empty())
      throw std::runtime_error("line " + std::to_string(line_no) + ": trailing characters '" +
                               std::string(rest) + "'");
    const Point p{x, y};
    if (!within_coord_limit(p))
      throw std::out_of_range("line " + std::to_string(line_no) +
                              ": coordinate out of range (|x|, |y| <= 2^30)");
    const auto [it, inserted] = first_line.emplace(pack_point(p), line_no);
    if (!inserted)
      throw std::runtime_error("line " + std::to_string(line_no) + ": duplicate of point at line " +
                               std::to_string(it->second));
    points.push_back(p);
  }
  if (points.empty()) throw std::runtime_error("input contains no points");
  return PointSet(std::move(points));
}

inline PointSet parse_points_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_points(in);
}

}  // namespace collinear
