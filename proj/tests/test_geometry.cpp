#include <catch2/catch.hpp>

#include <algorithm>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"
#include "collinear/rng.hpp"
#include "corpus.hpp"

using namespace collinear;

TEST_CASE("orient signs", "[geometry]") {
  REQUIRE(orient({0, 0}, {1, 0}, {2, 0}) == 0);
  REQUIRE(orient({0, 0}, {1, 0}, {1, 1}) == +1);
  REQUIRE(orient({0, 0}, {1, 1}, {1, 0}) == -1);
  REQUIRE(orient({3, 3}, {3, 3}, {5, 1}) == 0);
}

TEST_CASE("orient is antisymmetric in its last two arguments", "[geometry]") {
  SplitMix64 rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    const Point a{rng.in_range(-50, 50), rng.in_range(-50, 50)};
    const Point b{rng.in_range(-50, 50), rng.in_range(-50, 50)};
    const Point c{rng.in_range(-50, 50), rng.in_range(-50, 50)};
    REQUIRE(orient(a, b, c) == -orient(a, c, b));
  }
}

TEST_CASE("fold_direction lands in the closed upper half-plane", "[geometry]") {
  REQUIRE(fold_direction({0, 0}, {2, 3}) == FoldedDirection{2, 3, false});
  REQUIRE(fold_direction({0, 0}, {0, -1}) == FoldedDirection{0, 1, true});
  // angle exactly pi belongs to the lower sequence
  REQUIRE(fold_direction({0, 0}, {-1, 0}) == FoldedDirection{1, 0, true});
  REQUIRE_THROWS_AS(fold_direction({5, 5}, {5, 5}), std::invalid_argument);

  SplitMix64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const Point p{rng.in_range(-40, 40), rng.in_range(-40, 40)};
    const Point q{rng.in_range(-40, 40), rng.in_range(-40, 40)};
    if (p == q) continue;
    const FoldedDirection d = fold_direction(p, q);
    REQUIRE(in_upper_half(d.dx, d.dy));
    REQUIRE(d.from_lower_half == !in_upper_half(q.x - p.x, q.y - p.y));
  }
}

TEST_CASE("fold equality matches exact collinearity through the pivot", "[geometry]") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto pts = corpus::raw_points(rng, 3, 12);
    const Point p = pts[0], q = pts[1], r = pts[2];
    const bool zero_cross = same_folded_direction(fold_direction(p, q), fold_direction(p, r));
    REQUIRE(zero_cross == (orient(p, q, r) == 0));
  }
}

TEST_CASE("cmp_folded ordering and tie-breaks", "[geometry]") {
  const FoldedKey east{{1, 0, false}, 1};
  const FoldedKey north{{0, 1, false}, 1};
  REQUIRE(cmp_folded(east, north) < 0);

  const FoldedKey near_diag{{1, 1, false}, 2};
  const FoldedKey far_diag{{2, 2, false}, 8};
  REQUIRE(cmp_folded(near_diag, far_diag) < 0);

  const FoldedKey upper{{1, 0, false}, 4};
  const FoldedKey lower{{1, 0, true}, 1};
  REQUIRE(cmp_folded(upper, lower) < 0);
}

TEST_CASE("cmp_folded is a strict total order around a pivot", "[geometry]") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    const auto pts = corpus::raw_points(rng, 4, 10);
    const Point p = pts[0];
    const FoldedKey a = folded_key(p, pts[1]);
    const FoldedKey b = folded_key(p, pts[2]);
    const FoldedKey c = folded_key(p, pts[3]);
    REQUIRE(cmp_folded(a, a) == 0);
    REQUIRE(cmp_folded(a, b) == -cmp_folded(b, a));
    if (cmp_folded(a, b) < 0 && cmp_folded(b, c) < 0) REQUIRE(cmp_folded(a, c) < 0);
    // distinct points never compare equal
    REQUIRE(cmp_folded(a, b) != 0);
  }
}

TEST_CASE("sorting by cmp_folded groups exactly the lines through the pivot", "[geometry]") {
  SplitMix64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const auto pts = corpus::raw_points(rng, 14, 6);
    const Point p = pts[0];
    std::vector<FoldedKey> keys;
    for (std::size_t i = 1; i < pts.size(); ++i) keys.push_back(folded_key(p, pts[i]));
    std::vector<std::size_t> by_angle(keys.size());
    std::iota(by_angle.begin(), by_angle.end(), std::size_t{0});
    std::sort(by_angle.begin(), by_angle.end(),
              [&](std::size_t a, std::size_t b) { return folded_less(keys[a], keys[b]); });

    std::vector<std::size_t> group(keys.size(), 0);
    std::size_t current = 0;
    for (std::size_t s = 1; s < by_angle.size(); ++s) {
      if (!same_folded_direction(keys[by_angle[s - 1]].dir, keys[by_angle[s]].dir)) ++current;
      group[by_angle[s]] = current;
    }
    for (std::size_t a = 0; a < keys.size(); ++a)
      for (std::size_t b = a + 1; b < keys.size(); ++b) {
        const bool collinear_with_p = orient(p, pts[a + 1], pts[b + 1]) == 0;
        REQUIRE((group[a] == group[b]) == collinear_with_p);
      }
  }
}

TEST_CASE("boundary-magnitude coordinates stay exact", "[geometry]") {
  constexpr Coord L = kCoordLimit;
  REQUIRE(orient({-L, -L}, {0, 0}, {L, L}) == 0);
  REQUIRE(orient({-L, -L}, {L, -L}, {L, L}) == +1);
  REQUIRE(orient({-L, -L}, {L, L}, {L, -L}) == -1);
  // single-step perturbations off the main diagonal are resolved exactly
  REQUIRE(orient({-L, -L}, {L, L}, {L, L - 1}) == -1);
  REQUIRE(orient({-L, -L}, {L, L}, {L - 1, L}) == +1);
  // extreme magnitudes: the largest determinant in the box is 2^62 (twice the
  // max triangle area) and the largest squared distance is 2^63, one past
  // what int64 could hold
  REQUIRE(cross(direction({-L, -L}, {L, -L}), direction({-L, -L}, {-L, L})) == Wide(1) << 62);
  REQUIRE(squared_distance({-L, -L}, {L, L}) == Wide(1) << 63);

  SplitMix64 rng(23);
  const Coord extremes[] = {-L, -L + 1, -1, 0, 1, L - 1, L};
  for (int iter = 0; iter < 4000; ++iter) {
    const auto pick = [&] {
      return Point{extremes[rng.next() % 7], extremes[rng.next() % 7]};
    };
    const Point a = pick(), b = pick(), c = pick();
    REQUIRE(orient(a, b, c) == -orient(a, c, b));
    if (a != b && a != c && b != c) {
      if (orient(a, b, c) == 0) {
        REQUIRE(same_folded_direction(fold_direction(a, b), fold_direction(a, c)));
      }
    }
  }
}

TEST_CASE("PointSet validates its input", "[geometry]") {
  REQUIRE_THROWS_AS(PointSet(std::vector<Point>{}), std::invalid_argument);
  REQUIRE_THROWS_AS(PointSet({{0, 0}, {kCoordLimit + 1, 0}}), std::out_of_range);
  try {
    PointSet({{0, 0}, {1, 1}, {0, 0}});
    FAIL("duplicate accepted");
  } catch (const std::invalid_argument& e) {
    REQUIRE(std::string(e.what()).find("0 and 2") != std::string::npos);
  }
  const PointSet ok({{0, 0}, {kCoordLimit, -kCoordLimit}});
  REQUIRE(ok.size() == 2);
}

TEST_CASE("SigmaOrder permutations", "[geometry]") {
  const SigmaOrder id = SigmaOrder::identity(4);
  REQUIRE(id.rank(2) == 2);
  REQUIRE(id.order() == std::vector<std::size_t>{0, 1, 2, 3});

  const SigmaOrder rev = SigmaOrder::from_order({3, 2, 1, 0});
  REQUIRE(rev.rank(3) == 0);
  REQUIRE(rev.rank(0) == 3);

  REQUIRE_THROWS_AS(SigmaOrder::from_order({0, 0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(SigmaOrder::from_order({0, 5, 1}), std::invalid_argument);

  const SigmaOrder s1 = SigmaOrder::shuffled(20, 99);
  const SigmaOrder s2 = SigmaOrder::shuffled(20, 99);
  REQUIRE(s1.ranks() == s2.ranks());
  const auto order = s1.order();
  for (std::size_t pos = 0; pos < order.size(); ++pos) REQUIRE(s1.rank(order[pos]) == pos);
}
