#include <catch2/catch.hpp>

#include <vector>

#include "collinear/generator.hpp"
#include "collinear/oracle.hpp"
#include "corpus.hpp"

using namespace collinear;

TEST_CASE("brute force on tiny fixtures", "[oracle]") {
  const PointSet line({{0, 0}, {1, 1}, {2, 2}});
  const auto r = brute_force(line);
  REQUIRE(r.sets.size() == 1);
  REQUIRE(r.sets[0].members == std::vector<std::size_t>{0, 1, 2});

  const PointSet square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  REQUIRE(brute_force(square).sets.empty());
}

TEST_CASE("the two brute-force routes agree", "[oracle]") {
  const PointSet grid = generate(GridSpec{4, 4}, 0);
  const auto by_pairs = brute_force(grid);
  const auto by_lines = brute_force_by_line_keys(grid);
  REQUIRE(by_pairs.sets == by_lines.sets);
  // 4 rows + 4 columns + 2 full diagonals + 4 length-3 off-diagonals
  REQUIRE(by_pairs.sets.size() == 14);

  for (std::uint64_t seed = 3000; seed < 3200; ++seed) {
    const PointSet ps = corpus::instance(seed);
    REQUIRE(brute_force(ps).sets == brute_force_by_line_keys(ps).sets);
  }
}

TEST_CASE("every member pair regenerates its set", "[oracle]") {
  for (std::uint64_t seed = 3300; seed < 3340; ++seed) {
    const PointSet ps = corpus::instance(seed, 40);
    for (const CollinearSet& set : brute_force(ps).sets) {
      for (std::size_t a = 0; a < set.members.size(); ++a)
        for (std::size_t b = a + 1; b < set.members.size(); ++b) {
          std::vector<std::size_t> regenerated;
          for (std::size_t k = 0; k < ps.size(); ++k)
            if (orient(ps[set.members[a]], ps[set.members[b]], ps[k]) == 0)
              regenerated.push_back(k);
          REQUIRE(regenerated == set.members);
        }
    }
  }
}

TEST_CASE("canonical line keys are reduced and sign-normalized", "[oracle]") {
  REQUIRE(canonical_line({0, 0}, {2, 2}) == std::array<std::int64_t, 3>{1, -1, 0});
  REQUIRE(canonical_line({2, 2}, {0, 0}) == std::array<std::int64_t, 3>{1, -1, 0});
  REQUIRE(canonical_line({0, 1}, {4, 1}) == std::array<std::int64_t, 3>{0, 1, -1});
  REQUIRE(canonical_line({4, 1}, {0, 1}) == std::array<std::int64_t, 3>{0, 1, -1});
  REQUIRE(canonical_line({3, 0}, {3, 5}) == std::array<std::int64_t, 3>{1, 0, -3});
}

TEST_CASE("the oracle refuses oversized inputs", "[oracle]") {
  std::vector<Point> many;
  for (Coord x = 0; x < 30; ++x)
    for (Coord y = 0; y < 17; ++y) many.push_back({x, y});
  many.resize(501);
  REQUIRE_THROWS_AS(brute_force(PointSet(many)), std::invalid_argument);
  REQUIRE_THROWS_AS(brute_force_by_line_keys(PointSet(many)), std::invalid_argument);
}
