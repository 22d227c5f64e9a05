#include <catch2/catch.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "collinear/cyclic_order.hpp"
#include "collinear/oracle.hpp"
#include "corpus.hpp"

using namespace collinear;

namespace {

std::vector<std::size_t> merged_indices(const MergedSequence& m) {
  std::vector<std::size_t> out;
  for (const auto& e : m.entries) out.push_back(e.index);
  return out;
}

}  // namespace

TEST_CASE("build_merged follows the folded order", "[cyclic]") {
  // east, north, folded south (behind north by the upper-before-lower rule),
  // then north-west
  const PointSet ps({{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {0, -1}});
  REQUIRE(merged_indices(build_merged(0, ps)) == std::vector<std::size_t>{1, 2, 4, 3});

  const PointSet diag({{0, 0}, {2, 2}, {1, 1}});
  REQUIRE(merged_indices(build_merged(0, diag)) == std::vector<std::size_t>{2, 1});

  const PointSet pair({{5, 5}, {6, 6}});
  REQUIRE(merged_indices(build_merged(0, pair)) == std::vector<std::size_t>{1});
}

TEST_CASE("build_merged covers every other index in strictly increasing order", "[cyclic]") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const PointSet ps = corpus::instance(seed, 40);
    for (std::size_t p = 0; p < ps.size(); ++p) {
      const MergedSequence m = build_merged(p, ps);
      REQUIRE(m.entries.size() == ps.size() - 1);
      std::set<std::size_t> seen;
      for (const auto& e : m.entries) {
        REQUIRE(e.index != p);
        REQUIRE(seen.insert(e.index).second);
      }
      for (std::size_t s = 1; s < m.entries.size(); ++s)
        REQUIRE(folded_less(m.entries[s - 1].key, m.entries[s].key));
    }
  }
}

TEST_CASE("detect_runs finds maximal collinear blocks", "[cyclic]") {
  {
    const PointSet ps({{0, 0}, {1, 0}, {2, 0}, {-1, 0}, {0, 1}});
    const auto runs = detect_runs(build_merged(0, ps));
    REQUIRE(runs.size() == 1);
    std::vector<std::size_t> members = runs[0].members;
    std::sort(members.begin(), members.end());
    REQUIRE(members == std::vector<std::size_t>{1, 2, 3});
  }
  {
    const PointSet ps({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    REQUIRE(detect_runs(build_merged(0, ps)).empty());
  }
  {
    const PointSet ps({{0, 0}, {1, 2}, {2, 4}, {3, 6}, {-2, -4}});
    const auto runs = detect_runs(build_merged(0, ps));
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].members.size() == 4);
  }
}

TEST_CASE("detect_runs partitions the merged sequence", "[cyclic]") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const PointSet ps = corpus::instance(seed, 40);
    for (std::size_t p = 0; p < ps.size(); ++p) {
      const MergedSequence m = build_merged(p, ps);
      const auto runs = detect_runs(m, 1);  // every block, even singletons
      std::size_t total = 0;
      for (const auto& run : runs) {
        total += run.members.size();
        for (std::size_t a = 0; a < run.members.size(); ++a)
          for (std::size_t b = a + 1; b < run.members.size(); ++b)
            REQUIRE(orient(ps[p], ps[run.members[a]], ps[run.members[b]]) == 0);
      }
      REQUIRE(total == m.entries.size());
    }
  }
}

TEST_CASE("filter_first_in_sigma keeps only the sigma-first pivot", "[cyclic]") {
  const SigmaOrder input_order = SigmaOrder::identity(8);
  REQUIRE(filter_first_in_sigma({0, {2, 5}}, input_order));
  REQUIRE_FALSE(filter_first_in_sigma({3, {1, 7}}, input_order));
  const SigmaOrder reversed = SigmaOrder::from_order({7, 6, 5, 4, 3, 2, 1, 0});
  REQUIRE_FALSE(filter_first_in_sigma({3, {1, 7}}, reversed));
}

TEST_CASE("each maximal set surfaces as one run at each member, reported once", "[cyclic]") {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    const PointSet ps = corpus::instance(seed, 36);
    const SigmaOrder sigma = SigmaOrder::shuffled(ps.size(), seed);
    const auto truth = brute_force(ps);
    for (const CollinearSet& set : truth.sets) {
      const std::size_t first = *std::min_element(
          set.members.begin(), set.members.end(),
          [&](std::size_t a, std::size_t b) { return sigma.rank(a) < sigma.rank(b); });
      for (const std::size_t member : set.members) {
        const auto runs = detect_runs(build_merged(member, ps));
        std::size_t matches = 0;
        for (const auto& run : runs) {
          std::vector<std::size_t> full = run.members;
          full.push_back(member);
          std::sort(full.begin(), full.end());
          if (full == set.members) {
            ++matches;
            REQUIRE(filter_first_in_sigma(run, sigma) == (member == first));
          }
        }
        REQUIRE(matches == 1);
      }
    }
  }
}
