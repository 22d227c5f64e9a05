#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

struct MergedEntry {
  std::size_t index = 0;
  FoldedKey key;
};

// M_p: every index other than the pivot, sorted by cmp_folded around it.
// Points on one line through the pivot share a folded direction and are
// therefore contiguous.
struct MergedSequence {
  std::size_t pivot = 0;
  std::vector<MergedEntry> entries;
};

// Sorting directly with the folded comparator yields the same sequence as
// sorting by raw angle, splitting at the horizontal, and merging the two
// halves: both halves stay sorted under the folded angle, so the merge is a
// stable reshuffle that the comparator reproduces in one pass.
inline MergedSequence build_merged(std::size_t pivot, const PointSet& ps) {
  MergedSequence m{pivot, {}};
  if (ps.size() > 0) m.entries.reserve(ps.size() - 1);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (i != pivot) m.entries.push_back({i, folded_key(ps[pivot], ps[i])});
  std::sort(m.entries.begin(), m.entries.end(),
            [](const MergedEntry& a, const MergedEntry& b) { return folded_less(a.key, b.key); });
  return m;
}

// A maximal block of points collinear with the pivot through one common line;
// the reported set is members + pivot, so members.size() >= 2 for the default
// minimum set size of 3.
struct CollinearRun {
  std::size_t pivot = 0;
  std::vector<std::size_t> members;
};

// Groups a cmp_folded-ordered stream into maximal blocks sharing a folded
// direction. Blocks with at least min_members entries are handed to the sink
// as a vector of point indices in stream order. Within a block, equality to
// the first direction suffices: parallelism of upper half-plane vectors is
// transitive.
class RunScanner {
 public:
  explicit RunScanner(std::size_t min_members) : min_members_(min_members) {}

  template <class Sink>
  void feed(std::size_t index, const FoldedDirection& dir, Sink&& sink) {
    if (open_ && same_folded_direction(run_dir_, dir)) {
      members_.push_back(index);
      return;
    }
    flush(sink);
    open_ = true;
    run_dir_ = dir;
    members_.assign(1, index);
  }

  template <class Sink>
  void finish(Sink&& sink) {
    flush(sink);
    open_ = false;
  }

 private:
  template <class Sink>
  void flush(Sink&& sink) {
    if (open_ && members_.size() >= min_members_) sink(members_);
    members_.clear();
  }

  std::vector<std::size_t> members_;
  FoldedDirection run_dir_;
  bool open_ = false;
  std::size_t min_members_;
};

// One linear scan over M_p. Runs are maximal along their line because all
// points on a line through the pivot share one folded direction and are
// contiguous in the sequence.
inline std::vector<CollinearRun> detect_runs(const MergedSequence& m, std::size_t min_members = 2) {
  std::vector<CollinearRun> runs;
  RunScanner scan(min_members);
  const auto sink = [&](const std::vector<std::size_t>& members) {
    runs.push_back({m.pivot, members});
  };
  for (const MergedEntry& e : m.entries) scan.feed(e.index, e.key.dir, sink);
  scan.finish(sink);
  return runs;
}

// True iff the pivot precedes every member in sigma, i.e. the full set
// (members + pivot) is being seen at its sigma-first point and should be
// reported in this iteration only.
inline bool first_in_sigma(std::size_t pivot, std::span<const std::size_t> members,
                           const SigmaOrder& sigma) {
  const std::size_t pivot_rank = sigma.rank(pivot);
  for (const std::size_t q : members)
    if (sigma.rank(q) < pivot_rank) return false;
  return true;
}

inline bool filter_first_in_sigma(const CollinearRun& run, const SigmaOrder& sigma) {
  return first_in_sigma(run.pivot, run.members, sigma);
}

}  // namespace collinear
