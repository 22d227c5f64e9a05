#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "collinear/convex_layers.hpp"
#include "collinear/cyclic_order.hpp"
#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

// A maximal collinear subset: no other input point lies on the members'
// common line. Members are ascending point indices.
struct CollinearSet {
  std::vector<std::size_t> members;
  friend bool operator==(const CollinearSet&, const CollinearSet&) = default;
};

struct EnumerationStats {
  std::size_t n = 0;
  std::size_t m = 0;  // peel depth; 0 when the strategy does not decompose
  std::string strategy;
  unsigned workers = 1;
  double wall_ms = 0.0;
  std::size_t max_pieces = 0;  // largest per-pivot subsequence count observed
};

struct EnumerationResult {
  std::vector<CollinearSet> sets;
  EnumerationStats stats;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline void require_min_size(std::size_t min_size) {
  if (min_size < 3) throw std::invalid_argument("minimum set size must be at least 3");
}

}  // namespace detail

// Sorts members within each set, sorts the sets lexicographically, and
// rejects duplicates: a duplicate means some maximal set was reported twice,
// which breaks the exactly-once contract every strategy relies on.
inline EnumerationResult canonicalize(std::vector<std::vector<std::size_t>> raw,
                                      EnumerationStats stats = {}) {
  for (auto& members : raw) std::sort(members.begin(), members.end());
  std::sort(raw.begin(), raw.end());
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i] == raw[i + 1])
      throw std::logic_error("canonicalize: maximal set reported more than once");
  EnumerationResult result;
  result.sets.reserve(raw.size());
  for (auto& members : raw) result.sets.push_back({std::move(members)});
  result.stats = std::move(stats);
  return result;
}

// The base strategy: per pivot, sort the other points by the folded
// comparator, scan for maximal collinear runs, and keep a run only when the
// pivot is the sigma-first member of the full set. O(n^2 log n) time,
// O(n) space.
inline EnumerationResult enumerate_baseline(const PointSet& ps, const SigmaOrder& sigma,
                                            std::size_t min_size = 3) {
  detail::require_min_size(min_size);
  const auto start = detail::Clock::now();
  std::vector<std::vector<std::size_t>> raw;
  for (const std::size_t p : sigma.order()) {
    const MergedSequence merged = build_merged(p, ps);
    for (CollinearRun& run : detect_runs(merged, min_size - 1)) {
      if (!filter_first_in_sigma(run, sigma)) continue;
      run.members.push_back(p);
      raw.push_back(std::move(run.members));
    }
  }
  return canonicalize(std::move(raw),
                      {ps.size(), 0, "baseline", 1, detail::ms_since(start), 0});
}

namespace detail {

// One pivot of the layered algorithm: split every layer into sorted
// subsequences, heap-merge them, and scan runs on the stream. The merged
// sequence is never materialized; scratch is the subsequence records plus
// the heap.
template <class SetSink>
inline void layered_pivot(std::size_t p, const PointSet& ps, const SigmaOrder& sigma,
                          const LayerDecomposition& decomposition,
                          std::vector<SortedSubsequence>& pieces, RunScanner& scanner,
                          SetSink&& emit_set) {
  pieces.clear();
  split_all_layers(p, decomposition, ps, pieces);
#ifndef NDEBUG
  validate_pieces(p, pieces, decomposition.layers, ps, true);
#endif
  const auto sink = [&](const std::vector<std::size_t>& members) {
    if (!first_in_sigma(p, members, sigma)) return;
    std::vector<std::size_t> set = members;
    set.push_back(p);
    emit_set(std::move(set));
  };
  HeapMerge merge(p, pieces, decomposition.layers, ps);
  MergedEntry e;
  std::size_t emitted = 0;
  while (merge.next(e)) {
    ++emitted;
    scanner.feed(e.index, e.key.dir, sink);
  }
  scanner.finish(sink);
  assert(emitted + 1 == ps.size());
  (void)emitted;
}

}  // namespace detail

// Layered strategy over a caller-supplied convex decomposition (peeled or
// otherwise). Output is identical to the baseline after canonicalization.
inline EnumerationResult enumerate_with_decomposition(const PointSet& ps, const SigmaOrder& sigma,
                                                      const LayerDecomposition& decomposition,
                                                      std::size_t min_size = 3,
                                                      std::string strategy = "layered") {
  detail::require_min_size(min_size);
  const auto start = detail::Clock::now();
  std::vector<std::vector<std::size_t>> raw;
  std::vector<SortedSubsequence> pieces;
  RunScanner scanner(min_size - 1);
  std::size_t max_pieces = 0;
  for (const std::size_t p : sigma.order()) {
    detail::layered_pivot(p, ps, sigma, decomposition, pieces, scanner,
                          [&](std::vector<std::size_t> set) { raw.push_back(std::move(set)); });
    max_pieces = std::max(max_pieces, pieces.size());
  }
  return canonicalize(std::move(raw), {ps.size(), decomposition.depth(), std::move(strategy), 1,
                                       detail::ms_since(start), max_pieces});
}

// Peels once, then runs the heap-merge pipeline per pivot. O(n^2 log m) after
// the O(mn log n) peel.
inline EnumerationResult enumerate_layered(const PointSet& ps, const SigmaOrder& sigma,
                                           std::size_t min_size = 3) {
  return enumerate_with_decomposition(ps, sigma, peel(ps), min_size);
}

// Data-parallel variant: pivots are handed to a worker pool; the layer
// decomposition is computed once and read-shared, each worker keeps private
// scratch (subsequence records plus heap, O(m)) and a private output list,
// and the lists are concatenated and canonicalized at a single join point.
// The result is identical to the sequential strategies for any worker count
// and any scheduling.
inline EnumerationResult enumerate_parallel(const PointSet& ps, const SigmaOrder& sigma,
                                            std::size_t min_size = 3, unsigned workers = 1) {
  detail::require_min_size(min_size);
  if (workers == 0) throw std::invalid_argument("enumerate_parallel: workers must be >= 1");
  const auto start = detail::Clock::now();
  const LayerDecomposition decomposition = peel(ps);
  const std::size_t n = ps.size();
  const unsigned pool =
      static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  std::vector<std::vector<std::vector<std::size_t>>> worker_sets(pool);
  std::vector<std::size_t> worker_max_pieces(pool, 0);
  std::vector<std::exception_ptr> worker_errors(pool);
  std::atomic<std::size_t> next_pivot{0};

  const auto work = [&](unsigned w) {
    try {
      std::vector<SortedSubsequence> pieces;
      RunScanner scanner(min_size - 1);
      for (;;) {
        const std::size_t p = next_pivot.fetch_add(1, std::memory_order_relaxed);
        if (p >= n) break;
        detail::layered_pivot(p, ps, sigma, decomposition, pieces, scanner,
                              [&](std::vector<std::size_t> set) {
                                worker_sets[w].push_back(std::move(set));
                              });
        worker_max_pieces[w] = std::max(worker_max_pieces[w], pieces.size());
      }
    } catch (...) {
      worker_errors[w] = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (unsigned w = 0; w < pool; ++w) threads.emplace_back(work, w);
  for (auto& t : threads) t.join();
  for (const auto& err : worker_errors)
    if (err) std::rethrow_exception(err);

  std::vector<std::vector<std::size_t>> raw;
  std::size_t max_pieces = 0;
  for (unsigned w = 0; w < pool; ++w) {
    max_pieces = std::max(max_pieces, worker_max_pieces[w]);
    for (auto& set : worker_sets[w]) raw.push_back(std::move(set));
  }
  return canonicalize(std::move(raw), {n, decomposition.depth(), "parallel", workers,
                                       detail::ms_since(start), max_pieces});
}

}  // namespace collinear
