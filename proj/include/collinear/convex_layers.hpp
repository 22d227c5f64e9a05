#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "collinear/cyclic_order.hpp"
#include "collinear/geometry.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

// One peel layer: boundary vertices (point indices) in counterclockwise
// order, keeping points that lie on hull edges. A fully collinear layer
// degenerates to a chain listed once in lexicographic order.
struct ConvexLayer {
  std::vector<std::size_t> vertices;
  std::size_t size() const { return vertices.size(); }
};

namespace detail {

inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline bool all_collinear(std::span<const std::size_t> ids, const PointSet& ps) {
  for (std::size_t i = 2; i < ids.size(); ++i)
    if (orient(ps[ids[0]], ps[ids[1]], ps[ids[i]]) != 0) return false;
  return true;
}

}  // namespace detail

// Convex decomposition, outermost layer first. Layers must partition the
// point set; from_layers validates that and precomputes the per-point and
// per-layer lookups the enumeration uses on its hot path.
struct LayerDecomposition {
  std::vector<ConvexLayer> layers;
  std::vector<std::uint32_t> layer_of;     // point index -> layer id
  std::vector<std::uint32_t> position_of;  // point index -> position in its layer
  std::vector<char> chain_layer;           // layer id -> all vertices on one line

  std::size_t depth() const { return layers.size(); }

  static LayerDecomposition from_layers(std::vector<ConvexLayer> layers, const PointSet& ps) {
    LayerDecomposition d;
    d.layers = std::move(layers);
    d.layer_of.assign(ps.size(), 0);
    d.position_of.assign(ps.size(), 0);
    d.chain_layer.reserve(d.layers.size());
    std::vector<char> seen(ps.size(), 0);
    for (std::uint32_t li = 0; li < d.layers.size(); ++li) {
      const auto& v = d.layers[li].vertices;
      if (v.empty())
        throw std::invalid_argument("LayerDecomposition: empty layer");
      for (std::uint32_t pos = 0; pos < v.size(); ++pos) {
        const std::size_t id = v[pos];
        if (id >= ps.size() || seen[id])
          throw std::invalid_argument("LayerDecomposition: layers are not a partition");
        seen[id] = 1;
        d.layer_of[id] = li;
        d.position_of[id] = pos;
      }
      d.chain_layer.push_back(v.size() >= 2 && detail::all_collinear(v, ps));
    }
    for (const char covered : seen)
      if (!covered) throw std::invalid_argument("LayerDecomposition: point not in any layer");
    return d;
  }
};

// Monotone-chain convex hull that discards only strictly interior points, so
// collinear points on hull edges stay on the boundary. The cycle starts at
// the lexicographically least vertex and runs counterclockwise. Fully
// collinear input is returned as its sorted chain, each point once.
inline ConvexLayer convex_hull_with_collinear(std::vector<std::size_t> ids, const PointSet& ps) {
  if (ids.empty()) throw std::invalid_argument("convex_hull_with_collinear: empty subset");
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return detail::lex_less(ps[a], ps[b]); });
  if (ids.size() <= 2 || detail::all_collinear(ids, ps)) return {std::move(ids)};

  std::vector<std::size_t> hull;
  hull.reserve(ids.size() + 1);
  const auto extend = [&](auto first, auto last, std::size_t base) {
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= base + 2 &&
             orient(ps[hull[hull.size() - 2]], ps[hull.back()], ps[*it]) < 0)
        hull.pop_back();
      hull.push_back(*it);
    }
  };
  extend(ids.begin(), ids.end(), 0);  // lower chain, left to right
  hull.pop_back();
  const std::size_t base = hull.size();
  extend(ids.rbegin(), ids.rend(), base);  // upper chain, right to left
  hull.pop_back();
  return {std::move(hull)};
}

// Repeatedly extracts the collinear-keeping hull of the remaining points.
// O(mn log n) for peel depth m; fine for the enumeration's preprocessing,
// which runs this once and shares the result across pivots.
inline LayerDecomposition peel(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("peel: point set too large");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return detail::lex_less(ps[a], ps[b]); });

  std::vector<ConvexLayer> layers;
  std::vector<char> removed(n, 0);
  std::vector<std::size_t> alive;
  std::size_t left = n;
  while (left > 0) {
    alive.clear();
    for (const std::size_t id : order)
      if (!removed[id]) alive.push_back(id);
    ConvexLayer layer = convex_hull_with_collinear(alive, ps);
    for (const std::size_t id : layer.vertices) removed[id] = 1;
    left -= layer.size();
    layers.push_back(std::move(layer));
  }
  return LayerDecomposition::from_layers(std::move(layers), ps);
}

// Classification of a pivot against one proper (positive-area) layer.
struct Tangents {
  enum class Kind { inside, outside, pivot_on_layer };
  Kind kind = Kind::inside;
  std::size_t lo = 0;             // outside: vertex position first in angular order around p
  std::size_t hi = 0;             // outside: vertex position last in angular order around p
  std::size_t pivot_position = 0; // pivot_on_layer: the pivot's own position
};

namespace detail {

// Angular extremes of a layer's direction cone as seen from an external
// point. The cone's aperture is below pi, so raw cross products compare
// angles consistently. lo and hi_near take the nearest vertex on a shared
// tangent ray (the tangent-point rule); hi_far takes the farthest, which is
// where the counterclockwise boundary enters the hi tangent ray.
struct ConeExtremes {
  std::size_t lo = 0;
  std::size_t hi_near = 0;
  std::size_t hi_far = 0;
};

inline ConeExtremes cone_extremes(const Point& p, const ConvexLayer& layer, const PointSet& ps) {
  ConeExtremes best;
  Vec d_lo, d_hn, d_hf;
  Wide q_lo = 0, q_hn = 0, q_hf = 0;
  for (std::size_t pos = 0; pos < layer.size(); ++pos) {
    const Point& v = ps[layer.vertices[pos]];
    const Vec d = direction(p, v);
    const Wide q = squared_distance(p, v);
    if (pos == 0) {
      d_lo = d_hn = d_hf = d;
      q_lo = q_hn = q_hf = q;
      continue;
    }
    if (const Wide c = cross(d, d_lo); c > 0 || (c == 0 && q < q_lo)) {
      best.lo = pos;
      d_lo = d;
      q_lo = q;
    }
    if (const Wide c = cross(d, d_hn); c < 0 || (c == 0 && q < q_hn)) {
      best.hi_near = pos;
      d_hn = d;
      q_hn = q;
    }
    if (const Wide c = cross(d, d_hf); c < 0 || (c == 0 && q > q_hf)) {
      best.hi_far = pos;
      d_hf = d;
      q_hf = q;
    }
  }
  return best;
}

}  // namespace detail

// Linear-scan tangent computation with exact predicates. Returns nullopt for
// degenerate layers (fewer than three vertices or fully collinear); the
// split step handles those directly. When a tangent line contains several
// layer vertices the one nearest p is reported. A pivot on the boundary
// interior of an edge classifies as inside.
inline std::optional<Tangents> tangents(const Point& p, const ConvexLayer& layer,
                                        const PointSet& ps) {
  const auto& v = layer.vertices;
  const std::size_t k = v.size();
  for (std::size_t i = 0; i < k; ++i)
    if (ps[v[i]] == p) return Tangents{Tangents::Kind::pivot_on_layer, 0, 0, i};
  if (k < 3 || detail::all_collinear(v, ps)) return std::nullopt;

  bool outside = false;
  for (std::size_t i = 0; i < k && !outside; ++i)
    outside = orient(ps[v[i]], ps[v[(i + 1) % k]], p) < 0;
  if (!outside) return Tangents{Tangents::Kind::inside, 0, 0, 0};

  const auto ext = detail::cone_extremes(p, layer, ps);
  return Tangents{Tangents::Kind::outside, ext.lo, ext.hi_near, 0};
}

// One cyclic slice of a layer's vertex array, O(1) words. Traversing `length`
// positions from `start` (decreasing positions when `backward`) visits
// vertices in strictly increasing cmp_folded order around the current pivot.
struct SortedSubsequence {
  std::uint32_t layer = 0;
  std::uint32_t start = 0;
  std::uint32_t length = 0;
  bool backward = false;
  friend constexpr bool operator==(const SortedSubsequence&, const SortedSubsequence&) = default;
};

namespace detail {

inline std::size_t cyclic_pos(std::size_t start, std::size_t step, std::size_t k, bool backward) {
  return backward ? (start + k - step) % k : (start + step) % k;
}

// Walks `length` cyclic positions from `start` and cuts the walk at every
// non-increasing adjacency under cmp_folded (the fold wrap, in the intended
// uses), appending one subsequence per monotone stretch.
inline void cut_monotone(const Point& pivot, const ConvexLayer& layer, std::uint32_t layer_id,
                         const PointSet& ps, std::size_t start, std::size_t length, bool backward,
                         std::vector<SortedSubsequence>& out) {
  if (length == 0) return;
  const std::size_t k = layer.size();
  std::size_t piece_start = 0;
  FoldedKey prev;
  for (std::size_t s = 0; s < length; ++s) {
    const FoldedKey cur = folded_key(pivot, ps[layer.vertices[cyclic_pos(start, s, k, backward)]]);
    if (s > 0 && !folded_less(prev, cur)) {
      out.push_back({layer_id, static_cast<std::uint32_t>(cyclic_pos(start, piece_start, k, backward)),
                     static_cast<std::uint32_t>(s - piece_start), backward});
      piece_start = s;
    }
    prev = cur;
  }
  out.push_back({layer_id, static_cast<std::uint32_t>(cyclic_pos(start, piece_start, k, backward)),
                 static_cast<std::uint32_t>(length - piece_start), backward});
}

// Chain of `count` cyclic positions from `s` whose tail may approach the
// pivot along one ray (far to near, e.g. the stretch of boundary entering a
// pivot that sits on the layer). Such a tail run is emitted as its own
// reversed piece so distances ascend; everything else is cut normally.
inline void chain_with_tail_run(const Point& p, const ConvexLayer& layer, std::uint32_t layer_id,
                                const PointSet& ps, std::size_t s, std::size_t count,
                                std::vector<SortedSubsequence>& out) {
  if (count == 0) return;
  const std::size_t k = layer.size();
  const std::size_t t = (s + count - 1) % k;
  const Vec d_tail = direction(p, ps[layer.vertices[t]]);
  std::size_t run = 1;
  while (run < count) {
    const Vec d = direction(p, ps[layer.vertices[(t + k - run) % k]]);
    if (cross(d, d_tail) != 0 || dot(d, d_tail) <= 0) break;
    ++run;
  }
  if (run >= 2) {
    const Point& first = ps[layer.vertices[(t + k - (run - 1)) % k]];
    const bool descending = squared_distance(p, first) > squared_distance(p, ps[layer.vertices[t]]);
    if (descending) {
      cut_monotone(p, layer, layer_id, ps, s, count - run, false, out);
      out.push_back({layer_id, static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(run), true});
      return;
    }
  }
  cut_monotone(p, layer, layer_id, ps, s, count, false, out);
}

inline constexpr std::size_t kNotOnLayer = ~std::size_t{0};

inline void split_layer_impl(std::size_t pivot_index, const ConvexLayer& layer,
                             std::uint32_t layer_id, const PointSet& ps, bool is_chain,
                             std::size_t pivot_pos, std::vector<SortedSubsequence>& out) {
  const auto& v = layer.vertices;
  const std::size_t k = v.size();
  if (k == 0) return;
  const Point p = ps[pivot_index];

  if (pivot_pos != kNotOnLayer) {
    detail::chain_with_tail_run(p, layer, layer_id, ps, (pivot_pos + 1) % k, k - 1, out);
    return;
  }

  if (k == 1) {
    out.push_back({layer_id, 0, 1, false});
    return;
  }

  if (is_chain) {
    // A chain on one line. Off the line the angle sweeps monotonically along
    // the chain; on the line the chain splits into at most two rays around p.
    if (orient(ps[v[0]], ps[v[k - 1]], p) != 0) {
      const bool ascending = cross(direction(p, ps[v[0]]), direction(p, ps[v[1]])) > 0;
      if (ascending)
        detail::cut_monotone(p, layer, layer_id, ps, 0, k, false, out);
      else
        detail::cut_monotone(p, layer, layer_id, ps, k - 1, k, true, out);
    } else {
      const Vec d_front = direction(p, ps[v[0]]);
      std::size_t g = 1;  // prefix sharing the front ray
      while (g < k) {
        const Vec d = direction(p, ps[v[g]]);
        if (cross(d, d_front) != 0 || dot(d, d_front) <= 0) break;
        ++g;
      }
      const auto emit_ray = [&](std::size_t first, std::size_t len) {
        if (len == 0) return;
        const bool descending =
            squared_distance(p, ps[v[first]]) > squared_distance(p, ps[v[first + len - 1]]);
        if (descending)
          out.push_back({layer_id, static_cast<std::uint32_t>(first + len - 1),
                         static_cast<std::uint32_t>(len), true});
        else
          out.push_back({layer_id, static_cast<std::uint32_t>(first),
                         static_cast<std::uint32_t>(len), false});
      };
      emit_ray(0, g);
      emit_ray(g, k - g);
    }
    return;
  }

  bool outside = false;
  std::size_t on_edge = k;
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = ps[v[i]];
    const Point& b = ps[v[(i + 1) % k]];
    const int o = orient(a, b, p);
    if (o < 0) {
      outside = true;
      break;
    }
    if (o == 0 && dot(direction(a, p), direction(a, b)) > 0 &&
        dot(direction(b, p), direction(b, a)) > 0)
      on_edge = i;  // p strictly between a and b
  }

  if (outside) {
    const auto ext = detail::cone_extremes(p, layer, ps);
    const std::size_t len_up = (ext.hi_far - ext.lo + k) % k;
    detail::cut_monotone(p, layer, layer_id, ps, ext.lo, len_up, false, out);
    detail::cut_monotone(p, layer, layer_id, ps, (ext.lo + k - 1) % k, k - len_up, true, out);
    return;
  }

  if (on_edge != k) {
    detail::chain_with_tail_run(p, layer, layer_id, ps, (on_edge + 1) % k, k, out);
    return;
  }

  std::size_t min_pos = 0;
  FoldedKey min_key = folded_key(p, ps[v[0]]);
  for (std::size_t i = 1; i < k; ++i) {
    const FoldedKey key = folded_key(p, ps[v[i]]);
    if (folded_less(key, min_key)) {
      min_pos = i;
      min_key = key;
    }
  }
  detail::cut_monotone(p, layer, layer_id, ps, min_pos, k, false, out);
}

}  // namespace detail

// Decomposes one layer into at most four subsequences, each strictly sorted
// by cmp_folded around the pivot and stored as index bounds only.
//
//   - pivot on this layer: the remaining vertices in boundary order starting
//     after the pivot form one chain; the stretch approaching the pivot along
//     its own boundary line is reversed so distances ascend.
//   - pivot inside: the whole cycle, rotated to start at the cmp_folded
//     minimum, cut at the fold wrap (two pieces). A pivot on the interior of
//     an edge rotates to start just past itself instead.
//   - pivot outside: the boundary splits at the cone extremes into an
//     ascending arc and a descending arc; the descending arc is traversed
//     backward. Each arc is then cut at the fold wrap.
//   - degenerate chains (one, two, or all-collinear vertices) split into at
//     most two distance-sorted rays.
inline void split_layer(std::size_t pivot_index, const ConvexLayer& layer, std::uint32_t layer_id,
                        const PointSet& ps, std::vector<SortedSubsequence>& out) {
  const auto& v = layer.vertices;
  std::size_t pivot_pos = detail::kNotOnLayer;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r] == pivot_index) {
      pivot_pos = r;
      break;
    }
  }
  detail::split_layer_impl(pivot_index, layer, layer_id, ps,
                           v.size() >= 2 && detail::all_collinear(v, ps), pivot_pos, out);
}

// Splits every layer of a finalized decomposition around one pivot, reading
// the cached membership and chain lookups instead of rescanning.
inline void split_all_layers(std::size_t pivot_index, const LayerDecomposition& d,
                             const PointSet& ps, std::vector<SortedSubsequence>& out) {
  const std::uint32_t own_layer = d.layer_of[pivot_index];
  for (std::uint32_t li = 0; li < d.layers.size(); ++li) {
    const std::size_t pivot_pos =
        li == own_layer ? d.position_of[pivot_index] : detail::kNotOnLayer;
    detail::split_layer_impl(pivot_index, d.layers[li], li, ps, d.chain_layer[li] != 0, pivot_pos,
                             out);
  }
}

inline std::vector<SortedSubsequence> split_layer(std::size_t pivot_index, const ConvexLayer& layer,
                                                  const PointSet& ps, std::uint32_t layer_id = 0) {
  std::vector<SortedSubsequence> out;
  split_layer(pivot_index, layer, layer_id, ps, out);
  return out;
}

inline std::size_t piece_vertex(const SortedSubsequence& piece, std::size_t step,
                                std::span<const ConvexLayer> layers) {
  const ConvexLayer& layer = layers[piece.layer];
  return layer.vertices[detail::cyclic_pos(piece.start, step, layer.size(), piece.backward)];
}

// Checks the heap-merge contract: every piece strictly increasing under
// cmp_folded and no index covered twice; with require_full_cover, the pieces
// must cover every index except the pivot. Throws std::invalid_argument.
inline void validate_pieces(std::size_t pivot, std::span<const SortedSubsequence> pieces,
                            std::span<const ConvexLayer> layers, const PointSet& ps,
                            bool require_full_cover = false) {
  std::vector<char> seen(ps.size(), 0);
  std::size_t covered = 0;
  for (const auto& piece : pieces) {
    FoldedKey prev;
    for (std::size_t s = 0; s < piece.length; ++s) {
      const std::size_t idx = piece_vertex(piece, s, layers);
      if (idx == pivot || seen[idx])
        throw std::invalid_argument("validate_pieces: duplicate or pivot coverage");
      seen[idx] = 1;
      ++covered;
      const FoldedKey key = folded_key(ps[pivot], ps[idx]);
      if (s > 0 && !folded_less(prev, key))
        throw std::invalid_argument("validate_pieces: piece not strictly increasing");
      prev = key;
    }
  }
  if (require_full_cover && covered + 1 != ps.size())
    throw std::invalid_argument("validate_pieces: pieces do not cover the point set");
}

// Streaming k-way merge of the split subsequences, keyed by cmp_folded: pop
// the minimum, pull its successor from the same piece. The priority queue is
// a binary tournament (loser tree) over the piece cursors, log2(pieces)
// comparisons per pop with the keys stored inline. Queue occupancy never
// exceeds the piece count, so per-pivot scratch stays O(pieces) and the
// merged sequence is never materialized here.
class HeapMerge {
 public:
  HeapMerge(std::size_t pivot, std::span<const SortedSubsequence> pieces,
            std::span<const ConvexLayer> layers, const PointSet& ps)
      : pivot_point_(ps[pivot]), layers_(layers), ps_(&ps) {
    cursors_.reserve(pieces.size());
    for (const auto& piece : pieces)
      if (piece.length > 0) cursors_.push_back({piece, 0});
    const std::size_t k = cursors_.size();
    if (k == 0) return;
    leaves_ = 1;
    while (leaves_ < k) leaves_ <<= 1;
    losers_.resize(leaves_, Entry::exhausted());
    winner_ = build(1);
  }

  // Emits the next entry in nondecreasing cmp_folded order; false when done.
  bool next(MergedEntry& out) {
    if (winner_.cursor == kNone) return false;
    out.index = winner_.index;
    out.key = winner_.key;
#ifndef NDEBUG
    assert(!emitted_any_ || folded_less(last_key_, out.key));
    last_key_ = out.key;
    emitted_any_ = true;
#endif
    Entry challenger = load(winner_.cursor);
    for (std::size_t node = (leaves_ + winner_.cursor) >> 1; node >= 1; node >>= 1)
      if (wins(losers_[node], challenger)) std::swap(losers_[node], challenger);
    winner_ = challenger;
    return true;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  struct Cursor {
    SortedSubsequence piece;
    std::uint32_t step = 0;
  };
  struct Entry {
    FoldedKey key;
    std::size_t index = 0;
    std::uint32_t cursor = kNone;
    static Entry exhausted() { return {}; }
  };

  static bool wins(const Entry& a, const Entry& b) {
    if (a.cursor == kNone) return false;
    if (b.cursor == kNone) return true;
    return folded_less(a.key, b.key);
  }

  // Next entry of cursor c, marking it exhausted at the end of its piece.
  Entry load(std::uint32_t c) {
    Cursor& cur = cursors_[c];
    if (cur.step >= cur.piece.length) return Entry::exhausted();
    Entry e;
    e.cursor = c;
    e.index = piece_vertex(cur.piece, cur.step, layers_);
    e.key = folded_key(pivot_point_, (*ps_)[e.index]);
    ++cur.step;
    return e;
  }

  // Plays the initial tournament below `node`; stores losers, returns the winner.
  Entry build(std::size_t node) {
    if (node >= leaves_) {
      const std::size_t leaf = node - leaves_;
      return leaf < cursors_.size() ? load(static_cast<std::uint32_t>(leaf)) : Entry::exhausted();
    }
    Entry a = build(2 * node);
    Entry b = build(2 * node + 1);
    if (wins(b, a)) std::swap(a, b);
    losers_[node] = b;
    return a;
  }

  Point pivot_point_;
  std::span<const ConvexLayer> layers_;
  const PointSet* ps_;
  std::vector<Cursor> cursors_;
  std::vector<Entry> losers_;
  std::size_t leaves_ = 0;
  Entry winner_;
#ifndef NDEBUG
  FoldedKey last_key_;
  bool emitted_any_ = false;
#endif
};

inline std::vector<MergedEntry> heap_merge_all(std::size_t pivot,
                                               std::span<const SortedSubsequence> pieces,
                                               std::span<const ConvexLayer> layers,
                                               const PointSet& ps) {
  HeapMerge merge(pivot, pieces, layers, ps);
  std::vector<MergedEntry> out;
  MergedEntry e;
  while (merge.next(e)) out.push_back(e);
  return out;
}

}  // namespace collinear
