#include "bmatch/wedge_index.hpp"

#include <algorithm>
#include <bit>

#include "bmatch/error.hpp"

namespace bmatch {

WedgeRangeIndex::WedgeRangeIndex(std::span<const ScaledPoint> points, Wedge wedge)
    : points_(points), wedge_(wedge) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "wedge index over an empty point set");
  require_distinct(points);
  const auto n = static_cast<std::uint32_t>(points.size());

  keys_.reserve(n);
  for (const auto& p : points) keys_.push_back(wedge_keys(wedge, p));

  u_order_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) u_order_[i] = i;
  std::sort(u_order_.begin(), u_order_.end(), [&](PointId a, PointId b) {
    const auto c = keys_[a].u <=> keys_[b].u;
    return c != 0 ? c < 0 : a < b;
  });
  u_rank_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) u_rank_[u_order_[r]] = r;

  by_coord_ = u_order_;
  std::sort(by_coord_.begin(), by_coord_.end(),
            [&](PointId a, PointId b) { return points_[a] < points_[b]; });

  const std::size_t levels = static_cast<std::size_t>(std::bit_width(std::bit_ceil(std::size_t{n})));
  v_sorted_.reserve(static_cast<std::size_t>(n) * levels);
  first_.reserve(2 * static_cast<std::size_t>(n));
  root_ = build_first(0, n);
}

std::uint32_t WedgeRangeIndex::build_first(std::uint32_t lo, std::uint32_t hi) {
  const auto id = static_cast<std::uint32_t>(first_.size());
  first_.push_back({lo, hi, kNone, kNone, 0, kNone});

  std::vector<PointId> run;
  if (hi - lo == 1) {
    run.push_back(u_order_[lo]);
  } else {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    const std::uint32_t left = build_first(lo, mid);
    const std::uint32_t right = build_first(mid, hi);
    first_[id].left = left;
    first_[id].right = right;
    const auto& l = first_[left];
    const auto& r = first_[right];
    run.resize(hi - lo);
    std::merge(v_sorted_.begin() + l.v_offset, v_sorted_.begin() + l.v_offset + (l.hi - l.lo),
               v_sorted_.begin() + r.v_offset, v_sorted_.begin() + r.v_offset + (r.hi - r.lo),
               run.begin(), [&](PointId a, PointId b) {
                 const auto c = keys_[a].v <=> keys_[b].v;
                 return c != 0 ? c < 0 : a < b;
               });
  }
  const auto offset = static_cast<std::uint32_t>(v_sorted_.size());
  v_sorted_.insert(v_sorted_.end(), run.begin(), run.end());
  first_[id].v_offset = offset;
  first_[id].second_root = build_second(offset, offset + static_cast<std::uint32_t>(run.size()));
  return id;
}

std::uint32_t WedgeRangeIndex::build_second(std::uint32_t begin, std::uint32_t end) {
  const auto id = static_cast<std::uint32_t>(second_.size());
  second_.push_back({begin, end, kNone, kNone, kNone});
  if (end - begin <= kBucketSize) return id;

  const auto index = static_cast<std::uint32_t>(indexes_.size());
  indexes_.emplace_back(points_, std::span<const PointId>(v_sorted_.data() + begin, end - begin));
  const std::uint32_t mid = begin + (end - begin) / 2;
  const std::uint32_t left = build_second(begin, mid);
  const std::uint32_t right = build_second(mid, end);
  second_[id].index = index;
  second_[id].left = left;
  second_[id].right = right;
  return id;
}

std::vector<CanonicalPiece> WedgeRangeIndex::canonical_decomposition(PointId apex) const {
  return decompose(points_[apex], apex);
}

std::vector<CanonicalPiece> WedgeRangeIndex::canonical_decomposition(ScaledPoint probe) const {
  auto it = std::lower_bound(by_coord_.begin(), by_coord_.end(), probe,
                             [&](PointId a, const ScaledPoint& p) { return points_[a] < p; });
  std::optional<PointId> self;
  if (it != by_coord_.end() && points_[*it] == probe) self = *it;
  return decompose(probe, self);
}

std::vector<CanonicalPiece> WedgeRangeIndex::decompose(ScaledPoint apex,
                                                       std::optional<PointId> self) const {
  const WedgeKeys k = wedge_keys(wedge_, apex);
  const auto n = static_cast<std::uint32_t>(u_order_.size());
  const auto start = static_cast<std::uint32_t>(
      std::partition_point(u_order_.begin(), u_order_.end(),
                           [&](PointId id) { return keys_[id].u < k.u; }) -
      u_order_.begin());

  std::vector<CanonicalPiece> out;
  if (self) {
    const std::uint32_t pos = u_rank_[*self];
    decompose_first(root_, start, pos, k.v, out);
    decompose_first(root_, pos + 1, n, k.v, out);
  } else {
    decompose_first(root_, start, n, k.v, out);
  }
  return out;
}

void WedgeRangeIndex::decompose_first(std::uint32_t node, std::uint32_t lo, std::uint32_t hi,
                                      const WedgeKey& v_key, std::vector<CanonicalPiece>& out) const {
  if (lo >= hi) return;
  const FirstNode& f = first_[node];
  if (f.hi <= lo || f.lo >= hi) return;
  if (lo <= f.lo && f.hi <= hi) {
    const auto run_begin = v_sorted_.begin() + f.v_offset;
    const auto run_end = run_begin + (f.hi - f.lo);
    const auto from = std::partition_point(run_begin, run_end,
                                           [&](PointId id) { return keys_[id].v < v_key; });
    decompose_second(node, f.second_root, static_cast<std::uint32_t>(from - v_sorted_.begin()), out);
    return;
  }
  decompose_first(f.left, lo, hi, v_key, out);
  decompose_first(f.right, lo, hi, v_key, out);
}

void WedgeRangeIndex::decompose_second(std::uint32_t first_node, std::uint32_t node,
                                       std::uint32_t from, std::vector<CanonicalPiece>& out) const {
  const SecondNode& s = second_[node];
  if (s.end <= from) return;
  if (from <= s.begin) {
    out.push_back({first_node, node, s.begin, s.end});
    return;
  }
  if (s.index == kNone) {
    out.push_back({first_node, node, from, s.end});
    return;
  }
  decompose_second(first_node, s.left, from, out);
  decompose_second(first_node, s.right, from, out);
}

std::span<const PointId> WedgeRangeIndex::members(const CanonicalPiece& piece) const {
  return {v_sorted_.data() + piece.begin, piece.size()};
}

const NeighborIndex* WedgeRangeIndex::neighbor_index(const CanonicalPiece& piece) const {
  const SecondNode& s = second_[piece.second_node];
  if (s.index == kNone || piece.begin != s.begin || piece.end != s.end) return nullptr;
  return &indexes_[s.index];
}

SqDist WedgeRangeIndex::lower_bound(const CanonicalPiece& piece, ScaledPoint q) const {
  const NeighborIndex* idx = neighbor_index(piece);
  return idx ? idx->bounds().lower_bound(q) : SqDist(0);
}

void WedgeRangeIndex::collect_nearest(const CanonicalPiece& piece, ScaledPoint q,
                                      NearestSet& acc) const {
  if (const NeighborIndex* idx = neighbor_index(piece)) {
    idx->collect_nearest(q, acc);
    return;
  }
  for (PointId id : members(piece)) acc.offer({sq_dist(q, points_[id]), id});
}

void WedgeRangeIndex::enumerate_at_distances(const CanonicalPiece& piece, ScaledPoint q,
                                             std::span<const SqDist> distances,
                                             std::vector<PointId>& out) const {
  if (distances.empty()) return;
  if (const NeighborIndex* idx = neighbor_index(piece)) {
    idx->enumerate_at_distances(q, distances, out);
    return;
  }
  for (PointId id : members(piece))
    if (contains_distance(distances, sq_dist(q, points_[id]))) out.push_back(id);
}

}  // namespace bmatch
