#include "bmatch/neighbor_index.hpp"

#include <algorithm>
#include <limits>

namespace bmatch {

void NearestSet::offer(Neighbor n) {
  if (capacity_ == 0) return;
  if (full() && !(n < items_.back())) return;
  items_.insert(std::upper_bound(items_.begin(), items_.end(), n), n);
  if (items_.size() > capacity_) items_.pop_back();
}

bool contains_distance(std::span<const SqDist> sorted, SqDist d) {
  return std::binary_search(sorted.begin(), sorted.end(), d);
}

namespace {

__int128 axis_offset(Coord q, Coord lo, Coord hi) {
  if (q < lo) return static_cast<__int128>(lo) - q;
  if (q > hi) return static_cast<__int128>(q) - hi;
  return 0;
}

SqDist norm(const std::array<__int128, 2>& off) {
  return SqDist(static_cast<SqDist::Rep>(off[0] * off[0] + off[1] * off[1]));
}

}  // namespace

SqDist Box::lower_bound(ScaledPoint q) const noexcept {
  return norm({axis_offset(q.x, min_x, max_x), axis_offset(q.y, min_y, max_y)});
}

NeighborIndex::NeighborIndex(std::span<const ScaledPoint> points, std::span<const PointId> members)
    : points_(points), order_(members.begin(), members.end()), axis_(members.size(), 0) {
  if (order_.empty()) return;
  thread_local std::vector<Site> sites;
  sites.clear();
  sites.reserve(order_.size());
  for (PointId id : order_) sites.push_back({points_[id], id});
  box_ = {sites.front().p.x, sites.front().p.y, sites.front().p.x, sites.front().p.y};
  for (const Site& s : sites) {
    box_.min_x = std::min(box_.min_x, s.p.x);
    box_.max_x = std::max(box_.max_x, s.p.x);
    box_.min_y = std::min(box_.min_y, s.p.y);
    box_.max_y = std::max(box_.max_y, s.p.y);
  }
  build(sites, 0, sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) order_[i] = sites[i].id;
}

void NeighborIndex::build(std::vector<Site>& sites, std::size_t lo, std::size_t hi) {
  if (hi - lo <= kLeafSize) return;
  Coord min_x = std::numeric_limits<Coord>::max(), max_x = std::numeric_limits<Coord>::min();
  Coord min_y = min_x, max_y = max_x;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto& p = sites[i].p;
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int axis = (static_cast<__int128>(max_x) - min_x >= static_cast<__int128>(max_y) - min_y) ? 0 : 1;
  const std::size_t mid = lo + (hi - lo) / 2;
  auto first = sites.begin() + static_cast<std::ptrdiff_t>(lo);
  auto last = sites.begin() + static_cast<std::ptrdiff_t>(hi);
  auto nth = sites.begin() + static_cast<std::ptrdiff_t>(mid);
  if (axis == 0)
    std::nth_element(first, nth, last, [](const Site& a, const Site& b) {
      return a.p.x != b.p.x ? a.p.x < b.p.x : a.id < b.id;
    });
  else
    std::nth_element(first, nth, last, [](const Site& a, const Site& b) {
      return a.p.y != b.p.y ? a.p.y < b.p.y : a.id < b.id;
    });
  axis_[mid] = static_cast<std::uint8_t>(axis);
  build(sites, lo, mid);
  build(sites, mid + 1, hi);
}

void NeighborIndex::search(std::size_t lo, std::size_t hi, ScaledPoint q, Offsets off, SqDist lb,
                           NearestSet& acc) const {
  if (lo >= hi || !acc.admits(lb)) return;
  if (hi - lo <= kLeafSize) {
    for (std::size_t i = lo; i < hi; ++i) {
      const PointId id = order_[i];
      acc.offer({sq_dist(q, points_[id]), id});
    }
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const int axis = axis_[mid];
  const PointId pivot = order_[mid];
  acc.offer({sq_dist(q, points_[pivot]), pivot});

  const __int128 diff = static_cast<__int128>(axis == 0 ? q.x : q.y) - coord(pivot, axis);
  const bool left_first = diff <= 0;
  Offsets far = off;
  far[axis] = diff < 0 ? -diff : diff;
  const SqDist far_lb = norm(far);
  if (left_first) {
    search(lo, mid, q, off, lb, acc);
    search(mid + 1, hi, q, far, far_lb, acc);
  } else {
    search(mid + 1, hi, q, off, lb, acc);
    search(lo, mid, q, far, far_lb, acc);
  }
}

void NeighborIndex::collect_nearest(ScaledPoint q, NearestSet& acc) const {
  if (order_.empty()) return;
  const Offsets off{axis_offset(q.x, box_.min_x, box_.max_x), axis_offset(q.y, box_.min_y, box_.max_y)};
  search(0, order_.size(), q, off, norm(off), acc);
}

NeighborAnswer NeighborIndex::top_k(ScaledPoint q, std::size_t k) const {
  NearestSet acc(k);
  collect_nearest(q, acc);
  NeighborAnswer ans;
  ans.witnesses.assign(acc.items().begin(), acc.items().end());
  if (ans.witnesses.empty()) return ans;
  ans.d_max = ans.witnesses.back().dist;
  if (ans.witnesses.size() < order_.size()) {
    const SqDist probe[] = {ans.d_max};
    const auto at_threshold = enumerate_at_distances(q, probe).size();
    const auto in_witnesses = static_cast<std::size_t>(
        std::count_if(ans.witnesses.begin(), ans.witnesses.end(),
                      [&](const Neighbor& n) { return n.dist == ans.d_max; }));
    ans.truncated_ties = at_threshold > in_witnesses;
  }
  return ans;
}

void NeighborIndex::enumerate(std::size_t lo, std::size_t hi, ScaledPoint q, Offsets off, SqDist lb,
                              std::span<const SqDist> distances, std::vector<PointId>& out) const {
  if (lo >= hi || lb > distances.back()) return;
  if (hi - lo <= kLeafSize) {
    for (std::size_t i = lo; i < hi; ++i) {
      const PointId id = order_[i];
      if (contains_distance(distances, sq_dist(q, points_[id]))) out.push_back(id);
    }
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const int axis = axis_[mid];
  const PointId pivot = order_[mid];
  if (contains_distance(distances, sq_dist(q, points_[pivot]))) out.push_back(pivot);

  const __int128 diff = static_cast<__int128>(axis == 0 ? q.x : q.y) - coord(pivot, axis);
  Offsets far = off;
  far[axis] = diff < 0 ? -diff : diff;
  const SqDist far_lb = norm(far);
  if (diff <= 0) {
    enumerate(lo, mid, q, off, lb, distances, out);
    enumerate(mid + 1, hi, q, far, far_lb, distances, out);
  } else {
    enumerate(mid + 1, hi, q, off, lb, distances, out);
    enumerate(lo, mid, q, far, far_lb, distances, out);
  }
}

void NeighborIndex::enumerate_at_distances(ScaledPoint q, std::span<const SqDist> distances,
                                           std::vector<PointId>& out) const {
  if (order_.empty() || distances.empty()) return;
  const Offsets off{axis_offset(q.x, box_.min_x, box_.max_x), axis_offset(q.y, box_.min_y, box_.max_y)};
  enumerate(0, order_.size(), q, off, norm(off), distances, out);
}

std::vector<PointId> NeighborIndex::enumerate_at_distances(ScaledPoint q,
                                                           std::span<const SqDist> distances) const {
  std::vector<PointId> out;
  enumerate_at_distances(q, distances, out);
  return out;
}

}  // namespace bmatch
