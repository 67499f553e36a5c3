#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmatch/geometry.hpp"

namespace bmatch {

/// A point of a canonical set together with its squared distance to a query.
/// Ordered by (distance, point index), the tie-break used everywhere.
struct Neighbor {
  SqDist dist;
  PointId id = 0;

  friend constexpr bool operator==(const Neighbor&, const Neighbor&) = default;
  friend constexpr auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

/// The k smallest neighbors offered so far, kept sorted.
class NearestSet {
 public:
  explicit NearestSet(std::size_t capacity) : capacity_(capacity) { items_.reserve(capacity); }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return items_.size(); }
  bool full() const { return items_.size() >= capacity_; }
  std::span<const Neighbor> items() const { return items_; }

  /// False when no neighbor at distance `d` could still enter the set.
  bool admits(SqDist d) const { return !full() || d <= items_.back().dist; }

  void offer(Neighbor n);
  void clear() { items_.clear(); }

 private:
  std::size_t capacity_;
  std::vector<Neighbor> items_;
};

struct NeighborAnswer {
  /// min(k, |Q|) nearest members sorted by (distance, index).
  std::vector<Neighbor> witnesses;
  /// Distance of the last witness; zero when Q is empty.
  SqDist d_max;
  /// Some member outside the witnesses lies at exactly d_max.
  bool truncated_ties = false;

  friend bool operator==(const NeighborAnswer&, const NeighborAnswer&) = default;
};

struct Box {
  Coord min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  SqDist lower_bound(ScaledPoint q) const noexcept;
};

/// Exact nearest-neighbor structure over one canonical set: an implicit
/// kd-tree (median splits, per-node split axis) over member ids. Holds a view
/// of the point array, which must outlive it.
class NeighborIndex {
 public:
  static constexpr std::size_t kLeafSize = 8;

  NeighborIndex(std::span<const ScaledPoint> points, std::span<const PointId> members);

  std::size_t size() const { return order_.size(); }
  const Box& bounds() const { return box_; }
  std::span<const PointId> members() const { return order_; }

  NeighborAnswer top_k(ScaledPoint q, std::size_t k) const;

  /// Offers to `acc` every member that can still enter it. After the call,
  /// acc holds the smallest entries of (previous contents + members).
  void collect_nearest(ScaledPoint q, NearestSet& acc) const;

  /// Appends every member whose squared distance to q is in `distances`
  /// (sorted ascending, non-empty), in kd order.
  void enumerate_at_distances(ScaledPoint q, std::span<const SqDist> distances,
                              std::vector<PointId>& out) const;
  std::vector<PointId> enumerate_at_distances(ScaledPoint q,
                                              std::span<const SqDist> distances) const;

 private:
  using Offsets = std::array<__int128, 2>;

  struct Site {
    ScaledPoint p;
    PointId id;
  };

  void build(std::vector<Site>& sites, std::size_t lo, std::size_t hi);
  void search(std::size_t lo, std::size_t hi, ScaledPoint q, Offsets off, SqDist lb,
              NearestSet& acc) const;
  void enumerate(std::size_t lo, std::size_t hi, ScaledPoint q, Offsets off, SqDist lb,
                 std::span<const SqDist> distances, std::vector<PointId>& out) const;
  Coord coord(PointId id, int axis) const { return axis == 0 ? points_[id].x : points_[id].y; }

  std::span<const ScaledPoint> points_;
  std::vector<PointId> order_;
  // Split axis of the internal node whose median sits at this position.
  std::vector<std::uint8_t> axis_;
  Box box_;
};

/// Distinct-distance test used by enumeration: binary search in a sorted list.
bool contains_distance(std::span<const SqDist> sorted, SqDist d);

}  // namespace bmatch
