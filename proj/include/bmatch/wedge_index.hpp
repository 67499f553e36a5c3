#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/neighbor_index.hpp"

namespace bmatch {

/// One piece of a wedge range query: a contiguous run [begin, end) of a
/// first-level node's v-ordered point array. Pieces that cover a whole
/// second-level node carry that node's NeighborIndex; partial runs inside a
/// leaf bucket (at most kBucketSize points) do not.
struct CanonicalPiece {
  std::uint32_t first_node = 0;
  std::uint32_t second_node = 0;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  std::size_t size() const { return end - begin; }
  friend constexpr bool operator==(const CanonicalPiece&, const CanonicalPiece&) = default;
};

/// Two-level canonical-subset structure for one wedge direction.
///
/// The first level is a balanced tree over the points ordered by the wedge's
/// u key; each node keeps its points ordered by the v key. The second level
/// is a balanced tree over that v-ordered array, stopping at buckets of at
/// most kBucketSize points; every second-level node above the buckets owns a
/// NeighborIndex over its canonical set.
///
/// A query at p reports pieces whose disjoint union is exactly
/// P ∩ (p + W) \ {p}: at most 4 (⌈log2 n⌉ + 1)^2 pieces.
///
/// Holds a view of the point array, which must outlive the index.
class WedgeRangeIndex {
 public:
  static constexpr std::size_t kBucketSize = 16;

  /// Throws Error(DuplicatePoint) or Error(InvalidInput) for an empty set.
  WedgeRangeIndex(std::span<const ScaledPoint> points, Wedge wedge);

  Wedge wedge() const { return wedge_; }
  std::size_t point_count() const { return points_.size(); }
  std::span<const ScaledPoint> points() const { return points_; }

  /// Decomposition for an apex in P (the apex itself is excluded).
  std::vector<CanonicalPiece> canonical_decomposition(PointId apex) const;
  /// Decomposition for an arbitrary probe point; if it coincides with a point
  /// of P, that point is excluded.
  std::vector<CanonicalPiece> canonical_decomposition(ScaledPoint probe) const;

  std::span<const PointId> members(const CanonicalPiece& piece) const;
  /// Null for partial bucket runs.
  const NeighborIndex* neighbor_index(const CanonicalPiece& piece) const;
  /// Lower bound on the squared distance from q to any member of the piece.
  SqDist lower_bound(const CanonicalPiece& piece, ScaledPoint q) const;

  void collect_nearest(const CanonicalPiece& piece, ScaledPoint q, NearestSet& acc) const;
  void enumerate_at_distances(const CanonicalPiece& piece, ScaledPoint q,
                              std::span<const SqDist> distances, std::vector<PointId>& out) const;

  /// Total length of all first-level v-ordered arrays.
  std::size_t stored_multiplicity() const { return v_sorted_.size(); }
  std::size_t first_level_node_count() const { return first_.size(); }
  std::size_t neighbor_index_count() const { return indexes_.size(); }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  struct FirstNode {
    std::uint32_t lo, hi;        // range in u order
    std::uint32_t left, right;   // children or kNone
    std::uint32_t v_offset;      // start of this node's run in v_sorted_
    std::uint32_t second_root;
  };
  struct SecondNode {
    std::uint32_t begin, end;    // absolute positions in v_sorted_
    std::uint32_t left, right;
    std::uint32_t index;         // into indexes_, or kNone for buckets
  };

  std::uint32_t build_first(std::uint32_t lo, std::uint32_t hi);
  std::uint32_t build_second(std::uint32_t begin, std::uint32_t end);
  void decompose_first(std::uint32_t node, std::uint32_t lo, std::uint32_t hi,
                       const WedgeKey& v_key, std::vector<CanonicalPiece>& out) const;
  void decompose_second(std::uint32_t first_node, std::uint32_t node, std::uint32_t from,
                        std::vector<CanonicalPiece>& out) const;
  std::vector<CanonicalPiece> decompose(ScaledPoint apex, std::optional<PointId> self) const;

  std::span<const ScaledPoint> points_;
  Wedge wedge_;
  std::vector<WedgeKeys> keys_;
  std::vector<PointId> u_order_;
  std::vector<std::uint32_t> u_rank_;
  std::vector<PointId> v_sorted_;
  std::vector<FirstNode> first_;
  std::vector<SecondNode> second_;
  std::vector<NeighborIndex> indexes_;
  // Points sorted by coordinates, for locating probes that lie in P.
  std::vector<PointId> by_coord_;
  std::uint32_t root_ = kNone;
};

}  // namespace bmatch
