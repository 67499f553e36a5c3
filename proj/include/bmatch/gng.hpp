#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/wedge_index.hpp"

namespace bmatch {

inline constexpr std::size_t kDefaultNeighborhood = 17;

/// Undirected edge, a < b, with its exact squared length.
struct Edge {
  PointId a = 0;
  PointId b = 0;
  SqDist length;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// The k-geographic-neighborhood graph. `edges` is sorted by (a, b) and is
/// empty when built in lengths-only mode; `lengths` holds the distinct edge
/// lengths in ascending order.
struct NeighborhoodGraph {
  std::size_t n = 0;
  std::size_t k = kDefaultNeighborhood;
  bool lengths_only = false;
  std::vector<Edge> edges;
  std::vector<SqDist> lengths;
};

/// Distinct distances from an apex to its k nearest wedge points, ascending.
using DeltaSet = std::vector<SqDist>;

struct GngOptions {
  std::size_t k = kDefaultNeighborhood;
  bool lengths_only = false;
  /// Take the k merged witnesses directly as the neighborhood, skipping the
  /// tie enumeration. Only exact when no two points are equidistant from a
  /// third.
  bool assume_general_position = false;
  unsigned threads = 1;
};

/// First round: merge every canonical piece's nearest witnesses into a
/// running list of the k closest, then report its distinct distances.
DeltaSet round1_distances(const WedgeRangeIndex& index, PointId apex, std::size_t k);
DeltaSet round1_distances(const WedgeRangeIndex& index, PointId apex, std::size_t k,
                          std::span<const CanonicalPiece> pieces);

/// Second round: every wedge point whose distance to the apex lies in delta.
std::vector<PointId> round2_edges(const WedgeRangeIndex& index, PointId apex, const DeltaSet& delta);
std::vector<PointId> round2_edges(const WedgeRangeIndex& index, PointId apex, const DeltaSet& delta,
                                  std::span<const CanonicalPiece> pieces);

/// Throws Error(TooFewPoints) for fewer than two points, Error(DuplicatePoint)
/// for repeated points, Error(InvalidInput) for k == 0.
NeighborhoodGraph build_gng(std::span<const ScaledPoint> points, const GngOptions& options = {});

/// Distinct lengths of an edge list, ascending.
std::vector<SqDist> distinct_lengths(std::span<const Edge> edges);

}  // namespace bmatch
