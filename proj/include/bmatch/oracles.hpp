#pragma once

// Brute-force reference implementations. They are ground truth for the tests
// and deliberately share nothing with the solver beyond the exact predicates
// of geometry.hpp.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/gng.hpp"
#include "bmatch/matching.hpp"
#include "bmatch/neighbor_index.hpp"

namespace bmatch::oracle {

/// Definitional kGNG: (p, q) is an edge when some wedge at p contains q with
/// fewer than k wedge points strictly closer to p, or the same from q.
NeighborhoodGraph brute_gng(std::span<const ScaledPoint> points, std::size_t k);

/// Definitional kRNG: fewer than k points strictly closer to both endpoints.
std::vector<std::pair<PointId, PointId>> brute_rng(std::span<const ScaledPoint> points, std::size_t k);

struct BruteBottleneck {
  SqDist value;
  std::vector<std::pair<PointId, PointId>> matching;
};

/// Minimum over all perfect matchings of the longest squared edge.
/// Enumerates all (n-1)!! matchings; intended for n <= 12.
BruteBottleneck brute_bottleneck(std::span<const ScaledPoint> points);

/// Sort by (distance, index), keep k, report the threshold tie flag.
NeighborAnswer brute_knn(std::span<const ScaledPoint> points, std::span<const PointId> members,
                         ScaledPoint q, std::size_t k);

/// Members of `members` whose squared distance to q is in `distances`.
std::vector<PointId> brute_at_distances(std::span<const ScaledPoint> points,
                                        std::span<const PointId> members, ScaledPoint q,
                                        std::span<const SqDist> distances);

/// Distinct distances of the first k points of the wedge sorted by distance.
DeltaSet brute_delta(std::span<const ScaledPoint> points, PointId apex, Wedge w, std::size_t k);

/// Exact maximum matching size by exhaustive recursion; n <= 10 or so.
std::size_t brute_max_matching(std::size_t n, std::span<const std::pair<PointId, PointId>> edges);

}  // namespace bmatch::oracle
