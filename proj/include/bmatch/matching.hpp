#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/gng.hpp"

namespace bmatch {

inline constexpr PointId kUnmatched = ~PointId{0};

/// Undirected simple graph in compressed adjacency form. Self-loops and
/// repeated edges in the input are dropped; neighbor lists are ascending.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;
  AdjacencyGraph(std::size_t n, std::span<const std::pair<PointId, PointId>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const PointId> neighbors(PointId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool has_edge(PointId a, PointId b) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<PointId> targets_;
};

struct Matching {
  std::vector<PointId> mate;
  std::size_t size = 0;

  bool perfect() const { return 2 * size == mate.size(); }
  std::vector<std::pair<PointId, PointId>> pairs() const;

  static Matching empty(std::size_t n) { return {std::vector<PointId>(n, kUnmatched), 0}; }
};

/// True when `m` is an involution on matched vertices and every matched pair
/// is an edge of `g`.
bool is_valid_matching(const AdjacencyGraph& g, const Matching& m);

/// Maximum-cardinality matching by Edmonds' blossom algorithm. Free vertices
/// are processed in ascending order; an optional starting matching (a valid
/// matching of g) is extended rather than rebuilt.
Matching max_matching(const AdjacencyGraph& g, const Matching* start = nullptr);

/// G_r: with candidates, the candidates of length <= r2; without, every pair
/// of points at squared distance <= r2 (grid bucketing, exact comparisons).
AdjacencyGraph threshold_graph(std::span<const ScaledPoint> points, SqDist r2,
                               std::optional<std::span<const Edge>> candidates = std::nullopt);

/// Number of point pairs at squared distance <= r2.
std::size_t count_pairs_within(std::span<const ScaledPoint> points, SqDist r2);

struct Decision {
  bool perfect = false;
  Matching witness;
};

/// Does G_r have a perfect matching? Throws Error(OddPointCount) for odd n.
Decision has_perfect_matching(std::span<const ScaledPoint> points, SqDist r2,
                              std::optional<std::span<const Edge>> candidates = std::nullopt,
                              const Matching* start = nullptr);

}  // namespace bmatch
