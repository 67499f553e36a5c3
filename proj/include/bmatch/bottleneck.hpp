#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/gng.hpp"
#include "bmatch/matching.hpp"

namespace bmatch {

enum class CandidateSource { GngLengths, AllPairs };

struct CandidateDistances {
  std::vector<SqDist> values;  // ascending, distinct
  CandidateSource source = CandidateSource::GngLengths;
};

struct SearchOutcome {
  SqDist value;
  std::size_t index = 0;
  std::size_t oracle_calls = 0;
};

/// Least candidate accepted by a monotone oracle (false...false true...true).
/// Uses at most ⌈log2 |D|⌉ + 1 oracle calls; the last candidate is only
/// probed when every other one was rejected. Throws Error(NoPerfectMatching)
/// when every candidate is rejected and Error(InvalidInput) for empty D.
SearchOutcome binary_search_min_true(std::span<const SqDist> candidates,
                                     const std::function<bool(SqDist)>& oracle);

struct SolveOptions {
  std::size_t k = kDefaultNeighborhood;
  /// Search every pairwise distance, deciding on the full disk graph.
  bool all_pairs = false;
  /// Build only the GNG length set and decide on the full disk graph.
  bool lengths_only = false;
  unsigned threads = 1;
};

struct BottleneckResult {
  SqDist r_star_sq;
  Matching matching;
  std::size_t n = 0;
  std::size_t k = kDefaultNeighborhood;
  CandidateSource source = CandidateSource::GngLengths;
  std::size_t candidate_count = 0;
  std::size_t gng_edge_count = 0;
  std::size_t oracle_calls = 0;
  double build_ms = 0.0;
  double search_ms = 0.0;

  /// Largest squared length among the matched pairs.
  SqDist bottleneck_of(std::span<const ScaledPoint> points) const;
};

/// GNG candidates, binary search with the decision oracle on the GNG edges
/// filtered by threshold, witness from the oracle call at r*.
/// Throws Error(OddPointCount), Error(TooFewPoints) or Error(DuplicatePoint).
BottleneckResult bottleneck_matching(std::span<const ScaledPoint> points,
                                     const SolveOptions& options = {});

/// Same answer from every pairwise distance and the full disk graph.
BottleneckResult bottleneck_via_all_pairs(std::span<const ScaledPoint> points);

/// Sorted distinct squared distances over all pairs.
std::vector<SqDist> all_pair_distances(std::span<const ScaledPoint> points);

}  // namespace bmatch
