#include "bmatch/bottleneck.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "bmatch/error.hpp"

namespace bmatch {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::size_t surviving_pairs(const Matching& m, std::span<const ScaledPoint> points, SqDist r2) {
  std::size_t count = 0;
  for (const auto& [a, b] : m.pairs())
    if (sq_dist(points[a], points[b]) <= r2) ++count;
  return count;
}

void validate_instance(std::span<const ScaledPoint> points) {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "at least two points are required");
  if (points.size() % 2 != 0)
    throw Error(ErrorCode::OddPointCount,
                "a perfect matching needs an even number of points, got " +
                    std::to_string(points.size()));
  require_distinct(points);
}

}  // namespace

SearchOutcome binary_search_min_true(std::span<const SqDist> candidates,
                                     const std::function<bool(SqDist)>& oracle) {
  if (candidates.empty()) throw Error(ErrorCode::InvalidInput, "empty candidate set");
  SearchOutcome out;
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  bool hi_confirmed = false;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++out.oracle_calls;
    if (oracle(candidates[mid])) {
      hi = mid;
      hi_confirmed = true;
    } else {
      lo = mid + 1;
    }
  }
  if (!hi_confirmed) {
    ++out.oracle_calls;
    if (!oracle(candidates[lo]))
      throw Error(ErrorCode::NoPerfectMatching,
                  "no candidate distance admits a perfect matching");
  }
  out.index = lo;
  out.value = candidates[lo];
  return out;
}

SqDist BottleneckResult::bottleneck_of(std::span<const ScaledPoint> points) const {
  SqDist worst(0);
  for (const auto& [a, b] : matching.pairs()) worst = std::max(worst, sq_dist(points[a], points[b]));
  return worst;
}

std::vector<SqDist> all_pair_distances(std::span<const ScaledPoint> points) {
  std::vector<SqDist> out;
  out.reserve(points.size() * (points.size() - 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) out.push_back(sq_dist(points[i], points[j]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BottleneckResult bottleneck_matching(std::span<const ScaledPoint> points, const SolveOptions& options) {
  validate_instance(points);

  BottleneckResult result;
  result.n = points.size();
  result.k = options.k;
  result.source = options.all_pairs ? CandidateSource::AllPairs : CandidateSource::GngLengths;

  const auto build_start = std::chrono::steady_clock::now();
  CandidateDistances candidates;
  candidates.source = result.source;
  std::vector<Edge> sparse;  // sorted by length when the oracle runs on GNG edges
  if (options.all_pairs) {
    candidates.values = all_pair_distances(points);
  } else {
    GngOptions gng_options;
    gng_options.k = options.k;
    gng_options.lengths_only = options.lengths_only;
    gng_options.threads = options.threads;
    NeighborhoodGraph gng = build_gng(points, gng_options);
    candidates.values = std::move(gng.lengths);
    result.gng_edge_count = gng.edges.size();
    sparse = std::move(gng.edges);
    std::stable_sort(sparse.begin(), sparse.end(),
                     [](const Edge& x, const Edge& y) { return x.length < y.length; });
  }
  result.build_ms = elapsed_ms(build_start);
  result.candidate_count = candidates.values.size();
  const bool use_sparse = !options.all_pairs && !options.lengths_only;

  const auto search_start = std::chrono::steady_clock::now();
  // Warm starts: a maximum matching at a rejected threshold stays valid at
  // every larger one; the witness at an accepted threshold is trimmed.
  std::optional<Matching> below;
  std::optional<std::pair<SqDist, Matching>> accepted;
  auto oracle = [&](SqDist r2) {
    const Matching* start = nullptr;
    if (below) start = &*below;
    if (accepted) {
      const std::size_t kept = surviving_pairs(accepted->second, points, r2);
      if (!below || kept > below->size) start = &accepted->second;
    }
    std::optional<std::span<const Edge>> candidate_edges;
    if (use_sparse) {
      const auto end = std::upper_bound(sparse.begin(), sparse.end(), r2,
                                        [](SqDist d, const Edge& e) { return d < e.length; });
      candidate_edges = std::span<const Edge>(sparse.data(), static_cast<std::size_t>(end - sparse.begin()));
    }
    Decision d = has_perfect_matching(points, r2, candidate_edges, start);
    if (d.perfect) {
      if (!accepted || r2 < accepted->first) accepted = std::make_pair(r2, std::move(d.witness));
      return true;
    }
    below = std::move(d.witness);
    return false;
  };

  const SearchOutcome found = binary_search_min_true(candidates.values, oracle);
  result.search_ms = elapsed_ms(search_start);
  result.oracle_calls = found.oracle_calls;
  if (!accepted || accepted->first != found.value)
    throw Error(ErrorCode::Internal, "no witness recorded at the optimal threshold");
  result.r_star_sq = found.value;
  result.matching = std::move(accepted->second);
  return result;
}

BottleneckResult bottleneck_via_all_pairs(std::span<const ScaledPoint> points) {
  SolveOptions options;
  options.all_pairs = true;
  return bottleneck_matching(points, options);
}

}  // namespace bmatch
