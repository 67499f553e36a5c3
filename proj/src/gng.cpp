#include "bmatch/gng.hpp"

#include <algorithm>
#include <thread>

#include "bmatch/error.hpp"

namespace bmatch {

namespace {

// Merged k nearest wedge points of the apex over all pieces. Bucket runs are
// scanned first; indexed pieces follow in order of their box distance so that
// the running threshold prunes later pieces early. The result does not depend
// on the visiting order.
NearestSet nearest_in_wedge(const WedgeRangeIndex& index, PointId apex, std::size_t k,
                            std::span<const CanonicalPiece> pieces) {
  NearestSet acc(k);
  const ScaledPoint q = index.points()[apex];
  std::vector<std::pair<SqDist, std::size_t>> indexed;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (index.neighbor_index(pieces[i]) == nullptr)
      index.collect_nearest(pieces[i], q, acc);
    else
      indexed.emplace_back(index.lower_bound(pieces[i], q), i);
  }
  std::sort(indexed.begin(), indexed.end());
  for (const auto& [lb, i] : indexed) {
    if (!acc.admits(lb)) break;
    index.collect_nearest(pieces[i], q, acc);
  }
  return acc;
}

DeltaSet distinct_distances(const NearestSet& acc) {
  DeltaSet out;
  for (const auto& nb : acc.items())
    if (out.empty() || out.back() != nb.dist) out.push_back(nb.dist);
  return out;
}

struct WedgeOutput {
  std::vector<Edge> edges;
  std::vector<SqDist> lengths;
};

void process_range(const WedgeRangeIndex& index, const GngOptions& options, PointId first,
                   PointId last, WedgeOutput& out) {
  for (PointId p = first; p < last; ++p) {
    const auto pieces = index.canonical_decomposition(p);
    if (pieces.empty()) continue;
    const NearestSet acc = nearest_in_wedge(index, p, options.k, pieces);
    if (acc.size() == 0) continue;
    if (options.lengths_only) {
      for (const auto& nb : acc.items())
        if (out.lengths.empty() || out.lengths.back() != nb.dist) out.lengths.push_back(nb.dist);
      continue;
    }
    auto add = [&](PointId q, SqDist d) {
      out.edges.push_back({std::min(p, q), std::max(p, q), d});
    };
    if (options.assume_general_position) {
      for (const auto& nb : acc.items()) add(nb.id, nb.dist);
      continue;
    }
    const DeltaSet delta = distinct_distances(acc);
    const ScaledPoint apex = index.points()[p];
    for (PointId q : round2_edges(index, p, delta, pieces)) add(q, sq_dist(apex, index.points()[q]));
  }
}

template <class T, class Less>
void sort_unique(std::vector<T>& v, Less less) {
  std::sort(v.begin(), v.end(), less);
  v.erase(std::unique(v.begin(), v.end(), [&](const T& a, const T& b) { return !less(a, b) && !less(b, a); }),
          v.end());
}

// Appends `extra` to the sorted, duplicate-free `v`, keeping it so.
template <class T, class Less>
void merge_unique(std::vector<T>& v, std::vector<T>& extra, Less less) {
  sort_unique(extra, less);
  const auto middle = static_cast<std::ptrdiff_t>(v.size());
  v.insert(v.end(), extra.begin(), extra.end());
  std::inplace_merge(v.begin(), v.begin() + middle, v.end(), less);
  v.erase(std::unique(v.begin(), v.end(), [&](const T& a, const T& b) { return !less(a, b) && !less(b, a); }),
          v.end());
}

}  // namespace

DeltaSet round1_distances(const WedgeRangeIndex& index, PointId apex, std::size_t k,
                          std::span<const CanonicalPiece> pieces) {
  return distinct_distances(nearest_in_wedge(index, apex, k, pieces));
}

DeltaSet round1_distances(const WedgeRangeIndex& index, PointId apex, std::size_t k) {
  const auto pieces = index.canonical_decomposition(apex);
  return round1_distances(index, apex, k, pieces);
}

std::vector<PointId> round2_edges(const WedgeRangeIndex& index, PointId apex, const DeltaSet& delta,
                                  std::span<const CanonicalPiece> pieces) {
  std::vector<PointId> out;
  if (delta.empty()) return out;
  const ScaledPoint q = index.points()[apex];
  for (const auto& piece : pieces) {
    if (index.lower_bound(piece, q) > delta.back()) continue;
    index.enumerate_at_distances(piece, q, delta, out);
  }
  return out;
}

std::vector<PointId> round2_edges(const WedgeRangeIndex& index, PointId apex, const DeltaSet& delta) {
  const auto pieces = index.canonical_decomposition(apex);
  return round2_edges(index, apex, delta, pieces);
}

std::vector<SqDist> distinct_lengths(std::span<const Edge> edges) {
  std::vector<SqDist> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.length);
  sort_unique(out, std::less<>{});
  return out;
}

NeighborhoodGraph build_gng(std::span<const ScaledPoint> points, const GngOptions& options) {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "at least two points are required");
  if (options.k == 0) throw Error(ErrorCode::InvalidInput, "neighborhood size k must be positive");
  require_distinct(points);

  NeighborhoodGraph g;
  g.n = points.size();
  g.k = options.k;
  g.lengths_only = options.lengths_only;

  const auto n = static_cast<PointId>(points.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, n));
  auto edge_less = [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : (x.b != y.b ? x.b < y.b : x.length < y.length);
  };

  for (Wedge w : kAllWedges) {
    const WedgeRangeIndex index(points, w);
    std::vector<WedgeOutput> parts(threads);
    if (threads == 1) {
      process_range(index, options, 0, n, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        const PointId first = static_cast<PointId>(std::size_t{n} * t / threads);
        const PointId last = static_cast<PointId>(std::size_t{n} * (t + 1) / threads);
        pool.emplace_back(process_range, std::cref(index), std::cref(options), first, last,
                          std::ref(parts[t]));
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Edge> edges;
    std::vector<SqDist> lengths;
    for (auto& part : parts) {
      edges.insert(edges.end(), part.edges.begin(), part.edges.end());
      lengths.insert(lengths.end(), part.lengths.begin(), part.lengths.end());
    }
    merge_unique(g.edges, edges, edge_less);
    merge_unique(g.lengths, lengths, std::less<>{});
  }

  if (!options.lengths_only) g.lengths = distinct_lengths(g.edges);
  return g;
}

}  // namespace bmatch
