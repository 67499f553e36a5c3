#include "bmatch/oracles.hpp"

#include <algorithm>

#include "bmatch/error.hpp"

namespace bmatch::oracle {

NeighborhoodGraph brute_gng(std::span<const ScaledPoint> points, std::size_t k) {
  const std::size_t n = points.size();
  NeighborhoodGraph g;
  g.n = n;
  g.k = k;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (PointId p = 0; p < n; ++p) {
    for (Wedge w : kAllWedges) {
      std::vector<PointId> wedge;
      for (PointId q = 0; q < n; ++q)
        if (q != p && wedge_membership(points[p], points[q]).contains(w)) wedge.push_back(q);
      std::vector<SqDist> dists;
      for (PointId q : wedge) dists.push_back(sq_dist(points[p], points[q]));
      std::sort(dists.begin(), dists.end());
      for (PointId q : wedge) {
        const SqDist d = sq_dist(points[p], points[q]);
        const auto strictly_closer =
            static_cast<std::size_t>(std::lower_bound(dists.begin(), dists.end(), d) - dists.begin());
        if (strictly_closer <= k - 1) adjacent[p][q] = adjacent[q][p] = true;
      }
    }
  }
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      if (adjacent[a][b]) g.edges.push_back({a, b, sq_dist(points[a], points[b])});
  for (const auto& e : g.edges) g.lengths.push_back(e.length);
  std::sort(g.lengths.begin(), g.lengths.end());
  g.lengths.erase(std::unique(g.lengths.begin(), g.lengths.end()), g.lengths.end());
  return g;
}

std::vector<std::pair<PointId, PointId>> brute_rng(std::span<const ScaledPoint> points, std::size_t k) {
  std::vector<std::pair<PointId, PointId>> out;
  const std::size_t n = points.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      const SqDist d = sq_dist(points[a], points[b]);
      std::size_t lens = 0;
      for (PointId c = 0; c < n; ++c)
        if (c != a && c != b && sq_dist(points[a], points[c]) < d && sq_dist(points[b], points[c]) < d)
          ++lens;
      if (lens <= k - 1) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

void enumerate_matchings(std::span<const ScaledPoint> points, std::vector<bool>& used,
                         std::vector<std::pair<PointId, PointId>>& current, SqDist current_max,
                         BruteBottleneck& best, bool& found) {
  PointId first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    if (!found || current_max < best.value) {
      best.value = current_max;
      best.matching = current;
      found = true;
    }
    return;
  }
  used[first] = true;
  for (PointId other = first + 1; other < used.size(); ++other) {
    if (used[other]) continue;
    used[other] = true;
    current.emplace_back(first, other);
    enumerate_matchings(points, used, current,
                        std::max(current_max, sq_dist(points[first], points[other])), best, found);
    current.pop_back();
    used[other] = false;
  }
  used[first] = false;
}

std::size_t max_matching_rec(const std::vector<std::vector<bool>>& adj, std::vector<bool>& used,
                             PointId from) {
  PointId v = from;
  while (v < used.size() && used[v]) ++v;
  if (v >= used.size()) return 0;
  used[v] = true;
  // Either v stays unmatched ...
  std::size_t best = max_matching_rec(adj, used, v + 1);
  // ... or it is matched to a later free neighbor.
  for (PointId u = v + 1; u < used.size(); ++u) {
    if (used[u] || !adj[v][u]) continue;
    used[u] = true;
    best = std::max(best, 1 + max_matching_rec(adj, used, v + 1));
    used[u] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

BruteBottleneck brute_bottleneck(std::span<const ScaledPoint> points) {
  if (points.size() % 2 != 0)
    throw Error(ErrorCode::OddPointCount, "brute bottleneck needs an even point count");
  BruteBottleneck best;
  bool found = false;
  std::vector<bool> used(points.size(), false);
  std::vector<std::pair<PointId, PointId>> current;
  enumerate_matchings(points, used, current, SqDist(0), best, found);
  return best;
}

NeighborAnswer brute_knn(std::span<const ScaledPoint> points, std::span<const PointId> members,
                         ScaledPoint q, std::size_t k) {
  std::vector<Neighbor> all;
  for (PointId id : members) all.push_back({sq_dist(q, points[id]), id});
  std::sort(all.begin(), all.end());
  NeighborAnswer ans;
  const std::size_t take = std::min(k, all.size());
  ans.witnesses.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take));
  if (take == 0) return ans;
  ans.d_max = ans.witnesses.back().dist;
  ans.truncated_ties = take < all.size() && all[take].dist == ans.d_max;
  return ans;
}

std::vector<PointId> brute_at_distances(std::span<const ScaledPoint> points,
                                        std::span<const PointId> members, ScaledPoint q,
                                        std::span<const SqDist> distances) {
  std::vector<PointId> out;
  for (PointId id : members) {
    const SqDist d = sq_dist(q, points[id]);
    if (std::find(distances.begin(), distances.end(), d) != distances.end()) out.push_back(id);
  }
  return out;
}

DeltaSet brute_delta(std::span<const ScaledPoint> points, PointId apex, Wedge w, std::size_t k) {
  std::vector<SqDist> dists;
  for (PointId q = 0; q < points.size(); ++q)
    if (q != apex && wedge_membership(points[apex], points[q]).contains(w))
      dists.push_back(sq_dist(points[apex], points[q]));
  std::sort(dists.begin(), dists.end());
  if (dists.size() > k) dists.resize(k);
  dists.erase(std::unique(dists.begin(), dists.end()), dists.end());
  return dists;
}

std::size_t brute_max_matching(std::size_t n, std::span<const std::pair<PointId, PointId>> edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : edges)
    if (a != b) adj[a][b] = adj[b][a] = true;
  std::vector<bool> used(n, false);
  return max_matching_rec(adj, used, 0);
}

}  // namespace bmatch::oracle
