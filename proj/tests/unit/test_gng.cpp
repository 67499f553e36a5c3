#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "bmatch/error.hpp"
#include "bmatch/gng.hpp"
#include "bmatch/oracles.hpp"
#include "support.hpp"

using namespace bmatch;
using testing::edge_pairs;

namespace {

using Pairs = std::vector<std::pair<PointId, PointId>>;

std::vector<ScaledPoint> corpus_instance(std::mt19937_64& rng, int family, std::size_t n) {
  switch (family % 3) {
    case 0: return testing::random_points(rng, n, 0, 1'000'000);
    case 1: return testing::lattice_points(rng, n, static_cast<Coord>(std::sqrt(2.0 * n)) + 2);
    default: return testing::cocircular_cluster(rng, n);
  }
}

std::vector<PointId> sorted(std::vector<PointId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Minimum bottleneck over perfect matchings that use only the given edges.
SqDist restricted_bottleneck(std::span<const ScaledPoint> pts, const Pairs& edges) {
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) allowed[a][b] = allowed[b][a] = true;
  std::vector<bool> used(n, false);
  SqDist best = SqDist::max();
  std::function<void(SqDist)> go = [&](SqDist cur) {
    if (cur >= best) return;
    PointId first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      best = cur;
      return;
    }
    used[first] = true;
    for (PointId j = first + 1; j < n; ++j) {
      if (used[j] || !allowed[first][j]) continue;
      used[j] = true;
      go(std::max(cur, sq_dist(pts[first], pts[j])));
      used[j] = false;
    }
    used[first] = false;
  };
  go(SqDist(0));
  return best;
}

}  // namespace

TEST_CASE("round1 examples") {
  const std::vector<ScaledPoint> pts{{0, 0}, {1, 0}, {5, 0}, {3, 0}, {4, 0}};
  const WedgeRangeIndex idx(pts, Wedge::W1);
  CHECK(round1_distances(idx, 0, 2) == DeltaSet{SqDist(1), SqDist(9)});
  CHECK(round1_distances(idx, 2, 2).empty());

  // Five lattice points at squared distance 65^2 inside W1.
  const std::vector<ScaledPoint> tied{{0, 0}, {65, 0}, {63, 16}, {60, 25}, {56, 33}, {52, 39}};
  const WedgeRangeIndex tidx(tied, Wedge::W1);
  CHECK(round1_distances(tidx, 0, 2) == DeltaSet{SqDist(4225)});
}

TEST_CASE("round2 examples") {
  const std::vector<ScaledPoint> tie{{0, 0}, {4, 3}, {5, 0}};
  const WedgeRangeIndex tidx(tie, Wedge::W1);
  const auto delta = round1_distances(tidx, 0, 1);
  CHECK(delta == DeltaSet{SqDist(25)});
  CHECK(sorted(round2_edges(tidx, 0, delta)) == std::vector<PointId>{1, 2});

  const std::vector<ScaledPoint> line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const WedgeRangeIndex lidx(line, Wedge::W1);
  CHECK(sorted(round2_edges(lidx, 0, round1_distances(lidx, 0, 2))) == std::vector<PointId>{1, 2});
  CHECK(round2_edges(lidx, 0, DeltaSet{}).empty());
}

TEST_CASE("build_gng examples") {
  SUBCASE("unit square is complete") {
    const std::vector<ScaledPoint> sq{{0, 0}, {kScale, 0}, {0, kScale}, {kScale, kScale}};
    const auto g = build_gng(sq);
    CHECK(g.edges.size() == 6);
  }
  SUBCASE("collinear with k = 1") {
    const std::vector<ScaledPoint> line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    GngOptions o;
    o.k = 1;
    CHECK(edge_pairs(build_gng(line, o)) == Pairs{{0, 1}, {1, 2}, {2, 3}});
  }
  SUBCASE("tied cluster exceeds k") {
    const std::vector<ScaledPoint> pts{{0, 0}, {65, 0}, {63, 16}, {60, 25}, {56, 33}, {52, 39}, {1, 0}};
    GngOptions o;
    o.k = 2;
    const auto g = build_gng(pts, o);
    std::size_t incident = 0;
    for (const auto& e : g.edges) incident += (e.a == 0);
    CHECK(incident == 6);
    CHECK(sorted(round2_edges(WedgeRangeIndex(pts, Wedge::W1), 0,
                              round1_distances(WedgeRangeIndex(pts, Wedge::W1), 0, 2))) ==
          std::vector<PointId>{1, 2, 3, 4, 5, 6});
  }
}

TEST_CASE("build_gng errors") {
  const std::vector<ScaledPoint> one{{0, 0}};
  CHECK_THROWS_AS(build_gng(one), Error);
  const std::vector<ScaledPoint> dup{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(build_gng(dup), Error);
  const std::vector<ScaledPoint> two{{0, 0}, {1, 1}};
  GngOptions o;
  o.k = 0;
  CHECK_THROWS_AS(build_gng(two, o), Error);
}

TEST_CASE("definitional equivalence, round-1 distances, and lengths-only equality") {
  std::mt19937_64 rng(41);
  std::size_t edge_failures = 0, length_failures = 0, delta_failures = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 80;
    const auto pts = corpus_instance(rng, t, n);
    for (std::size_t k : {1u, 2u, 3u, 17u}) {
      GngOptions o;
      o.k = k;
      const auto g = build_gng(pts, o);
      const auto want = oracle::brute_gng(pts, k);
      if (edge_pairs(g) != edge_pairs(want)) ++edge_failures;
      o.lengths_only = true;
      if (build_gng(pts, o).lengths != g.lengths) ++length_failures;
      if (g.lengths != distinct_lengths(g.edges)) ++length_failures;
    }
    for (Wedge w : kAllWedges) {
      const WedgeRangeIndex idx(pts, w);
      for (PointId p = 0; p < n; ++p)
        if (round1_distances(idx, p, 3) != oracle::brute_delta(pts, p, w, 3)) ++delta_failures;
    }
  }
  CHECK(edge_failures == 0);
  CHECK(length_failures == 0);
  CHECK(delta_failures == 0);
}

TEST_CASE("general-position degree bound and fast path") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5; ++t) {
    const std::size_t n = 500;
    const auto pts = testing::random_points(rng, n, 0, 1'000'000'000);
    // Verify that no point sees two others at equal distance.
    bool ties = false;
    for (PointId p = 0; p < n && !ties; ++p) {
      std::vector<SqDist> d;
      for (PointId q = 0; q < n; ++q)
        if (q != p) d.push_back(sq_dist(pts[p], pts[q]));
      std::sort(d.begin(), d.end());
      ties = std::adjacent_find(d.begin(), d.end()) != d.end();
    }
    if (ties) continue;
    GngOptions o;
    const auto g = build_gng(pts, o);
    CHECK(g.edges.size() <= 6 * 17 * n);
    for (Wedge w : kAllWedges) {
      const WedgeRangeIndex idx(pts, w);
      for (PointId p = 0; p < n; p += 5) CHECK(round2_edges(idx, p, round1_distances(idx, p, 17)).size() <= 17);
    }
    o.assume_general_position = true;
    CHECK(edge_pairs(build_gng(pts, o)) == edge_pairs(g));
  }
}

TEST_CASE("threaded build is identical to the sequential one") {
  std::mt19937_64 rng(43);
  const auto pts = testing::lattice_points(rng, 2000, 60);
  GngOptions o;
  const auto seq = build_gng(pts, o);
  o.threads = 4;
  const auto par = build_gng(pts, o);
  CHECK(seq.edges == par.edges);
  CHECK(seq.lengths == par.lengths);
}

TEST_CASE("relative neighborhood graph is contained in the GNG") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 30; ++t) {
    const auto pts = corpus_instance(rng, t, 10 + rng() % 60);
    const auto g = edge_pairs(build_gng(pts));
    for (auto e : oracle::brute_rng(pts, 17)) CHECK(std::binary_search(g.begin(), g.end(), e));
  }
}

TEST_CASE("bottleneck containment for small even sets") {
  std::mt19937_64 rng(45);
  std::size_t failures = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 * (1 + rng() % 6);
    const auto pts = corpus_instance(rng, t, n);
    const auto g = build_gng(pts);
    if (restricted_bottleneck(pts, edge_pairs(g)) != oracle::brute_bottleneck(pts).value) ++failures;
  }
  CHECK(failures == 0);
}
