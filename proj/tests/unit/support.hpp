#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bmatch/geometry.hpp"
#include "bmatch/gng.hpp"

namespace bmatch::testing {

inline std::vector<ScaledPoint> random_points(std::mt19937_64& rng, std::size_t n, Coord lo, Coord hi) {
  std::uniform_int_distribution<Coord> coord(lo, hi);
  std::set<ScaledPoint> seen;
  std::vector<ScaledPoint> out;
  while (out.size() < n) {
    ScaledPoint p{coord(rng), coord(rng)};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

/// Random subset of a small lattice: dense in repeated distances.
inline std::vector<ScaledPoint> lattice_points(std::mt19937_64& rng, std::size_t n, Coord side) {
  return random_points(rng, n, 0, side - 1);
}

/// Points on a few circles around shared centers, plus the centers.
inline std::vector<ScaledPoint> cocircular_cluster(std::mt19937_64& rng, std::size_t n) {
  // x^2 + y^2 = 5^2 * 13^2 has 4 * 9 = 36 lattice solutions.
  static const std::vector<std::pair<Coord, Coord>> kBase = [] {
    std::vector<std::pair<Coord, Coord>> pts;
    for (Coord x = -65; x <= 65; ++x)
      for (Coord y = -65; y <= 65; ++y)
        if (x * x + y * y == 4225) pts.emplace_back(x, y);
    return pts;
  }();
  std::set<ScaledPoint> seen;
  std::vector<ScaledPoint> out;
  std::uniform_int_distribution<Coord> center(-200, 200);
  std::uniform_int_distribution<std::size_t> pick(0, kBase.size() - 1);
  while (out.size() < n) {
    const ScaledPoint c{center(rng), center(rng)};
    if (seen.insert(c).second) out.push_back(c);
    for (int i = 0; i < 12 && out.size() < n; ++i) {
      const auto& [dx, dy] = kBase[pick(rng)];
      const ScaledPoint p{c.x + dx, c.y + dy};
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

inline std::vector<std::pair<PointId, PointId>> edge_pairs(const NeighborhoodGraph& g) {
  std::vector<std::pair<PointId, PointId>> out;
  for (const auto& e : g.edges) out.emplace_back(e.a, e.b);
  return out;
}

}  // namespace bmatch::testing
