#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bmatch/error.hpp"
#include "bmatch/geometry.hpp"

using namespace bmatch;

namespace {

// Angle-based reference for wedge membership, valid away from boundaries.
int interior_wedge(Coord dx, Coord dy) {
  double deg = std::atan2(static_cast<double>(dy), static_cast<double>(dx)) * 180.0 / M_PI;
  if (deg < 0) deg += 360.0;
  return static_cast<int>(deg / 60.0) + 1;
}

bool on_boundary_line(Coord dx, Coord dy) {
  const __int128 x = dx, y = dy;
  return dy == 0 || 3 * x * x == y * y;
}

}  // namespace

TEST_CASE("sq_dist examples") {
  CHECK(sq_dist({0, 0}, {3, 4}) == SqDist(25));
  CHECK(sq_dist({1, 1}, {1, 1}) == SqDist(0));
  CHECK(sq_dist({-2, 1}, {1, -3}) == SqDist(25));
}

TEST_CASE("cmp_dist examples") {
  CHECK(cmp_dist({0, 0}, {3, 4}, {5, 0}) == std::strong_ordering::equal);
  CHECK(cmp_dist({0, 0}, {1, 0}, {2, 0}) == std::strong_ordering::less);
  CHECK(cmp_dist({1, 1}, {1, 2}, {4, 1}) == std::strong_ordering::less);
}

TEST_CASE("wedge membership examples") {
  CHECK(wedge_membership({0, 0}, {1, 0}).to_vector() == std::vector{Wedge::W1, Wedge::W6});
  CHECK(wedge_membership({0, 0}, {1, 1}).to_vector() == std::vector{Wedge::W1});
  CHECK(wedge_membership({0, 0}, {0, 1}).to_vector() == std::vector{Wedge::W2});
  CHECK(wedge_membership({0, 0}, {-1, 0}).to_vector() == std::vector{Wedge::W3, Wedge::W4});
  CHECK(wedge_membership({0, 0}, {0, -1}).to_vector() == std::vector{Wedge::W5});
  CHECK_THROWS_AS(wedge_membership({2, 3}, {2, 3}), Error);
}

TEST_CASE("wedge key examples") {
  CHECK(in_wedge(Wedge::W1, {0, 0}, {2, 1}));
  CHECK_FALSE(in_wedge(Wedge::W1, {0, 0}, {-1, 5}));
  CHECK(wedge_keys(Wedge::W1, {-1, 5}).v < wedge_keys(Wedge::W1, {0, 0}).v);
  CHECK(in_wedge(Wedge::W4, {0, 0}, {-1, 0}));
  CHECK(in_wedge(Wedge::W3, {0, 0}, {-1, 0}));
}

TEST_CASE("sign of sqrt(3) a + b on degenerate combinations") {
  CHECK(sign_root3_plus(0, 0) == 0);
  CHECK(sign_root3_plus(0, 5) == 1);
  CHECK(sign_root3_plus(0, -5) == -1);
  CHECK(sign_root3_plus(3, 0) == 1);
  CHECK(sign_root3_plus(-3, 0) == -1);
  CHECK(sign_root3_plus(1, -1) == 1);   // 1.732 - 1
  CHECK(sign_root3_plus(1, -2) == -1);  // 1.732 - 2
  CHECK(sign_root3_plus(-1, 2) == 1);
  CHECK(sign_root3_plus(-1, 1) == -1);
  // Closest integer approach to the sqrt(3) line: 1351^2 * 3 vs 780^2 * 9.
  CHECK(sign_root3_plus(780, -1351) == -1);
  CHECK(sign_root3_plus(-780, 1351) == 1);
  // Near the coordinate bound the comparison stays exact.
  const __int128 big = __int128{1} << 41;
  CHECK(sign_root3_plus(big, -big) == 1);
  CHECK(sign_root3_plus(-big, 2 * big) == 1);
}

TEST_CASE("wedge membership is nonempty and doubled exactly on boundary lines") {
  std::mt19937_64 rng(11);
  for (Coord range : {Coord{3}, Coord{50}, Coord{1} << 40}) {
    std::uniform_int_distribution<Coord> c(-range, range);
    for (int t = 0; t < 20000; ++t) {
      const ScaledPoint p{c(rng), c(rng)}, q{c(rng), c(rng)};
      if (p == q) continue;
      const WedgeSet ws = wedge_membership(p, q);
      REQUIRE(ws.size() >= 1);
      CHECK((ws.size() == 2) == on_boundary_line(q.x - p.x, q.y - p.y));
      if (ws.size() == 1 && range <= 50) {
        CHECK(ws.contains(static_cast<Wedge>(interior_wedge(q.x - p.x, q.y - p.y))));
      }
    }
  }
}

TEST_CASE("key-based membership agrees with wedge_membership on 10^6 pairs") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<Coord> wide(-kMaxCoord, kMaxCoord);
  std::uniform_int_distribution<Coord> narrow(-4, 4);
  std::size_t mismatches = 0;
  for (int t = 0; t < 1'000'000; ++t) {
    auto& dist = (t % 4 == 0) ? narrow : wide;
    const ScaledPoint p{dist(rng), dist(rng)}, q{dist(rng), dist(rng)};
    if (p == q) continue;
    const WedgeSet ws = wedge_membership(p, q);
    for (Wedge w : kAllWedges)
      if (in_wedge(w, p, q) != ws.contains(w)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("sq_dist is symmetric and exact at the coordinate bound") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Coord> c(-kMaxCoord, kMaxCoord);
  for (int t = 0; t < 10000; ++t) {
    const ScaledPoint p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)};
    CHECK(sq_dist(p, q) == sq_dist(q, p));
    CHECK(cmp_dist(p, q, r) == (sq_dist(p, q) <=> sq_dist(p, r)));
  }
  const ScaledPoint lo{-kMaxCoord, -kMaxCoord}, hi{kMaxCoord, kMaxCoord};
  // (2^41)^2 * 2 = 2^83
  CHECK(sq_dist(lo, hi) == SqDist(SqDist::Rep{1} << 83));
}

TEST_CASE("SqDist decimal rendering round-trips") {
  CHECK(SqDist(0).to_string() == "0");
  CHECK(SqDist(1'000'000'000'000).to_string() == "1000000000000");
  const SqDist big(SqDist::Rep{1} << 83);
  CHECK(big.to_string() == "9671406556917033397649408");
  SqDist parsed;
  REQUIRE(parse_sq_dist(big.to_string(), parsed));
  CHECK(parsed == big);
  CHECK_FALSE(parse_sq_dist("12a", parsed));
  CHECK_FALSE(parse_sq_dist("", parsed));
}

TEST_CASE("duplicate detection names both indices") {
  const std::vector<ScaledPoint> pts{{0, 0}, {1, 2}, {3, 3}, {1, 2}};
  try {
    require_distinct(pts);
    FAIL("expected a duplicate error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePoint);
    CHECK(std::string(e.what()).find("1 and 3") != std::string::npos);
  }
}
