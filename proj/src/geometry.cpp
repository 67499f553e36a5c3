#include "bmatch/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "bmatch/error.hpp"

namespace bmatch {

std::string SqDist::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  Rep v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool parse_sq_dist(std::string_view text, SqDist& out) {
  if (text.empty()) return false;
  SqDist::Rep v = 0;
  const SqDist::Rep limit = SqDist::max().value() / 10;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    if (v > limit) return false;
    SqDist::Rep next = v * 10 + static_cast<unsigned>(c - '0');
    if (next < v * 10) return false;
    v = next;
  }
  out = SqDist(v);
  return true;
}

bool within_coordinate_bound(ScaledPoint p) {
  return p.x >= -kMaxCoord && p.x <= kMaxCoord && p.y >= -kMaxCoord && p.y <= kMaxCoord;
}

SqDist sq_dist(ScaledPoint p, ScaledPoint q) noexcept {
  assert(within_coordinate_bound(p) && within_coordinate_bound(q));
  const __int128 dx = static_cast<__int128>(q.x) - p.x;
  const __int128 dy = static_cast<__int128>(q.y) - p.y;
  return SqDist(static_cast<SqDist::Rep>(dx * dx + dy * dy));
}

std::strong_ordering cmp_dist(ScaledPoint p, ScaledPoint a, ScaledPoint b) noexcept {
  return sq_dist(p, a) <=> sq_dist(p, b);
}

int sign_root3_plus(__int128 a, __int128 b) noexcept {
  // Operands stay below 2^42 in magnitude, so 3a^2 fits comfortably.
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  const __int128 lhs = 3 * a * a;
  const __int128 rhs = b * b;
  if (lhs == rhs) return 0;
  // a and b have opposite signs; the larger magnitude wins.
  if (a > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

int WedgeSet::size() const { return std::popcount(bits_); }

std::vector<Wedge> WedgeSet::to_vector() const {
  std::vector<Wedge> out;
  for (Wedge w : kAllWedges)
    if (contains(w)) out.push_back(w);
  return out;
}

namespace {

// Signs of the three boundary functionals at d = q - p:
//   flat  = dy, rising = sqrt3*dx - dy, falling = sqrt3*dx + dy.
struct BoundarySigns {
  int flat;
  int rising;
  int falling;
};

BoundarySigns boundary_signs(__int128 dx, __int128 dy) {
  return {dy > 0 ? 1 : (dy < 0 ? -1 : 0), sign_root3_plus(dx, -dy), sign_root3_plus(dx, dy)};
}

bool wedge_contains(Wedge w, const BoundarySigns& s) {
  switch (w) {
    case Wedge::W1: return s.flat >= 0 && s.rising >= 0;
    case Wedge::W2: return s.rising <= 0 && s.falling >= 0;
    case Wedge::W3: return s.flat >= 0 && s.falling <= 0;
    case Wedge::W4: return s.flat <= 0 && s.rising <= 0;
    case Wedge::W5: return s.rising >= 0 && s.falling <= 0;
    case Wedge::W6: return s.flat <= 0 && s.falling >= 0;
  }
  return false;
}

}  // namespace

WedgeSet wedge_membership(ScaledPoint p, ScaledPoint q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "wedge membership of coincident points");
  const auto s = boundary_signs(static_cast<__int128>(q.x) - p.x, static_cast<__int128>(q.y) - p.y);
  WedgeSet out;
  for (Wedge w : kAllWedges)
    if (wedge_contains(w, s)) out.insert(w);
  return out;
}

WedgeKeys wedge_keys(Wedge w, ScaledPoint p) noexcept {
  // Each wedge is the intersection of two closed half-planes through the
  // origin; u and v are their inward normals applied to p.
  const WedgeKey flat{0, p.y};
  const WedgeKey rising{p.x, -p.y};
  const WedgeKey falling{p.x, p.y};
  auto neg = [](WedgeKey k) { return WedgeKey{-k.root3, -k.unit}; };
  switch (w) {
    case Wedge::W1: return {flat, rising};
    case Wedge::W2: return {neg(rising), falling};
    case Wedge::W3: return {flat, neg(falling)};
    case Wedge::W4: return {neg(flat), neg(rising)};
    case Wedge::W5: return {rising, neg(falling)};
    case Wedge::W6: return {neg(flat), falling};
  }
  return {};
}

bool in_wedge(Wedge w, ScaledPoint apex, ScaledPoint q) noexcept {
  const auto a = wedge_keys(w, apex);
  const auto b = wedge_keys(w, q);
  return b.u >= a.u && b.v >= a.v;
}

void require_distinct(std::span<const ScaledPoint> points) {
  std::vector<PointId> order(points.size());
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return points[a] != points[b] ? points[a] < points[b] : a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i]] == points[order[i - 1]]) {
      throw Error(ErrorCode::DuplicatePoint,
                  "duplicate point: indices " + std::to_string(order[i - 1]) + " and " +
                      std::to_string(order[i]));
    }
  }
}

}  // namespace bmatch
