#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bmatch {

using Coord = std::int64_t;
using PointId = std::uint32_t;

/// Input decimals are multiplied by this factor and stored as integers.
inline constexpr Coord kScale = 1'000'000;

/// Largest admissible |x| or |y| after scaling. Coordinate differences then
/// stay below 2^41, so squared distances stay below 2^83.
inline constexpr Coord kMaxCoord = Coord{1} << 40;

struct ScaledPoint {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const ScaledPoint&, const ScaledPoint&) = default;
  friend constexpr auto operator<=>(const ScaledPoint&, const ScaledPoint&) = default;
};

/// Exact squared Euclidean distance in scaled units.
class SqDist {
 public:
  using Rep = unsigned __int128;

  constexpr SqDist() = default;
  constexpr explicit SqDist(Rep value) : value_(value) {}

  constexpr Rep value() const { return value_; }

  static constexpr SqDist max() { return SqDist(~Rep{0}); }

  /// Decimal rendering of the full 128-bit value.
  std::string to_string() const;
  double to_double() const { return static_cast<double>(value_); }

  friend constexpr bool operator==(SqDist, SqDist) = default;
  friend constexpr auto operator<=>(SqDist, SqDist) = default;

 private:
  Rep value_ = 0;
};

/// Parses a non-negative decimal integer as produced by SqDist::to_string.
/// Returns false on malformed input or overflow.
bool parse_sq_dist(std::string_view text, SqDist& out);

bool within_coordinate_bound(ScaledPoint p);

SqDist sq_dist(ScaledPoint p, ScaledPoint q) noexcept;

/// Orders dist(p, a) against dist(p, b) exactly.
std::strong_ordering cmp_dist(ScaledPoint p, ScaledPoint a, ScaledPoint b) noexcept;

/// The six closed 60-degree sectors; W_i spans [(i-1)*60, i*60] degrees.
enum class Wedge : std::uint8_t { W1 = 1, W2, W3, W4, W5, W6 };

inline constexpr std::array<Wedge, 6> kAllWedges = {Wedge::W1, Wedge::W2, Wedge::W3,
                                                    Wedge::W4, Wedge::W5, Wedge::W6};

constexpr int wedge_number(Wedge w) { return static_cast<int>(w); }

/// Small set of wedge ids.
class WedgeSet {
 public:
  constexpr void insert(Wedge w) { bits_ |= static_cast<std::uint8_t>(1u << wedge_number(w)); }
  constexpr bool contains(Wedge w) const { return (bits_ >> wedge_number(w)) & 1u; }
  int size() const;
  std::vector<Wedge> to_vector() const;

  friend constexpr bool operator==(WedgeSet, WedgeSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Every i with q in p + W_i. Throws Error(CoincidentPoints) when p == q.
WedgeSet wedge_membership(ScaledPoint p, ScaledPoint q);

/// Sign of sqrt(3) * a + b, computed without floating point.
int sign_root3_plus(__int128 a, __int128 b) noexcept;

/// A value of the form root3 * sqrt(3) + unit. Ordering is exact.
struct WedgeKey {
  Coord root3 = 0;
  Coord unit = 0;

  friend constexpr bool operator==(const WedgeKey&, const WedgeKey&) = default;
  friend std::strong_ordering operator<=>(const WedgeKey& a, const WedgeKey& b) noexcept {
    int s = sign_root3_plus(static_cast<__int128>(a.root3) - b.root3,
                            static_cast<__int128>(a.unit) - b.unit);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

/// Linear keys (u, v) of a point for wedge w such that
/// q in p + W_w  iff  u(q) >= u(p) and v(q) >= v(p).
struct WedgeKeys {
  WedgeKey u;
  WedgeKey v;
};

WedgeKeys wedge_keys(Wedge w, ScaledPoint p) noexcept;

/// Membership test through the keys; agrees with wedge_membership for p != q.
bool in_wedge(Wedge w, ScaledPoint apex, ScaledPoint q) noexcept;

/// Throws Error(DuplicatePoint) naming the first repeated pair of indices.
void require_distinct(std::span<const ScaledPoint> points);

}  // namespace bmatch
