#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmatch/geometry.hpp"

namespace bmatch {

/// Parses an instance: one point per line as two decimals separated by
/// whitespace, at most six fractional digits, '#' starts a comment line.
/// Values are scaled by kScale exactly. Throws Error(InvalidInput) with the
/// offending line number, or Error(DuplicatePoint) naming both lines.
std::vector<ScaledPoint> parse_instance(std::string_view text);

std::vector<ScaledPoint> read_instance_file(const std::string& path);

/// Exact decimal rendering of a scaled coordinate, six fractional digits.
std::string format_scaled(Coord value);

/// Instance text that parse_instance reads back to the same points.
std::string format_instance(std::span<const ScaledPoint> points);

enum class InstanceKind { Uniform, Grid, Cocircular, Clustered };

std::optional<InstanceKind> parse_instance_kind(std::string_view name);
std::string_view instance_kind_name(InstanceKind kind);

/// Deterministic generator for a fixed (kind, n, seed).
/// - uniform: distinct points with six-decimal coordinates in [0, 1000)
/// - grid: first n points of the unit lattice, row-major, ⌈√n⌉ columns
/// - cocircular: points with exactly equal squared distance to a common
///   center (concentric circles once one circle is exhausted)
/// - clustered: tight clusters around uniform centers
std::vector<ScaledPoint> generate_instance(InstanceKind kind, std::size_t n, std::uint64_t seed);

}  // namespace bmatch
