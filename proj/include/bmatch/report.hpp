#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmatch/bottleneck.hpp"
#include "bmatch/gng.hpp"
#include "bmatch/instance.hpp"

namespace bmatch {

/// JSON result document. r_star_sq is the authoritative decimal string;
/// r_star is a derived display value in input units. Timings are included
/// only on request so that the default output is reproducible byte for byte.
std::string result_document(const BottleneckResult& result, bool include_timings);

/// Sorted "a b sqdist" lines, or one squared length per line.
std::string gng_listing(const NeighborhoodGraph& graph);

/// Static picture: one <circle> per point, one <line> per matched pair.
std::string render_svg(std::span<const ScaledPoint> points, const Matching* matching);

struct BenchRow {
  std::size_t n = 0;
  InstanceKind kind = InstanceKind::Uniform;
  std::uint64_t seed = 0;
  double gng_build_ms = 0.0;
  double search_ms = 0.0;
  std::size_t oracle_calls = 0;
  std::optional<double> dense_decision_ms;
  std::size_t edges_sparse = 0;
  std::size_t edges_dense = 0;
  std::size_t candidates = 0;
  SqDist r_star_sq;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<InstanceKind> kinds;
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  bool dense_decision = false;
  unsigned threads = 1;
};

/// One row per (size, kind, repetition); repetition r uses seed + r.
std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace bmatch
