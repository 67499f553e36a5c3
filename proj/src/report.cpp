#include "bmatch/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "bmatch/error.hpp"
#include "bmatch/matching.hpp"

namespace bmatch {

namespace {

std::string source_name(CandidateSource s) {
  return s == CandidateSource::AllPairs ? "all_pairs" : "gng_lengths";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string result_document(const BottleneckResult& result, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["n"] = result.n;
  doc["k"] = result.k;
  doc["candidates"] = source_name(result.source);
  doc["r_star_sq"] = result.r_star_sq.to_string();
  doc["r_star"] = static_cast<double>(std::sqrt(static_cast<long double>(result.r_star_sq.value())) /
                                      static_cast<long double>(kScale));
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : result.matching.pairs()) pairs.push_back({a, b});
  doc["matching"] = std::move(pairs);
  doc["gng_edge_count"] = result.gng_edge_count;
  doc["candidate_count"] = result.candidate_count;
  doc["oracle_calls"] = result.oracle_calls;
  if (include_timings) {
    doc["timings"] = {{"gng_build_ms", result.build_ms}, {"search_ms", result.search_ms}};
  }
  return doc.dump(2) + "\n";
}

std::string gng_listing(const NeighborhoodGraph& graph) {
  std::string out;
  if (graph.lengths_only) {
    for (const SqDist& d : graph.lengths) out += d.to_string() + "\n";
    return out;
  }
  for (const Edge& e : graph.edges)
    out += std::to_string(e.a) + " " + std::to_string(e.b) + " " + e.length.to_string() + "\n";
  return out;
}

std::string render_svg(std::span<const ScaledPoint> points, const Matching* matching) {
  Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!points.empty()) {
    min_x = max_x = points.front().x;
    min_y = max_y = points.front().y;
  }
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double scale = static_cast<double>(kScale);
  const double span = std::max({static_cast<double>(max_x - min_x) / scale,
                                static_cast<double>(max_y - min_y) / scale, 1e-6});
  const double pad = span * 0.05;
  const double radius = span * 0.006;
  auto sx = [&](Coord x) { return fixed(static_cast<double>(x) / scale, 6); };
  auto sy = [&](Coord y) { return fixed(-static_cast<double>(y) / scale, 6); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << fixed(static_cast<double>(min_x) / scale - pad, 6) << ' '
      << fixed(-static_cast<double>(max_y) / scale - pad, 6) << ' ' << fixed(span + 2 * pad, 6) << ' '
      << fixed(span + 2 * pad, 6) << "\">\n";
  if (matching) {
    svg << "<g stroke=\"#c0392b\" stroke-width=\"" << fixed(radius * 0.6, 6) << "\">\n";
    for (const auto& [a, b] : matching->pairs()) {
      svg << "<line x1=\"" << sx(points[a].x) << "\" y1=\"" << sy(points[a].y) << "\" x2=\""
          << sx(points[b].x) << "\" y2=\"" << sy(points[b].y) << "\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "<g fill=\"#1f3a5f\">\n";
  for (const auto& p : points)
    svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << fixed(radius, 6) << "\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty() || config.kinds.empty())
    throw Error(ErrorCode::InvalidInput, "bench needs at least one size and one kind");
  for (std::size_t n : config.sizes)
    if (n < 2 || n % 2 != 0)
      throw Error(ErrorCode::InvalidInput, "bench sizes must be even and at least 2, got " + std::to_string(n));

  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    for (InstanceKind kind : config.kinds) {
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        BenchRow row;
        row.n = n;
        row.kind = kind;
        row.seed = config.seed + rep;
        const auto points = generate_instance(kind, n, row.seed);
        SolveOptions options;
        options.threads = config.threads;
        const BottleneckResult result = bottleneck_matching(points, options);
        row.gng_build_ms = result.build_ms;
        row.search_ms = result.search_ms;
        row.oracle_calls = result.oracle_calls;
        row.edges_sparse = result.gng_edge_count;
        row.candidates = result.candidate_count;
        row.r_star_sq = result.r_star_sq;
        row.edges_dense = count_pairs_within(points, result.r_star_sq);
        if (config.dense_decision) {
          const auto start = std::chrono::steady_clock::now();
          const Decision d = has_perfect_matching(points, result.r_star_sq);
          row.dense_decision_ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          if (!d.perfect)
            throw Error(ErrorCode::Internal, "dense decision rejected the optimal threshold");
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out =
      "n,kind,gng_build_ms,search_ms,oracle_calls,dense_decision_ms,edges_sparse,edges_dense\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::string(instance_kind_name(r.kind)) + "," +
           fixed(r.gng_build_ms, 3) + "," + fixed(r.search_ms, 3) + "," + std::to_string(r.oracle_calls) +
           "," + (r.dense_decision_ms ? fixed(*r.dense_decision_ms, 3) : std::string()) + "," +
           std::to_string(r.edges_sparse) + "," + std::to_string(r.edges_dense) + "\n";
  }
  return out;
}

}  // namespace bmatch
