#include "bmatch/bmatch.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "bmatch/bottleneck.hpp"
#include "bmatch/error.hpp"
#include "bmatch/gng.hpp"
#include "bmatch/instance.hpp"
#include "bmatch/report.hpp"

struct bm_points {
  std::vector<bmatch::ScaledPoint> points;
};

struct bm_result {
  bmatch::BottleneckResult result;
};

struct bm_graph {
  bmatch::NeighborhoodGraph graph;
};

namespace {

thread_local std::string last_error;

bm_status status_of(bmatch::ErrorCode code) {
  using bmatch::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidInput: return BM_ERR_INVALID_INPUT;
    case ErrorCode::DuplicatePoint: return BM_ERR_DUPLICATE_POINT;
    case ErrorCode::OddPointCount: return BM_ERR_ODD_POINT_COUNT;
    case ErrorCode::TooFewPoints: return BM_ERR_TOO_FEW_POINTS;
    case ErrorCode::CoincidentPoints: return BM_ERR_DUPLICATE_POINT;
    case ErrorCode::NoPerfectMatching: return BM_ERR_NO_PERFECT_MATCHING;
    case ErrorCode::Internal: return BM_ERR_INTERNAL;
  }
  return BM_ERR_INTERNAL;
}

template <class F>
bm_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return BM_OK;
  } catch (const bmatch::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BM_ERR_INTERNAL;
  }
}

bm_status invalid(const char* what) {
  last_error = what;
  return BM_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

void bm_solve_options_init(bm_solve_options* options) {
  if (!options) return;
  options->k = static_cast<uint32_t>(bmatch::kDefaultNeighborhood);
  options->all_pairs = 0;
  options->lengths_only = 0;
  options->threads = 1;
}

const char* bm_last_error(void) { return last_error.c_str(); }

const char* bm_status_name(bm_status status) {
  switch (status) {
    case BM_OK: return "ok";
    case BM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BM_ERR_INVALID_INPUT: return "invalid input";
    case BM_ERR_DUPLICATE_POINT: return "duplicate point";
    case BM_ERR_ODD_POINT_COUNT: return "odd point count";
    case BM_ERR_TOO_FEW_POINTS: return "too few points";
    case BM_ERR_NO_PERFECT_MATCHING: return "no perfect matching";
    case BM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bm_string_free(char* s) { std::free(s); }

bm_status bm_points_from_file(const char* path, bm_points** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new bm_points{bmatch::read_instance_file(path)}; });
}

bm_status bm_points_from_text(const char* text, size_t length, bm_points** out) {
  if ((!text && length != 0) || !out) return invalid("null argument");
  return guarded([&] {
    *out = new bm_points{bmatch::parse_instance(std::string_view(text ? text : "", length))};
  });
}

bm_status bm_points_from_scaled(const int64_t* xy, size_t count, bm_points** out) {
  if ((!xy && count != 0) || !out) return invalid("null argument");
  return guarded([&] {
    std::vector<bmatch::ScaledPoint> pts(count);
    for (size_t i = 0; i < count; ++i) {
      pts[i] = {xy[2 * i], xy[2 * i + 1]};
      if (!bmatch::within_coordinate_bound(pts[i]))
        throw bmatch::Error(bmatch::ErrorCode::InvalidInput,
                            "point " + std::to_string(i) + " exceeds the coordinate bound");
    }
    bmatch::require_distinct(pts);
    *out = new bm_points{std::move(pts)};
  });
}

bm_status bm_points_generate(const char* kind, size_t count, uint64_t seed, bm_points** out) {
  if (!kind || !out) return invalid("null argument");
  const auto parsed = bmatch::parse_instance_kind(kind);
  if (!parsed) {
    last_error = std::string("unknown instance kind '") + kind + "'";
    return BM_ERR_INVALID_INPUT;
  }
  return guarded([&] { *out = new bm_points{bmatch::generate_instance(*parsed, count, seed)}; });
}

size_t bm_points_size(const bm_points* points) { return points ? points->points.size() : 0; }

bm_status bm_points_get(const bm_points* points, size_t index, int64_t* x, int64_t* y) {
  if (!points || !x || !y) return invalid("null argument");
  if (index >= points->points.size()) return invalid("point index out of range");
  *x = points->points[index].x;
  *y = points->points[index].y;
  return BM_OK;
}

bm_status bm_points_format(const bm_points* points, char** text) {
  if (!points || !text) return invalid("null argument");
  return guarded([&] { *text = copy_string(bmatch::format_instance(points->points)); });
}

void bm_points_free(bm_points* points) { delete points; }

bm_status bm_solve(const bm_points* points, const bm_solve_options* options, bm_result** out) {
  if (!points || !out) return invalid("null argument");
  bm_solve_options defaults;
  bm_solve_options_init(&defaults);
  const bm_solve_options& o = options ? *options : defaults;
  if (o.k == 0) return invalid("k must be positive");
  return guarded([&] {
    bmatch::SolveOptions opts;
    opts.k = o.k;
    opts.all_pairs = o.all_pairs != 0;
    opts.lengths_only = o.lengths_only != 0;
    opts.threads = o.threads == 0 ? 1 : o.threads;
    *out = new bm_result{bmatch::bottleneck_matching(points->points, opts)};
  });
}

bm_status bm_result_r_star_sq(const bm_result* result, char** decimal) {
  if (!result || !decimal) return invalid("null argument");
  return guarded([&] { *decimal = copy_string(result->result.r_star_sq.to_string()); });
}

double bm_result_r_star(const bm_result* result) {
  if (!result) return 0.0;
  return std::sqrt(static_cast<long double>(result->result.r_star_sq.value())) /
         static_cast<long double>(bmatch::kScale);
}

size_t bm_result_pair_count(const bm_result* result) { return result ? result->result.matching.size : 0; }

bm_status bm_result_pair(const bm_result* result, size_t index, uint32_t* a, uint32_t* b) {
  if (!result || !a || !b) return invalid("null argument");
  const auto pairs = result->result.matching.pairs();
  if (index >= pairs.size()) return invalid("pair index out of range");
  *a = pairs[index].first;
  *b = pairs[index].second;
  return BM_OK;
}

size_t bm_result_oracle_calls(const bm_result* result) { return result ? result->result.oracle_calls : 0; }

size_t bm_result_gng_edge_count(const bm_result* result) {
  return result ? result->result.gng_edge_count : 0;
}

bm_status bm_result_json(const bm_result* result, int include_timings, char** json) {
  if (!result || !json) return invalid("null argument");
  return guarded([&] { *json = copy_string(bmatch::result_document(result->result, include_timings != 0)); });
}

bm_status bm_render_svg(const bm_points* points, const bm_result* result, char** svg) {
  if (!points || !svg) return invalid("null argument");
  return guarded([&] {
    *svg = copy_string(bmatch::render_svg(points->points, result ? &result->result.matching : nullptr));
  });
}

void bm_result_free(bm_result* result) { delete result; }

bm_status bm_gng_build(const bm_points* points, uint32_t k, int lengths_only, bm_graph** out) {
  if (!points || !out) return invalid("null argument");
  return guarded([&] {
    bmatch::GngOptions opts;
    opts.k = k;
    opts.lengths_only = lengths_only != 0;
    *out = new bm_graph{bmatch::build_gng(points->points, opts)};
  });
}

size_t bm_graph_edge_count(const bm_graph* graph) { return graph ? graph->graph.edges.size() : 0; }

size_t bm_graph_length_count(const bm_graph* graph) { return graph ? graph->graph.lengths.size() : 0; }

bm_status bm_graph_edge(const bm_graph* graph, size_t index, uint32_t* a, uint32_t* b) {
  if (!graph || !a || !b) return invalid("null argument");
  if (index >= graph->graph.edges.size()) return invalid("edge index out of range");
  *a = graph->graph.edges[index].a;
  *b = graph->graph.edges[index].b;
  return BM_OK;
}

bm_status bm_graph_listing(const bm_graph* graph, char** text) {
  if (!graph || !text) return invalid("null argument");
  return guarded([&] { *text = copy_string(bmatch::gng_listing(graph->graph)); });
}

void bm_graph_free(bm_graph* graph) { delete graph; }

bm_status bm_bench_csv(const size_t* sizes, size_t size_count, const char* kinds, size_t repetitions,
                       uint64_t seed, int dense_decision, uint32_t threads, char** csv) {
  if ((!sizes && size_count != 0) || !kinds || !csv) return invalid("null argument");
  bmatch::BenchConfig config;
  config.sizes.assign(sizes, sizes + size_count);
  config.repetitions = repetitions;
  config.seed = seed;
  config.dense_decision = dense_decision != 0;
  config.threads = threads == 0 ? 1 : threads;
  std::string_view list(kinds);
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    const auto kind = bmatch::parse_instance_kind(name);
    if (!kind) {
      last_error = "unknown instance kind '" + std::string(name) + "'";
      return BM_ERR_INVALID_INPUT;
    }
    config.kinds.push_back(*kind);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
  }
  return guarded([&] { *csv = copy_string(bmatch::bench_csv(bmatch::run_bench(config))); });
}

}  // extern "C"
