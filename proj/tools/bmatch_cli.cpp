// Command-line front end. Talks to the solver only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmatch/bmatch.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int exit_code(bm_status s) {
  switch (s) {
    case BM_OK: return 0;
    case BM_ERR_NO_PERFECT_MATCHING:
    case BM_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int report(bm_status s) {
  std::cerr << "error: " << bm_status_name(s) << ": " << bm_last_error() << "\n";
  return exit_code(s);
}

struct PointsDeleter { void operator()(bm_points* p) const { bm_points_free(p); } };
struct ResultDeleter { void operator()(bm_result* r) const { bm_result_free(r); } };
struct GraphDeleter { void operator()(bm_graph* g) const { bm_graph_free(g); } };
struct StringDeleter { void operator()(char* s) const { bm_string_free(s); } };
using PointsPtr = std::unique_ptr<bm_points, PointsDeleter>;
using ResultPtr = std::unique_ptr<bm_result, ResultDeleter>;
using GraphPtr = std::unique_ptr<bm_graph, GraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct MatchArgs {
  std::string input;
  uint32_t k = 17;
  bool all_pairs = false;
  bool lengths_only = false;
  bool timings = false;
  uint32_t threads = 1;
  std::string svg;
};

int cmd_match(const MatchArgs& args) {
  bm_points* raw = nullptr;
  if (auto s = bm_points_from_file(args.input.c_str(), &raw); s != BM_OK) return report(s);
  PointsPtr points(raw);

  bm_solve_options opts;
  bm_solve_options_init(&opts);
  opts.k = args.k;
  opts.all_pairs = args.all_pairs;
  opts.lengths_only = args.lengths_only;
  opts.threads = args.threads;
  bm_result* res_raw = nullptr;
  if (auto s = bm_solve(points.get(), &opts, &res_raw); s != BM_OK) return report(s);
  ResultPtr result(res_raw);

  char* json = nullptr;
  if (auto s = bm_result_json(result.get(), args.timings, &json); s != BM_OK) return report(s);
  StringPtr json_owner(json);
  std::cout << json;

  if (!args.svg.empty()) {
    char* svg = nullptr;
    if (auto s = bm_render_svg(points.get(), result.get(), &svg); s != BM_OK) return report(s);
    StringPtr svg_owner(svg);
    std::ofstream out(args.svg, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << args.svg << "\n";
      return kExitInput;
    }
    out << svg;
  }
  return 0;
}

int cmd_gng(const std::string& input, uint32_t k, bool lengths_only) {
  bm_points* raw = nullptr;
  if (auto s = bm_points_from_file(input.c_str(), &raw); s != BM_OK) return report(s);
  PointsPtr points(raw);
  bm_graph* g_raw = nullptr;
  if (auto s = bm_gng_build(points.get(), k, lengths_only, &g_raw); s != BM_OK) return report(s);
  GraphPtr graph(g_raw);
  char* text = nullptr;
  if (auto s = bm_graph_listing(graph.get(), &text); s != BM_OK) return report(s);
  StringPtr owner(text);
  std::cout << text;
  return 0;
}

int cmd_gen(const std::string& kind, size_t n, uint64_t seed) {
  bm_points* raw = nullptr;
  if (auto s = bm_points_generate(kind.c_str(), n, seed, &raw); s != BM_OK) return report(s);
  PointsPtr points(raw);
  char* text = nullptr;
  if (auto s = bm_points_format(points.get(), &text); s != BM_OK) return report(s);
  StringPtr owner(text);
  std::cout << text;
  return 0;
}

struct BenchArgs {
  std::vector<size_t> sizes{1000};
  std::vector<std::string> kinds{"uniform"};
  size_t repetitions = 1;
  uint64_t seed = 1;
  bool dense = false;
  uint32_t threads = 1;
};

int cmd_bench(const BenchArgs& args) {
  std::string kinds;
  for (const auto& k : args.kinds) kinds += (kinds.empty() ? "" : ",") + k;
  char* csv = nullptr;
  const bm_status s = bm_bench_csv(args.sizes.data(), args.sizes.size(), kinds.c_str(), args.repetitions,
                                   args.seed, args.dense, args.threads, &csv);
  if (s != BM_OK) return report(s);
  StringPtr owner(csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euclidean bottleneck matching"};
  app.require_subcommand(1);

  MatchArgs match;
  auto* match_cmd = app.add_subcommand("match", "Solve an instance and print the result as JSON");
  match_cmd->add_option("input", match.input, "Instance file")->required();
  match_cmd->add_option("--k", match.k, "Neighborhood size")->check(CLI::PositiveNumber);
  match_cmd->add_flag("--all-pairs", match.all_pairs, "Search every pairwise distance");
  match_cmd->add_flag("--lengths-only", match.lengths_only, "Use only the GNG length set");
  match_cmd->add_flag("--timings", match.timings, "Include wall-clock timings");
  match_cmd->add_option("--threads", match.threads, "Worker threads for the GNG build")
      ->check(CLI::PositiveNumber);
  match_cmd->add_option("--svg", match.svg, "Write an SVG picture of the matching");

  std::string gng_input;
  uint32_t gng_k = 17;
  bool gng_lengths_only = false;
  auto* gng_cmd = app.add_subcommand("gng", "Print the geographic neighborhood graph");
  gng_cmd->add_option("input", gng_input, "Instance file")->required();
  gng_cmd->add_option("--k", gng_k, "Neighborhood size")->check(CLI::PositiveNumber);
  gng_cmd->add_flag("--lengths-only", gng_lengths_only, "Print only the distinct squared lengths");

  std::string gen_kind;
  size_t gen_n = 0;
  uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen_kind, "uniform, grid, cocircular or clustered")->required();
  gen_cmd->add_option("n", gen_n, "Number of points")->required();
  gen_cmd->add_option("--seed", gen_seed, "Random seed");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark the pipeline, CSV on stdout");
  bench_cmd->add_option("--n", bench.sizes, "Instance sizes")->delimiter(',');
  bench_cmd->add_option("--kinds", bench.kinds, "Instance kinds")->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per configuration");
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first repetition");
  bench_cmd->add_flag("--dense", bench.dense, "Also time the decision on the full disk graph");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads for the GNG build")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*match_cmd) return cmd_match(match);
  if (*gng_cmd) return cmd_gng(gng_input, gng_k, gng_lengths_only);
  if (*gen_cmd) return cmd_gen(gen_kind, gen_n, gen_seed);
  if (*bench_cmd) return cmd_bench(bench);
  return kExitInput;
}
