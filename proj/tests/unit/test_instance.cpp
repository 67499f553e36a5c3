#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bmatch/error.hpp"
#include "bmatch/instance.hpp"
#include "bmatch/report.hpp"

using namespace bmatch;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted: " << text);
  return ErrorCode::Internal;
}

std::string message_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parsing scales decimals exactly") {
  const auto pts = parse_instance("# header\n0 0\n1.5 -2.25\n  -0.000001\t123456.654321  \n\n3 4\n");
  REQUIRE(pts.size() == 4);
  CHECK(pts[1] == ScaledPoint{1'500'000, -2'250'000});
  CHECK(pts[2] == ScaledPoint{-1, 123'456'654'321});
  CHECK(pts[3] == ScaledPoint{3'000'000, 4'000'000});
  CHECK(parse_instance("").empty());
  CHECK(parse_instance("+2 .5\n") == std::vector<ScaledPoint>{{2'000'000, 500'000}});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(code_of("0 0\n1.1234567 0\n") == ErrorCode::InvalidInput);
  CHECK(message_of("0 0\n1.1234567 0\n").find("line 2") != std::string::npos);
  CHECK(code_of("1 2 3\n") == ErrorCode::InvalidInput);
  CHECK(code_of("1\n") == ErrorCode::InvalidInput);
  CHECK(code_of("abc 1\n") == ErrorCode::InvalidInput);
  CHECK(code_of("1e3 1\n") == ErrorCode::InvalidInput);
  CHECK(code_of("2000000 0\n") == ErrorCode::InvalidInput);
  CHECK(code_of("0 0\n# c\n1 1\n0.0 0.000\n") == ErrorCode::DuplicatePoint);
  const auto m = message_of("0 0\n# c\n1 1\n0.0 0.000\n");
  CHECK(m.find("line 1") != std::string::npos);
  CHECK(m.find("line 4") != std::string::npos);
}

TEST_CASE("format round-trips through parse") {
  CHECK(format_scaled(0) == "0.000000");
  CHECK(format_scaled(-1) == "-0.000001");
  CHECK(format_scaled(12'345'678) == "12.345678");
  for (auto kind : {InstanceKind::Uniform, InstanceKind::Grid, InstanceKind::Cocircular, InstanceKind::Clustered}) {
    const auto pts = generate_instance(kind, 500, 9);
    CHECK(pts.size() == 500);
    CHECK(parse_instance(format_instance(pts)) == pts);
  }
}

TEST_CASE("generators are deterministic and degenerate where promised") {
  CHECK(generate_instance(InstanceKind::Uniform, 1000, 7) == generate_instance(InstanceKind::Uniform, 1000, 7));
  CHECK(generate_instance(InstanceKind::Uniform, 100, 7) != generate_instance(InstanceKind::Uniform, 100, 8));

  const auto grid = generate_instance(InstanceKind::Grid, 16, 1);
  REQUIRE(grid.size() == 16);
  std::set<SqDist> distinct;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b, ++pairs) distinct.insert(sq_dist(grid[a], grid[b]));
  CHECK(distinct.size() < pairs / 4);

  const auto circ = generate_instance(InstanceKind::Cocircular, 18, 3);
  REQUIRE(circ.size() == 18);
  // Exact circumcenter of the first three points; it must be a lattice point
  // equidistant from all of them.
  using I = __int128;
  const I ax = circ[0].x, ay = circ[0].y, bx = circ[1].x - ax, by = circ[1].y - ay;
  const I cx = circ[2].x - ax, cy = circ[2].y - ay;
  const I den = 2 * (bx * cy - by * cx);
  REQUIRE(den != 0);
  const I b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const I ux = cy * b2 - by * c2, uy = bx * c2 - cx * b2;
  REQUIRE(ux % den == 0);
  REQUIRE(uy % den == 0);
  const ScaledPoint center{static_cast<Coord>(ax + ux / den), static_cast<Coord>(ay + uy / den)};
  for (auto p : circ) CHECK(sq_dist(center, p) == sq_dist(center, circ[0]));

  CHECK(parse_instance_kind("grid") == InstanceKind::Grid);
  CHECK_FALSE(parse_instance_kind("spiral"));
  CHECK(instance_kind_name(InstanceKind::Clustered) == "clustered");
}

TEST_CASE("result document and listings") {
  const std::vector<ScaledPoint> sq{{0, 0}, {kScale, 0}, {kScale, kScale}, {0, kScale}};
  const auto r = bottleneck_matching(sq);
  const auto doc = result_document(r, false);
  CHECK(doc.find("\"r_star_sq\": \"1000000000000\"") != std::string::npos);
  CHECK(doc.find("timings") == std::string::npos);
  CHECK(result_document(r, true).find("gng_build_ms") != std::string::npos);
  CHECK(doc == result_document(bottleneck_matching(sq), false));

  const auto svg = render_svg(sq, &r.matching);
  CHECK(count(svg, "<circle") == 4);
  CHECK(count(svg, "<line") == 2);

  GngOptions o;
  o.k = 1;
  const std::vector<ScaledPoint> line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  CHECK(gng_listing(build_gng(line, o)) == "0 1 1\n1 2 1\n2 3 1\n");
  o.lengths_only = true;
  CHECK(gng_listing(build_gng(line, o)) == "1\n");
}

TEST_CASE("bench rows") {
  BenchConfig c;
  c.sizes = {200};
  c.kinds = {InstanceKind::Uniform, InstanceKind::Grid};
  c.repetitions = 3;
  c.dense_decision = true;
  const auto rows = run_bench(c);
  CHECK(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.edges_sparse <= 102 * row.n);
    CHECK(row.dense_decision_ms.has_value());
  }
  const auto csv = bench_csv(rows);
  CHECK(csv.rfind("n,kind,gng_build_ms,search_ms,oracle_calls,dense_decision_ms,edges_sparse,edges_dense\n", 0) == 0);
  CHECK(count(csv, "\n") == 7);
  c.sizes = {201};
  CHECK_THROWS_AS(run_bench(c), Error);
}
