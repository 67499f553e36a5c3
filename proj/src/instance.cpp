#include "bmatch/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bmatch/error.hpp"

namespace bmatch {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::InvalidInput, "line " + std::to_string(line) + ": " + message);
}

bool parse_decimal(std::string_view token, Coord& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) negative = token[i++] == '-';
  __int128 whole = 0;
  std::size_t whole_digits = 0;
  for (; i < token.size() && token[i] >= '0' && token[i] <= '9'; ++i, ++whole_digits) {
    whole = whole * 10 + (token[i] - '0');
    if (whole > kMaxCoord) return false;
  }
  __int128 frac = 0;
  std::size_t frac_digits = 0;
  if (i < token.size() && token[i] == '.') {
    for (++i; i < token.size() && token[i] >= '0' && token[i] <= '9'; ++i, ++frac_digits) {
      if (frac_digits == 6) return false;
      frac = frac * 10 + (token[i] - '0');
    }
  }
  if (i != token.size() || whole_digits + frac_digits == 0) return false;
  for (std::size_t d = frac_digits; d < 6; ++d) frac *= 10;
  __int128 value = whole * kScale + frac;
  if (value > kMaxCoord) return false;
  out = static_cast<Coord>(negative ? -value : value);
  return true;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

std::vector<ScaledPoint> parse_instance(std::string_view text) {
  std::vector<ScaledPoint> points;
  std::vector<std::size_t> line_of;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (t < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t", t);
      if (start == std::string_view::npos) break;
      const std::size_t stop = line.find_first_of(" \t", start);
      tokens.push_back(line.substr(start, stop == std::string_view::npos ? std::string_view::npos
                                                                           : stop - start));
      t = stop == std::string_view::npos ? line.size() : stop;
    }
    if (tokens.size() != 2) fail_line(line_no, "expected two numbers, found " + std::to_string(tokens.size()));
    ScaledPoint p;
    if (!parse_decimal(tokens[0], p.x) || !parse_decimal(tokens[1], p.y))
      fail_line(line_no,
                "expected decimals with at most 6 fractional digits and magnitude at most " +
                    format_scaled(kMaxCoord));
    points.push_back(p);
    line_of.push_back(line_no);
  }

  std::map<ScaledPoint, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = seen.emplace(points[i], line_of[i]);
    if (!inserted)
      throw Error(ErrorCode::DuplicatePoint, "line " + std::to_string(line_of[i]) +
                                                 ": duplicate of the point on line " +
                                                 std::to_string(it->second));
  }
  return points;
}

std::vector<ScaledPoint> read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_scaled(Coord value) {
  const bool negative = value < 0;
  const auto magnitude = static_cast<std::uint64_t>(negative ? -static_cast<__int128>(value) : value);
  std::string frac = std::to_string(magnitude % static_cast<std::uint64_t>(kScale));
  frac.insert(0, 6 - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(magnitude / static_cast<std::uint64_t>(kScale)) + "." + frac;
}

std::string format_instance(std::span<const ScaledPoint> points) {
  std::string out;
  for (const auto& p : points) {
    out += format_scaled(p.x);
    out += ' ';
    out += format_scaled(p.y);
    out += '\n';
  }
  return out;
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  if (name == "uniform") return InstanceKind::Uniform;
  if (name == "grid") return InstanceKind::Grid;
  if (name == "cocircular") return InstanceKind::Cocircular;
  if (name == "clustered") return InstanceKind::Clustered;
  return std::nullopt;
}

std::string_view instance_kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Uniform: return "uniform";
    case InstanceKind::Grid: return "grid";
    case InstanceKind::Cocircular: return "cocircular";
    case InstanceKind::Clustered: return "clustered";
  }
  return "unknown";
}

namespace {

// Engine output is fully specified by the standard; distributions are not,
// so ranges are reduced by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Coord between(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<ScaledPoint> distinct_points(std::size_t n, Rng& rng, auto&& draw) {
  std::vector<ScaledPoint> out;
  std::set<ScaledPoint> seen;
  out.reserve(n);
  while (out.size() < n) {
    const ScaledPoint p = draw(rng);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

// All lattice points on x^2 + y^2 = N for N a product of the first `count`
// primes that are 1 mod 4, built from Gaussian-integer factorizations.
std::vector<ScaledPoint> lattice_circle(std::size_t count) {
  static constexpr std::array<std::pair<Coord, Coord>, 12> kSplit = {{
      {1, 2}, {2, 3}, {1, 4}, {2, 5}, {1, 6}, {4, 5}, {2, 7}, {5, 6}, {3, 8}, {5, 8}, {4, 9}, {1, 10}}};
  std::vector<std::pair<__int128, __int128>> gauss = {{1, 0}};
  for (std::size_t j = 0; j < count; ++j) {
    const auto [a, b] = kSplit[j];
    std::vector<std::pair<__int128, __int128>> next;
    for (const auto& [re, im] : gauss) {
      next.emplace_back(re * a - im * b, re * b + im * a);
      next.emplace_back(re * a + im * b, im * a - re * b);
    }
    gauss = std::move(next);
  }
  std::set<ScaledPoint> pts;
  for (auto [re, im] : gauss) {
    for (int r = 0; r < 4; ++r) {
      pts.insert({static_cast<Coord>(re), static_cast<Coord>(im)});
      const auto t = re;
      re = -im;
      im = t;
    }
  }
  return {pts.begin(), pts.end()};
}

std::vector<ScaledPoint> cocircular(std::size_t n, Rng& rng) {
  std::size_t primes = 1;
  while (primes < 12 && (std::size_t{4} << primes) < n) ++primes;
  const std::vector<ScaledPoint> ring = lattice_circle(primes);
  const auto radius = std::sqrt(static_cast<long double>(ring.front().x) * ring.front().x +
                                static_cast<long double>(ring.front().y) * ring.front().y);
  // Stretch the circle to a radius of roughly 100 units.
  const Coord stretch = std::max<Coord>(1, static_cast<Coord>(100.0L * kScale / radius));
  const ScaledPoint center{500 * kScale + rng.between(0, kScale - 1), 500 * kScale + rng.between(0, kScale - 1)};

  std::vector<ScaledPoint> out;
  out.reserve(n);
  for (Coord ring_no = 1; out.size() < n; ++ring_no) {
    std::vector<std::size_t> order(ring.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    const std::size_t take = std::min(ring.size(), n - out.size());
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    for (std::size_t i = 0; i < take; ++i) {
      const auto& p = ring[order[i]];
      out.push_back({center.x + p.x * stretch * ring_no, center.y + p.y * stretch * ring_no});
    }
  }
  return out;
}

}  // namespace

std::vector<ScaledPoint> generate_instance(InstanceKind kind, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case InstanceKind::Uniform:
      return distinct_points(n, rng, [](Rng& r) {
        return ScaledPoint{r.between(0, 1000 * kScale - 1), r.between(0, 1000 * kScale - 1)};
      });
    case InstanceKind::Grid: {
      std::vector<ScaledPoint> out;
      Coord cols = 1;
      while (static_cast<std::size_t>(cols * cols) < n) ++cols;
      for (std::size_t i = 0; i < n; ++i)
        out.push_back({static_cast<Coord>(i) % cols * kScale, static_cast<Coord>(i) / cols * kScale});
      return out;
    }
    case InstanceKind::Cocircular:
      return cocircular(n, rng);
    case InstanceKind::Clustered: {
      const std::size_t clusters = std::max<std::size_t>(1, n / 32);
      std::vector<ScaledPoint> centers;
      for (std::size_t c = 0; c < clusters; ++c)
        centers.push_back({rng.between(0, 1000 * kScale - 1), rng.between(0, 1000 * kScale - 1)});
      return distinct_points(n, rng, [&](Rng& r) {
        const auto& c = centers[r.below(centers.size())];
        return ScaledPoint{c.x + r.between(-2 * kScale, 2 * kScale), c.y + r.between(-2 * kScale, 2 * kScale)};
      });
    }
  }
  return {};
}

}  // namespace bmatch
