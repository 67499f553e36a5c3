#include "bmatch/matching.hpp"

#include <algorithm>
#include <cmath>

#include "bmatch/error.hpp"

namespace bmatch {

AdjacencyGraph::AdjacencyGraph(std::size_t n, std::span<const std::pair<PointId, PointId>> edges)
    : offsets_(n + 1, 0) {
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    targets_[fill[a]++] = b;
    targets_[fill[b]++] = a;
  }
  // Sort and drop repeats, then compact.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t end = offsets_[v + 1];
    std::sort(targets_.begin() + begin, targets_.begin() + end);
    const std::size_t start = write;
    for (std::size_t i = begin; i < end; ++i)
      if (write == start || targets_[write - 1] != targets_[i]) targets_[write++] = targets_[i];
    begin = end;
    offsets_[v + 1] = write;
    offsets_[v] = start;
  }
  targets_.resize(write);
}

bool AdjacencyGraph::has_edge(PointId a, PointId b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<PointId, PointId>> Matching::pairs() const {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId v = 0; v < mate.size(); ++v)
    if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(v, mate[v]);
  return out;
}

bool is_valid_matching(const AdjacencyGraph& g, const Matching& m) {
  if (m.mate.size() != g.vertex_count()) return false;
  std::size_t matched = 0;
  for (PointId v = 0; v < m.mate.size(); ++v) {
    const PointId u = m.mate[v];
    if (u == kUnmatched) continue;
    if (u >= m.mate.size() || u == v || m.mate[u] != v || !g.has_edge(v, u)) return false;
    ++matched;
  }
  return matched == 2 * m.size;
}

namespace {

// Edmonds' blossom search. Blossom bases are tracked with a union-find
// whose roots are the bases, so a contraction costs only its cycle.
// Per-search state is reset only on the vertices the search touched.
class BlossomMatcher {
 public:
  BlossomMatcher(const AdjacencyGraph& g, std::vector<PointId> mate)
      : g_(g),
        n_(g.vertex_count()),
        mate_(std::move(mate)),
        parent_(n_, kUnmatched),
        base_(n_),
        label_(n_, kFree),
        visit_(n_, 0),
        removed_(n_, false) {
    for (PointId v = 0; v < n_; ++v) base_[v] = v;
    queue_.reserve(n_);
  }

  std::vector<PointId> run() {
    for (PointId v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      for (PointId u : g_.neighbors(v)) {
        if (mate_[u] == kUnmatched) {
          mate_[v] = u;
          mate_[u] = v;
          break;
        }
      }
    }
    for (PointId root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched || removed_[root]) continue;
      const PointId end = find_augmenting_path(root);
      if (end != kUnmatched) {
        augment(end);
      } else {
        // No augmenting path from root: its alternating tree can be dropped
        // for the rest of the run without changing the maximum.
        for (PointId v : touched_) removed_[v] = true;
      }
    }
    return std::move(mate_);
  }

 private:
  enum Label : std::uint8_t { kFree, kOuter, kInner };

  PointId find(PointId v) {
    while (base_[v] != v) {
      base_[v] = base_[base_[v]];
      v = base_[v];
    }
    return v;
  }

  void reset_search() {
    for (PointId v : touched_) {
      parent_[v] = kUnmatched;
      label_[v] = kFree;
      base_[v] = v;
    }
    touched_.clear();
    queue_.clear();
  }

  void make_outer(PointId v) {
    label_[v] = kOuter;
    queue_.push_back(v);
  }

  PointId lowest_common_ancestor(PointId a, PointId b) {
    if (++stamp_ == 0) {
      std::fill(visit_.begin(), visit_.end(), 0);
      stamp_ = 1;
    }
    while (true) {
      if (a != kUnmatched) {
        a = find(a);
        if (visit_[a] == stamp_) return a;
        visit_[a] = stamp_;
        a = mate_[a] == kUnmatched ? kUnmatched : parent_[mate_[a]];
      }
      std::swap(a, b);
    }
  }

  void shrink_path(PointId v, PointId child, PointId lca) {
    while (find(v) != lca) {
      parent_[v] = child;
      child = mate_[v];
      if (label_[child] == kInner) make_outer(child);
      if (base_[v] == v) base_[v] = lca;
      if (base_[child] == child) base_[child] = lca;
      v = parent_[child];
    }
  }

  PointId find_augmenting_path(PointId root) {
    reset_search();
    touched_.push_back(root);
    make_outer(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const PointId v = queue_[head];
      for (PointId u : g_.neighbors(v)) {
        if (removed_[u] || mate_[v] == u) continue;
        if (label_[u] == kFree) {
          parent_[u] = v;
          label_[u] = kInner;
          touched_.push_back(u);
          if (mate_[u] == kUnmatched) return u;
          const PointId w = mate_[u];
          touched_.push_back(w);
          make_outer(w);
        } else if (label_[u] == kOuter && find(u) != find(v)) {
          const PointId lca = lowest_common_ancestor(u, v);
          shrink_path(u, v, lca);
          shrink_path(v, u, lca);
        }
      }
    }
    return kUnmatched;
  }

  void augment(PointId v) {
    while (v != kUnmatched) {
      const PointId pv = parent_[v];
      const PointId next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const AdjacencyGraph& g_;
  const PointId n_;
  std::vector<PointId> mate_;
  std::vector<PointId> parent_;
  std::vector<PointId> base_;
  std::vector<Label> label_;
  std::vector<std::uint32_t> visit_;
  std::uint32_t stamp_ = 0;
  std::vector<bool> removed_;
  std::vector<PointId> touched_;
  std::vector<PointId> queue_;
};

Coord isqrt_ceil_plus_one(SqDist r2) {
  auto r = static_cast<Coord>(std::sqrt(static_cast<long double>(r2.value())));
  while (r > 0 && static_cast<SqDist::Rep>(r) * static_cast<SqDist::Rep>(r) > r2.value()) --r;
  while (static_cast<SqDist::Rep>(r + 1) * static_cast<SqDist::Rep>(r + 1) <= r2.value()) ++r;
  return r + 1;
}

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Calls visit(a, b) for every unordered pair a < b with sq_dist <= r2.
template <class Visit>
void for_each_close_pair(std::span<const ScaledPoint> points, SqDist r2, Visit&& visit) {
  const std::size_t n = points.size();
  if (n < 2) return;
  // Pairs within distance sqrt(r2) < cell lie in neighboring cells.
  const Coord cell = isqrt_ceil_plus_one(r2);
  struct Slot {
    Coord cx, cy;
    PointId id;
  };
  std::vector<Slot> slots(n);
  for (PointId i = 0; i < n; ++i)
    slots[i] = {floor_div(points[i].x, cell), floor_div(points[i].y, cell), i};
  auto cell_less = [](const Slot& s, const Slot& t) {
    return s.cx != t.cx ? s.cx < t.cx : (s.cy != t.cy ? s.cy < t.cy : s.id < t.id);
  };
  std::sort(slots.begin(), slots.end(), cell_less);
  for (std::size_t i = 0; i < n; ++i) {
    const Slot& s = slots[i];
    for (Coord dx = -1; dx <= 1; ++dx) {
      for (Coord dy = -1; dy <= 1; ++dy) {
        const Slot key{s.cx + dx, s.cy + dy, 0};
        auto it = std::lower_bound(slots.begin(), slots.end(), key, cell_less);
        for (; it != slots.end() && it->cx == key.cx && it->cy == key.cy; ++it) {
          if (it->id <= s.id) continue;
          if (sq_dist(points[s.id], points[it->id]) <= r2) visit(s.id, it->id);
        }
      }
    }
  }
}

}  // namespace

Matching max_matching(const AdjacencyGraph& g, const Matching* start) {
  std::vector<PointId> mate =
      start ? start->mate : std::vector<PointId>(g.vertex_count(), kUnmatched);
  if (mate.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidInput, "starting matching has the wrong vertex count");
  Matching m;
  m.mate = BlossomMatcher(g, std::move(mate)).run();
  for (PointId v = 0; v < m.mate.size(); ++v)
    if (m.mate[v] != kUnmatched && v < m.mate[v]) ++m.size;
  return m;
}

AdjacencyGraph threshold_graph(std::span<const ScaledPoint> points, SqDist r2,
                               std::optional<std::span<const Edge>> candidates) {
  std::vector<std::pair<PointId, PointId>> kept;
  if (candidates) {
    for (const Edge& e : *candidates)
      if (e.length <= r2) kept.emplace_back(e.a, e.b);
  } else {
    for_each_close_pair(points, r2, [&](PointId a, PointId b) { kept.emplace_back(a, b); });
  }
  return AdjacencyGraph(points.size(), kept);
}

std::size_t count_pairs_within(std::span<const ScaledPoint> points, SqDist r2) {
  std::size_t count = 0;
  for_each_close_pair(points, r2, [&](PointId, PointId) { ++count; });
  return count;
}

Decision has_perfect_matching(std::span<const ScaledPoint> points, SqDist r2,
                              std::optional<std::span<const Edge>> candidates,
                              const Matching* start) {
  if (points.size() % 2 != 0)
    throw Error(ErrorCode::OddPointCount,
                "a perfect matching needs an even number of points, got " +
                    std::to_string(points.size()));
  const AdjacencyGraph g = threshold_graph(points, r2, candidates);
  Decision d;
  if (start) {
    // Keep only the pairs that survive in this graph.
    Matching seed = Matching::empty(points.size());
    for (PointId v = 0; v < start->mate.size() && v < points.size(); ++v) {
      const PointId u = start->mate[v];
      if (u != kUnmatched && v < u && u < points.size() && g.has_edge(v, u)) {
        seed.mate[v] = u;
        seed.mate[u] = v;
        ++seed.size;
      }
    }
    d.witness = max_matching(g, &seed);
  } else {
    d.witness = max_matching(g);
  }
  d.perfect = d.witness.perfect();
  return d;
}

}  // namespace bmatch
