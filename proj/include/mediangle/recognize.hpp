#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mediangle/graph.hpp"

namespace mediangle {

// Structured counterexample: which condition failed and on what.
struct Witness {
  std::string condition;
  std::vector<vertex_t> vertices;
  std::vector<Cycle> cycles;
  std::string detail;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  int cap_used = 0;
  bool interior_only = false;

  static Verdict pass(int cap, bool interior) { return {true, std::nullopt, cap, interior}; }
  static Verdict fail(Witness w, int cap, bool interior) {
    return {false, std::move(w), cap, interior};
  }
};

struct CheckOptions {
  int max_len = 0;            // cycle-length cap; 0 means twice the diameter
  std::optional<int> margin;  // ball-mode interior margin; default max_len/2
};

namespace detail {

// Interior restriction for graphs flagged as balls of infinite graphs:
// universal conditions are asserted only for tuples within radius
// r - margin of the center, so their witnessing objects fit in the ball.
struct Interior {
  bool restricted = false;
  std::vector<int> dist_from_center;
  int limit = 0;

  bool ok(vertex_t x) const { return !restricted || dist_from_center[x] <= limit; }

  template <typename... V>
  bool ok_all(V... xs) const {
    return (ok(xs) && ...);
  }

  bool ok_cycle(const Cycle& c) const {
    if (!restricted) return true;
    for (vertex_t v : c.vertices)
      if (!ok(v)) return false;
    return true;
  }
};

inline Interior make_interior(const Graph& g, int max_len, const CheckOptions& opts) {
  Interior in;
  if (!g.ball()) return in;
  in.restricted = true;
  in.dist_from_center = g.bfs_row(g.ball()->center);
  int margin = opts.margin.value_or(max_len / 2);
  in.limit = g.ball()->radius - margin;
  return in;
}

inline int resolve_max_len(const Graph& g, const CheckOptions& opts) {
  return opts.max_len > 0 ? opts.max_len : g.default_max_cycle_length();
}

// Convex even cycles indexed by their corners: for a 2-path (a, z, b) on a
// cycle, records the cycle and the vertex opposite z.
struct CornerIndex {
  std::vector<Cycle> cycles;
  std::map<std::tuple<vertex_t, vertex_t, vertex_t>, std::vector<std::pair<int, vertex_t>>>
      corners;

  static CornerIndex build(const Graph& g, int max_len) {
    CornerIndex idx;
    idx.cycles = g.convex_even_cycles(max_len);
    for (int ci = 0; ci < static_cast<int>(idx.cycles.size()); ++ci) {
      const Cycle& c = idx.cycles[ci];
      const std::size_t n = c.length();
      for (std::size_t i = 0; i < n; ++i) {
        vertex_t z = c.at(i);
        vertex_t a = c.at(i + n - 1);
        vertex_t b = c.at(i + 1);
        idx.corners[{std::min(a, b), z, std::max(a, b)}].emplace_back(ci, c.opposite(i));
      }
    }
    return idx;
  }
};

}  // namespace detail

// Triangle condition: whenever d(o,x) = d(o,y) and x,y are adjacent, some
// common neighbour of x and y lies in I(o,x) and I(o,y).
inline Verdict check_triangle_condition(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  for (vertex_t o = 0; o < g.vertex_count(); ++o) {
    if (!interior.ok(o)) continue;
    auto row = g.bfs_row(o);
    for (const Edge& e : g.edges()) {
      vertex_t x = e.u, y = e.v;
      if (!interior.ok_all(x, y)) continue;
      int d = row[x];
      if (d <= 0 || d != row[y]) continue;
      bool found = false;
      for (vertex_t z : set_intersection(g.neighbors(x), g.neighbors(y)))
        if (row[z] == d - 1) {
          found = true;
          break;
        }
      if (!found)
        return Verdict::fail({"triangle", {o, x, y}, {}, "no common neighbour in I(o,x) and I(o,y)"},
                             cap, interior.restricted);
    }
  }
  return Verdict::pass(cap, interior.restricted);
}

// Cycle condition: whenever d(o,x) = d(o,y) = d(o,z) - 1 with x,y distinct
// neighbours of z, some convex even cycle contains the edges [z,x],[z,y] and
// has its vertex opposite z in I(o,x) and I(o,y).
inline Verdict check_cycle_condition(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  auto idx = detail::CornerIndex::build(g, cap);
  for (vertex_t o = 0; o < g.vertex_count(); ++o) {
    if (!interior.ok(o)) continue;
    auto row = g.bfs_row(o);
    for (vertex_t z = 0; z < g.vertex_count(); ++z) {
      if (!interior.ok(z) || row[z] <= 0) continue;
      const auto& nb = g.neighbors(z);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          vertex_t x = nb[i], y = nb[j];
          if (!interior.ok_all(x, y)) continue;
          if (row[x] != row[z] - 1 || row[y] != row[z] - 1) continue;
          bool found = false;
          auto it = idx.corners.find({x, z, y});
          if (it != idx.corners.end()) {
            for (const auto& [ci, opp] : it->second) {
              if (g.in_interval(opp, o, x) && g.in_interval(opp, o, y)) {
                found = true;
                break;
              }
            }
          }
          if (!found)
            return Verdict::fail(
                {"cycle", {o, x, y, z}, {}, "no convex even cycle through [z,x],[z,y] with opposite vertex in I(o,x) and I(o,y)"},
                cap, interior.restricted);
        }
    }
  }
  return Verdict::pass(cap, interior.restricted);
}

// Any two distinct convex even cycles share at most one edge.
inline Verdict check_even_cycle_intersections(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  auto cycles = g.convex_even_cycles(cap);
  std::map<Edge, std::vector<int>> by_edge;
  for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
    if (!interior.ok_cycle(cycles[ci])) continue;
    for (const Edge& e : cycles[ci].edges()) by_edge[e].push_back(ci);
  }
  std::map<std::pair<int, int>, int> shared;
  for (const auto& [e, cs] : by_edge)
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (++shared[{cs[i], cs[j]}] >= 2)
          return Verdict::fail({"even-cycle-intersections",
                                {},
                                {cycles[cs[i]], cycles[cs[j]]},
                                "two convex even cycles share at least two edges"},
                               cap, interior.restricted);
  return Verdict::pass(cap, interior.restricted);
}

// All four mediangle conditions plus connectivity.
inline Verdict is_mediangle(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  bool interior = g.ball().has_value();
  if (!g.connected())
    return Verdict::fail({"connectivity", {}, {}, "graph is not connected"}, cap, interior);
  if (auto w = g.find_induced(Graph::Pattern::k4_minus))
    return Verdict::fail({"no-K4-minus", *w, {}, "induced K4 minus an edge"}, cap, interior);
  Verdict v = check_triangle_condition(g, opts);
  if (!v.holds) return v;
  v = check_cycle_condition(g, opts);
  if (!v.holds) return v;
  return check_even_cycle_intersections(g, opts);
}

// Median graphs, checked directly: every triple of vertices admits exactly
// one median point.
inline Verdict is_median(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  if (!g.connected())
    return Verdict::fail({"connectivity", {}, {}, "graph is not connected"}, cap,
                         interior.restricted);
  int n = g.vertex_count();
  for (vertex_t x = 0; x < n; ++x) {
    if (!interior.ok(x)) continue;
    auto rx = g.bfs_row(x);
    for (vertex_t y = x; y < n; ++y) {
      if (!interior.ok(y)) continue;
      auto ry = g.bfs_row(y);
      for (vertex_t z = y; z < n; ++z) {
        if (!interior.ok(z)) continue;
        auto rz = g.bfs_row(z);
        int medians = 0;
        for (vertex_t m = 0; m < n; ++m) {
          if (rx[m] + ry[m] == rx[y] && ry[m] + rz[m] == ry[z] && rx[m] + rz[m] == rx[z])
            ++medians;
        }
        if (medians != 1)
          return Verdict::fail({"median",
                                {x, y, z},
                                {},
                                "triple admits " + std::to_string(medians) + " median points"},
                               cap, interior.restricted);
      }
    }
  }
  return Verdict::pass(cap, interior.restricted);
}

// Quasi-median graphs via the equivalence: mediangle with no convex even
// cycle of length greater than four.
inline Verdict is_quasi_median(const Graph& g, const CheckOptions& opts = {}) {
  Verdict v = is_mediangle(g, opts);
  if (!v.holds) return v;
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  for (const Cycle& c : g.convex_even_cycles(cap))
    if (c.length() > 4 && interior.ok_cycle(c))
      return Verdict::fail({"quasi-median", {}, {c}, "convex even cycle of length > 4"}, cap,
                           interior.restricted);
  return Verdict::pass(cap, interior.restricted);
}

// Quadrangle condition of weak modularity.
inline Verdict check_quadrangle_condition(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  for (vertex_t o = 0; o < g.vertex_count(); ++o) {
    if (!interior.ok(o)) continue;
    auto row = g.bfs_row(o);
    for (vertex_t z = 0; z < g.vertex_count(); ++z) {
      if (!interior.ok(z) || row[z] <= 0) continue;
      const auto& nb = g.neighbors(z);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          vertex_t x = nb[i], y = nb[j];
          if (!interior.ok_all(x, y)) continue;
          if (row[x] != row[z] - 1 || row[y] != row[z] - 1) continue;
          bool found = false;
          for (vertex_t w : set_intersection(g.neighbors(x), g.neighbors(y)))
            if (row[w] == row[x] - 1) {
              found = true;
              break;
            }
          if (!found)
            return Verdict::fail({"quadrangle", {o, x, y, z}, {}, "no common neighbour of x,y in I(o,x) and I(o,y)"},
                                 cap, interior.restricted);
        }
    }
  }
  return Verdict::pass(cap, interior.restricted);
}

// Quasi-median graphs by the direct definition: weakly modular with no
// induced K4 minus an edge and no induced K3,2. Used to cross-check the
// equivalence-based recogniser.
inline Verdict is_quasi_median_direct(const Graph& g, const CheckOptions& opts = {}) {
  int cap = detail::resolve_max_len(g, opts);
  bool interior = g.ball().has_value();
  if (!g.connected())
    return Verdict::fail({"connectivity", {}, {}, "graph is not connected"}, cap, interior);
  if (auto w = g.find_induced(Graph::Pattern::k4_minus))
    return Verdict::fail({"no-K4-minus", *w, {}, "induced K4 minus an edge"}, cap, interior);
  if (auto w = g.find_induced(Graph::Pattern::k32))
    return Verdict::fail({"no-K32", *w, {}, "induced K3,2"}, cap, interior);
  Verdict v = check_triangle_condition(g, opts);
  if (!v.holds) return v;
  return check_quadrangle_condition(g, opts);
}

struct LabelSet {
  bool median = false;
  bool quasi_median = false;
  bool mediangle = false;
  bool bipartite_mediangle = false;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

// Recogniser bundle; labels respect median < quasi-median < mediangle.
inline LabelSet classify(const Graph& g, const CheckOptions& opts = {}) {
  LabelSet out;
  Verdict m = is_mediangle(g, opts);
  if (!m.holds) return out;
  out.mediangle = true;
  out.bipartite_mediangle = g.bipartite();
  int cap = detail::resolve_max_len(g, opts);
  auto interior = detail::make_interior(g, cap, opts);
  bool long_cycle = false;
  for (const Cycle& c : g.convex_even_cycles(cap))
    if (c.length() > 4 && interior.ok_cycle(c)) {
      long_cycle = true;
      break;
    }
  out.quasi_median = !long_cycle;
  bool has_triangle = false;
  for (const auto& t : g.triangles())
    if (interior.ok_all(t[0], t[1], t[2])) {
      has_triangle = true;
      break;
    }
  out.median = out.quasi_median && !has_triangle;
  return out;
}

// Local convexity: every convex even cycle with at least half its length in
// the set lies entirely in it.
inline bool is_locally_convex(const Graph&, const VertexSet& s, const std::vector<Cycle>& cycles) {
  for (const Cycle& c : cycles) {
    const int n = static_cast<int>(c.length());
    if (set_subset(c.vertex_set(), s)) continue;
    // Longest circular run of consecutive cycle vertices inside s.
    int best = 0, run = 0;
    for (int i = 0; i < 2 * n; ++i) {
      if (set_contains(s, c.at(i))) {
        run = std::min(run + 1, n);
        best = std::max(best, run);
      } else {
        run = 0;
      }
    }
    if (best >= n / 2 + 1) return false;  // a subpath with n/2 edges in s
  }
  return true;
}

// Local gatedness: every 3-cycle with an edge in the set, and every convex
// even cycle with two consecutive edges in it, lies entirely in it.
inline bool is_locally_gated(const Graph& g, const VertexSet& s, const std::vector<Cycle>& cycles) {
  for (const auto& t : g.triangles()) {
    int inside = set_contains(s, t[0]) + set_contains(s, t[1]) + set_contains(s, t[2]);
    if (inside == 2) {
      // The two inside vertices are adjacent (triangle), so an edge lies in s.
      return false;
    }
  }
  for (const Cycle& c : cycles) {
    const int n = static_cast<int>(c.length());
    if (set_subset(c.vertex_set(), s)) continue;
    int run = 0;
    for (int i = 0; i < 2 * n; ++i) {
      if (set_contains(s, c.at(i))) {
        run = std::min(run + 1, n);
        if (run >= 3) return false;  // two consecutive edges in s
      } else {
        run = 0;
      }
    }
  }
  return true;
}

}  // namespace mediangle
