#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mediangle/errors.hpp"

namespace mediangle {

using vertex_t = int;

// Ordered set of vertex ids with deterministic iteration order.
using VertexSet = std::vector<vertex_t>;

inline VertexSet make_vertex_set(std::vector<vertex_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const VertexSet& s, vertex_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline bool set_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Undirected edge, stored with u < v.
struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;

  Edge() = default;
  Edge(vertex_t a, vertex_t b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Cyclic sequence of pairwise distinct, consecutively adjacent vertices.
// Stored in canonical form (minimal rotation/reflection), so equal cycles
// compare equal.
struct Cycle {
  std::vector<vertex_t> vertices;

  Cycle() = default;
  explicit Cycle(std::vector<vertex_t> vs) : vertices(std::move(vs)) { canonicalize(); }

  std::size_t length() const { return vertices.size(); }

  vertex_t at(std::size_t i) const { return vertices[i % vertices.size()]; }

  Edge edge(std::size_t i) const { return Edge(at(i), at(i + 1)); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) out.push_back(edge(i));
    return out;
  }

  VertexSet vertex_set() const { return make_vertex_set(vertices); }

  bool contains_edge(const Edge& e) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (edge(i) == e) return true;
    return false;
  }

  // Vertex opposite position i (even length only).
  vertex_t opposite(std::size_t i) const { return at(i + vertices.size() / 2); }

  // Distance between two positions along the cycle.
  int arc_distance(std::size_t i, std::size_t j) const {
    int n = static_cast<int>(vertices.size());
    int d = std::abs(static_cast<int>(i) - static_cast<int>(j)) % n;
    return std::min(d, n - d);
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  void canonicalize() {
    const std::size_t n = vertices.size();
    if (n == 0) return;
    std::vector<vertex_t> best = vertices;
    std::vector<vertex_t> cur(n);
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t idx = dir == 0 ? (s + i) % n : (s + n - i) % n;
          cur[i] = vertices[idx];
        }
        if (cur < best) best = cur;
      }
    }
    vertices = best;
  }
};

// Metadata for graphs that are finite balls of infinite graphs. Universal
// checks then only quantify over the interior; see recognize.hpp.
struct BallInfo {
  vertex_t center = 0;
  int radius = 0;
};

// Finite simple undirected graph with precomputed metric primitives.
// Immutable after construction; all query results are value snapshots, and
// a const Graph is safe to share across concurrent readers.
class Graph {
 public:
  // All-pairs distances are cached up to this vertex count and computed per
  // query above it.
  static constexpr int kDistanceCacheCap = 20000;

  Graph() = default;

  Graph(int vertex_count, const std::vector<Edge>& edges,
        std::optional<BallInfo> ball = std::nullopt)
      : n_(vertex_count), ball_(ball) {
    if (vertex_count < 0) throw input_error("negative vertex count");
    adj_.assign(n_, {});
    std::set<Edge> seen;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n_) throw input_error("edge endpoint out of range");
      if (e.u == e.v) throw input_error("self-loop not allowed");
      if (!seen.insert(e).second) continue;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edges_.assign(seen.begin(), seen.end());
    if (ball_ && (ball_->center < 0 || ball_->center >= n_))
      throw input_error("ball center out of range");
    if (n_ <= kDistanceCacheCap) build_distance_cache();
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<vertex_t>& neighbors(vertex_t x) const { return adj_.at(x); }
  int degree(vertex_t x) const { return static_cast<int>(adj_.at(x).size()); }

  bool adjacent(vertex_t x, vertex_t y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) return false;
    const auto& nb = adj_[x];
    return std::binary_search(nb.begin(), nb.end(), y);
  }

  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  const std::optional<BallInfo>& ball() const { return ball_; }

  // Shortest-path distance, or `unreachable` when no path exists.
  int distance_or(vertex_t x, vertex_t y, int unreachable = -1) const {
    check_vertex(x);
    check_vertex(y);
    int d = dist(x, y);
    return d < 0 ? unreachable : d;
  }

  int distance(vertex_t x, vertex_t y) const {
    int d = distance_or(x, y);
    if (d < 0) throw input_error("unreachable vertex pair");
    return d;
  }

  // Interval I(x,y): vertices on some geodesic between x and y.
  VertexSet interval(vertex_t x, vertex_t y) const {
    int d = distance(x, y);
    VertexSet out;
    for (vertex_t z = 0; z < n_; ++z) {
      int a = dist(x, z), b = dist(z, y);
      if (a >= 0 && b >= 0 && a + b == d) out.push_back(z);
    }
    return out;
  }

  bool in_interval(vertex_t z, vertex_t x, vertex_t y) const {
    int d = dist(x, y), a = dist(x, z), b = dist(z, y);
    return d >= 0 && a >= 0 && b >= 0 && a + b == d;
  }

  bool connected() const {
    if (n_ == 0) return true;
    auto row = bfs_row(0);
    return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
  }

  bool bipartite() const {
    std::vector<int> color(n_, -1);
    for (vertex_t s = 0; s < n_; ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::queue<vertex_t> q;
      q.push(s);
      while (!q.empty()) {
        vertex_t x = q.front();
        q.pop();
        for (vertex_t y : adj_[x]) {
          if (color[y] < 0) {
            color[y] = 1 - color[x];
            q.push(y);
          } else if (color[y] == color[x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Largest finite pairwise distance.
  int diameter() const {
    int d = 0;
    for (vertex_t x = 0; x < n_; ++x) {
      auto row = row_view(x);
      for (vertex_t y = x + 1; y < n_; ++y) d = std::max(d, row[y]);
    }
    return d;
  }

  // True iff for all x,y in s, I(x,y) is contained in s.
  bool is_convex(const VertexSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto row = row_view(s[i]);
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        int d = row[s[j]];
        if (d < 0) return false;
        auto rj = row_view(s[j]);
        for (vertex_t z = 0; z < n_; ++z)
          if (row[z] >= 0 && rj[z] >= 0 && row[z] + rj[z] == d && !set_contains(s, z))
            return false;
      }
    }
    return true;
  }

  // The gate of x in s: the vertex y of s with y in I(x,z) for every z in s.
  // Empty optional when no gate exists.
  std::optional<vertex_t> gate(const VertexSet& s, vertex_t x) const {
    if (s.empty()) throw input_error("gate of empty set");
    check_vertex(x);
    auto row = row_view(x);
    vertex_t best = -1;
    int best_d = -1;
    bool unique = true;
    for (vertex_t y : s) {
      int d = row[y];
      if (d < 0) return std::nullopt;
      if (best < 0 || d < best_d) {
        best = y;
        best_d = d;
        unique = true;
      } else if (d == best_d) {
        unique = false;
      }
    }
    if (!unique) return std::nullopt;
    auto rb = row_view(best);
    for (vertex_t z : s)
      if (!(row[z] >= 0 && best_d + rb[z] == row[z])) return std::nullopt;
    return best;
  }

  bool is_gated(const VertexSet& s) const {
    for (vertex_t x = 0; x < n_; ++x)
      if (!gate(s, x)) return false;
    return true;
  }

  // Image of a set under the gate map onto s; requires every gate to exist.
  VertexSet gate_image(const VertexSet& s, const VertexSet& from) const {
    std::vector<vertex_t> img;
    for (vertex_t x : from) {
      auto g = gate(s, x);
      if (!g) throw input_error("no gate onto subgraph from vertex " + std::to_string(x));
      img.push_back(*g);
    }
    return make_vertex_set(std::move(img));
  }

  // All maximal complete subgraphs, deterministically ordered.
  std::vector<VertexSet> cliques() const {
    std::vector<VertexSet> out;
    if (n_ == 0) return out;
    VertexSet r, p, x;
    for (vertex_t v = 0; v < n_; ++v) p.push_back(v);
    bron_kerbosch(r, std::move(p), std::move(x), out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  // All 3-cycles, each listed once as a sorted triple.
  std::vector<std::array<vertex_t, 3>> triangles() const {
    std::vector<std::array<vertex_t, 3>> out;
    for (const Edge& e : edges_) {
      for (vertex_t w : adj_[e.v]) {
        if (w <= e.v) continue;
        if (adjacent(e.u, w)) out.push_back({e.u, e.v, w});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Default cycle-length cap: no convex cycle can be longer than twice the
  // diameter, so this cap is exhaustive on finite graphs.
  int default_max_cycle_length() const { return std::max(4, 2 * diameter()); }

  // Every convex cycle of even length in [4, max_len], each once up to
  // rotation/reflection. Candidates are enumerated by DFS with
  // isometric-embedding pruning, then filtered by the full convexity test.
  std::vector<Cycle> convex_even_cycles(int max_len = 0) const {
    if (max_len == 0) max_len = default_max_cycle_length();
    if (max_len < 4) throw input_error("max_len must be at least 4");
    std::vector<Cycle> out;
    std::vector<vertex_t> path;
    for (int len = 4; len <= max_len; len += 2) {
      for (vertex_t v0 = 0; v0 < n_; ++v0) {
        path.assign(1, v0);
        extend_isometric(path, len, out);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  enum class Pattern { k4_minus, k32 };

  // A vertex set inducing the pattern, or absent.
  std::optional<VertexSet> find_induced(Pattern pattern) const {
    switch (pattern) {
      case Pattern::k4_minus:
        // Two 3-cycles glued along an edge: an edge with two non-adjacent
        // common neighbours.
        for (const Edge& e : edges_) {
          VertexSet common = set_intersection(adj_[e.u], adj_[e.v]);
          for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
              if (!adjacent(common[i], common[j]))
                return make_vertex_set({e.u, e.v, common[i], common[j]});
        }
        return std::nullopt;
      case Pattern::k32:
        // Two non-adjacent vertices with three pairwise non-adjacent common
        // neighbours.
        for (vertex_t a = 0; a < n_; ++a)
          for (vertex_t b = a + 1; b < n_; ++b) {
            if (adjacent(a, b)) continue;
            VertexSet common = set_intersection(adj_[a], adj_[b]);
            for (std::size_t i = 0; i < common.size(); ++i)
              for (std::size_t j = i + 1; j < common.size(); ++j) {
                if (adjacent(common[i], common[j])) continue;
                for (std::size_t k = j + 1; k < common.size(); ++k)
                  if (!adjacent(common[i], common[k]) && !adjacent(common[j], common[k]))
                    return make_vertex_set({a, b, common[i], common[j], common[k]});
              }
          }
        return std::nullopt;
    }
    throw input_error("unknown pattern");
  }

  // Connected components after deleting the given edges (vertices kept),
  // ordered by smallest contained vertex.
  std::vector<VertexSet> components_without_edges(const std::set<Edge>& removed) const {
    std::vector<int> comp(n_, -1);
    std::vector<VertexSet> out;
    for (vertex_t s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      int id = static_cast<int>(out.size());
      comp[s] = id;
      out.push_back({s});
      std::queue<vertex_t> q;
      q.push(s);
      while (!q.empty()) {
        vertex_t x = q.front();
        q.pop();
        for (vertex_t y : adj_[x]) {
          if (comp[y] >= 0 || removed.count(Edge(x, y))) continue;
          comp[y] = id;
          out[id].push_back(y);
          q.push(y);
        }
      }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
  }

  // Induced subgraph on a sorted vertex set; vertex i of the result is s[i].
  Graph induced(const VertexSet& s) const {
    std::vector<int> idx(n_, -1);
    for (std::size_t i = 0; i < s.size(); ++i) idx[s[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
      if (idx[e.u] >= 0 && idx[e.v] >= 0) es.emplace_back(idx[e.u], idx[e.v]);
    return Graph(static_cast<int>(s.size()), es);
  }

  Graph with_ball(BallInfo info) const { return Graph(n_, edges_, info); }

  // Fresh BFS distances from s (-1 for unreachable).
  std::vector<int> bfs_row(vertex_t s) const {
    std::vector<int> row(n_, -1);
    row[s] = 0;
    std::queue<vertex_t> q;
    q.push(s);
    while (!q.empty()) {
      vertex_t x = q.front();
      q.pop();
      for (vertex_t y : adj_[x])
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          q.push(y);
        }
    }
    return row;
  }

 private:
  // Distance row, from the cache when available.
  class RowView {
   public:
    explicit RowView(const std::vector<int>* cached) : cached_(cached) {}
    explicit RowView(std::vector<int> owned) : owned_(std::move(owned)) {}
    int operator[](vertex_t y) const { return cached_ ? (*cached_)[y] : owned_[y]; }
    auto begin() const { return cached_ ? cached_->begin() : owned_.begin(); }
    auto end() const { return cached_ ? cached_->end() : owned_.end(); }

   private:
    const std::vector<int>* cached_ = nullptr;
    std::vector<int> owned_;
  };

  RowView row_view(vertex_t x) const {
    if (!dist_.empty()) return RowView(&dist_[x]);
    return RowView(bfs_row(x));
  }

  int dist(vertex_t x, vertex_t y) const {
    if (!dist_.empty()) return dist_[x][y];
    return bfs_row(x)[y];
  }

  void check_vertex(vertex_t x) const {
    if (x < 0 || x >= n_) throw input_error("vertex id out of range: " + std::to_string(x));
  }

  void build_distance_cache() {
    dist_.resize(n_);
    for (vertex_t s = 0; s < n_; ++s) dist_[s] = bfs_row(s);
  }

  void bron_kerbosch(VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) const {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    vertex_t pivot = -1;
    std::size_t best = 0;
    for (vertex_t v : p) {
      std::size_t c = set_intersection(p, adj_[v]).size();
      if (pivot < 0 || c > best) {
        pivot = v;
        best = c;
      }
    }
    for (vertex_t v : x) {
      std::size_t c = set_intersection(p, adj_[v]).size();
      if (c > best) {
        pivot = v;
        best = c;
      }
    }
    VertexSet candidates;
    for (vertex_t v : p)
      if (pivot < 0 || !adjacent(pivot, v)) candidates.push_back(v);
    for (vertex_t v : candidates) {
      r.push_back(v);
      bron_kerbosch(r, set_intersection(p, adj_[v]), set_intersection(x, adj_[v]), out);
      r.pop_back();
      p.erase(std::remove(p.begin(), p.end(), v), p.end());
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  // Grow a path that embeds isometrically into a cycle of the target even
  // length; abort any prefix whose endpoints are closer in the graph than
  // along the cycle.
  void extend_isometric(std::vector<vertex_t>& path, int len, std::vector<Cycle>& out) const {
    int k = static_cast<int>(path.size());
    if (k == len) {
      // Closure of the cycle is implied by the distance constraint at i = 0.
      // Keep one traversal direction to deduplicate reflections.
      if (path[1] < path[len - 1]) {
        Cycle c(path);
        if (is_convex(c.vertex_set())) out.push_back(std::move(c));
      }
      return;
    }
    for (vertex_t w : adj_[path[k - 1]]) {
      if (w <= path[0]) continue;  // path[0] is the cycle minimum
      bool ok = true;
      for (int i = 0; i + 1 < k && ok; ++i) {
        int want = std::min(k - i, len - (k - i));
        ok = dist(path[i], w) == want;
      }
      if (!ok) continue;
      path.push_back(w);
      extend_isometric(path, len, out);
      path.pop_back();
    }
  }

  int n_ = 0;
  std::vector<std::vector<vertex_t>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> dist_;
  std::optional<BallInfo> ball_;
};

}  // namespace mediangle
