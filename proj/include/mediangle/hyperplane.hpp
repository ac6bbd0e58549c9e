#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mediangle/graph.hpp"

namespace mediangle {

// Equivalence class of edges under the closure of "same 3-cycle" and
// "opposite in a convex even cycle".
struct Hyperplane {
  int id = -1;
  std::vector<Edge> edges;  // sorted
};

struct SectorDecomposition {
  int hyperplane = -1;
  std::vector<VertexSet> sectors;  // ordered by smallest contained vertex
};

struct CarrierDecomposition {
  int hyperplane = -1;
  VertexSet carrier;
  std::vector<VertexSet> fibres;
  bool degenerate = false;  // the hyperplane crosses no even cycle
};

// Exact rational multiple of pi: value = num/den * pi, coprime.
struct Angle {
  long long num = 0;
  long long den = 1;

  static Angle of(long long n, long long d) {
    long long g = std::gcd(n, d);
    return {n / g, d / g};
  }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(const Angle&, const Angle&) = default;
};

// pi / angle, defined only when integral and >= 2.
inline std::optional<int> dihedral_label_from_angle(const Angle& a) {
  if (a.num != 1) return std::nullopt;
  if (a.den < 2) return std::nullopt;
  return static_cast<int>(a.den);
}

struct BigHypViolation {
  std::string item;  // "separation", "sector-convexity", "geodesic-crossings", "distance-count"
  std::string detail;
  std::vector<vertex_t> vertices;
  int hyperplane = -1;
};

struct BigHypReport {
  std::vector<BigHypViolation> violations;
  int hyperplane_count = 0;
  int max_len_used = 0;
  bool pass() const { return violations.empty(); }
};

// Hyperplanes of a graph together with their sector structure. Computed
// once per graph; queries are read-only and safe for concurrent use.
class HyperplaneArrangement {
 public:
  explicit HyperplaneArrangement(Graph g, int max_len = 0)
      : g_(std::move(g)), max_len_(max_len > 0 ? max_len : g_.default_max_cycle_length()) {
    cycles_ = g_.convex_even_cycles(max_len_);
    cliques_ = g_.cliques();
    build_classes();
    build_sectors();
    index_cycles();
  }

  const Graph& graph() const { return g_; }
  int max_len_used() const { return max_len_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  int count() const { return static_cast<int>(hyperplanes_.size()); }

  int class_of(const Edge& e) const {
    auto it = edge_class_.find(e);
    if (it == edge_class_.end()) throw input_error("edge not in graph");
    return it->second;
  }

  const Hyperplane& hyperplane(int id) const {
    if (id < 0 || id >= count()) throw input_error("hyperplane id out of range");
    return hyperplanes_[id];
  }

  SectorDecomposition sectors(int id) const {
    return {id, sectors_[check_id(id)]};
  }

  int sector_of(int id, vertex_t x) const { return sector_index_[check_id(id)][x]; }

  bool separates(int id, vertex_t x, vertex_t y) const {
    return sector_of(id, x) != sector_of(id, y);
  }

  std::vector<int> separating_hyperplanes(vertex_t x, vertex_t y) const {
    std::vector<int> out;
    for (int id = 0; id < count(); ++id)
      if (separates(id, x, y)) out.push_back(id);
    return out;
  }

  // Cliques of the graph all of whose edges lie in the hyperplane.
  std::vector<VertexSet> cliques_of(int id) const {
    std::vector<VertexSet> out;
    for (const auto& c : cliques_) {
      if (c.size() < 2) continue;
      bool inside = true;
      for (std::size_t i = 0; i < c.size() && inside; ++i)
        for (std::size_t j = i + 1; j < c.size() && inside; ++j)
          inside = edge_class_.at(Edge(c[i], c[j])) == id;
      if (inside) out.push_back(c);
    }
    return out;
  }

  // Union of the convex cycles (3-cycles and convex even cycles) crossing
  // the hyperplane; fibres are the components of the carrier without the
  // hyperplane's edges.
  CarrierDecomposition carrier(int id) const {
    check_id(id);
    std::vector<vertex_t> verts;
    bool crosses_even_cycle = false;
    for (const Cycle& c : cycles_) {
      bool touches = false;
      for (const Edge& e : c.edges())
        if (edge_class_.at(e) == id) {
          touches = true;
          break;
        }
      if (touches) {
        crosses_even_cycle = true;
        for (vertex_t v : c.vertices) verts.push_back(v);
      }
    }
    for (const auto& t : g_.triangles()) {
      if (edge_class_.at(Edge(t[0], t[1])) == id) {
        verts.push_back(t[0]);
        verts.push_back(t[1]);
        verts.push_back(t[2]);
      }
    }
    if (verts.empty())
      for (const Edge& e : hyperplanes_[id].edges) {
        verts.push_back(e.u);
        verts.push_back(e.v);
      }
    CarrierDecomposition out;
    out.hyperplane = id;
    out.carrier = make_vertex_set(std::move(verts));
    out.degenerate = !crosses_even_cycle;
    // Components of the carrier subgraph minus the hyperplane's edges.
    Graph sub = g_.induced(out.carrier);
    std::set<Edge> removed;
    for (const Edge& e : hyperplanes_[id].edges) {
      if (!set_contains(out.carrier, e.u) || !set_contains(out.carrier, e.v)) continue;
      auto iu = std::lower_bound(out.carrier.begin(), out.carrier.end(), e.u);
      auto iv = std::lower_bound(out.carrier.begin(), out.carrier.end(), e.v);
      removed.insert(Edge(static_cast<int>(iu - out.carrier.begin()),
                          static_cast<int>(iv - out.carrier.begin())));
    }
    for (const auto& comp : sub.components_without_edges(removed)) {
      VertexSet fibre;
      for (vertex_t v : comp) fibre.push_back(out.carrier[v]);
      out.fibres.push_back(std::move(fibre));
    }
    return out;
  }

  // Hyperplane ids crossing the given convex even cycle.
  const std::vector<int>& hyperplanes_of_cycle(int cycle_index) const {
    return cycle_classes_[cycle_index];
  }

  // Cycles crossed by both hyperplanes.
  std::vector<int> shared_cycles(int j1, int j2) const {
    check_id(j1);
    check_id(j2);
    std::vector<int> out;
    for (int ci = 0; ci < static_cast<int>(cycles_.size()); ++ci) {
      const auto& cls = cycle_classes_[ci];
      bool a = std::find(cls.begin(), cls.end(), j1) != cls.end();
      bool b = std::find(cls.begin(), cls.end(), j2) != cls.end();
      if (a && b) out.push_back(ci);
    }
    return out;
  }

  bool transverse(int j1, int j2) const {
    if (j1 == j2) throw input_error("transversality of identical hyperplanes");
    return !shared_cycles(j1, j2).empty();
  }

  // Angle at one cycle: 2 pi (1 + d(J1 on C, J2 on C)) / length(C), where d
  // is the smallest distance along C between an endpoint of a J1-edge and
  // an endpoint of a J2-edge.
  Angle angle_at(int cycle_index, int j1, int j2) const {
    const Cycle& c = cycles_[cycle_index];
    const int n = static_cast<int>(c.length());
    std::vector<int> p1, p2;
    for (int i = 0; i < n; ++i) {
      int cls = edge_class_.at(c.edge(i));
      if (cls == j1) {
        p1.push_back(i);
        p1.push_back((i + 1) % n);
      }
      if (cls == j2) {
        p2.push_back(i);
        p2.push_back((i + 1) % n);
      }
    }
    if (p1.empty() || p2.empty()) throw input_error("hyperplane does not cross the cycle");
    int d = n;
    for (int a : p1)
      for (int b : p2) d = std::min(d, c.arc_distance(a, b));
    return Angle::of(2 * (1 + d), n);
  }

  // Angle between transverse hyperplanes; verifies that all shared cycles
  // agree as the angle is independent of the chosen cycle on mediangle
  // graphs, and raises a property error on disagreement.
  Angle angle(int j1, int j2) const {
    auto shared = shared_cycles(j1, j2);
    if (j1 == j2) throw input_error("angle of identical hyperplanes");
    if (shared.empty()) throw input_error("hyperplanes are not transverse");
    Angle first = angle_at(shared[0], j1, j2);
    for (std::size_t k = 1; k < shared.size(); ++k) {
      Angle a = angle_at(shared[k], j1, j2);
      if (!(a == first))
        throw property_error("angle disagrees between shared cycles; input is not mediangle");
    }
    return first;
  }

  BigHypReport verify_bighyp(unsigned rng_seed = 0x5eed) const {
    BigHypReport rep;
    rep.hyperplane_count = count();
    rep.max_len_used = max_len_;
    const int n = g_.vertex_count();

    // (i) hyperplanes separate the vertices of their cliques, and every
    // sector meets every clique of the hyperplane.
    for (int id = 0; id < count(); ++id) {
      for (const auto& c : cliques_of(id)) {
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!separates(id, c[i], c[j]))
              rep.violations.push_back({"separation",
                                        "clique vertices not separated by their hyperplane",
                                        {c[i], c[j]},
                                        id});
        std::set<int> met;
        for (vertex_t v : c) met.insert(sector_of(id, v));
        if (met.size() != sectors_[id].size())
          rep.violations.push_back(
              {"separation", "some sector misses the clique", c, id});
      }
    }

    // (ii) sectors are convex.
    for (int id = 0; id < count(); ++id)
      for (const auto& s : sectors_[id])
        if (!g_.is_convex(s))
          rep.violations.push_back({"sector-convexity", "sector is not convex", s, id});

    // (iii) geodesics cross every hyperplane at most once, and distance
    // equals the number of separating hyperplanes.
    std::mt19937 rng(rng_seed);
    for (vertex_t x = 0; x < n; ++x) {
      auto row = g_.bfs_row(x);
      for (vertex_t y = x + 1; y < n; ++y) {
        if (row[y] < 0) continue;
        int sep = static_cast<int>(separating_hyperplanes(x, y).size());
        if (sep != row[y])
          rep.violations.push_back({"distance-count",
                                    "distance " + std::to_string(row[y]) + " but " +
                                        std::to_string(sep) + " separating hyperplanes",
                                    {x, y},
                                    -1});
        // One BFS-tree geodesic plus random alternatives.
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<vertex_t> path;
          vertex_t cur = y;
          path.push_back(cur);
          while (cur != x) {
            std::vector<vertex_t> down;
            for (vertex_t w : g_.neighbors(cur))
              if (row[w] == row[cur] - 1) down.push_back(w);
            cur = trial == 0 ? down.front() : down[rng() % down.size()];
            path.push_back(cur);
          }
          std::map<int, int> crossings;
          bool bad = false;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int id = edge_class_.at(Edge(path[i], path[i + 1]));
            if (++crossings[id] > 1) {
              rep.violations.push_back(
                  {"geodesic-crossings", "geodesic crosses a hyperplane twice", path, id});
              bad = true;
              break;
            }
          }
          if (bad) break;
        }
      }
    }
    return rep;
  }

 private:
  int check_id(int id) const {
    if (id < 0 || id >= count()) throw input_error("hyperplane id out of range");
    return id;
  }

  void build_classes() {
    const auto& edges = g_.edges();
    std::map<Edge, int> index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
    std::vector<int> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& t : g_.triangles()) {
      int e01 = index.at(Edge(t[0], t[1]));
      unite(e01, index.at(Edge(t[0], t[2])));
      unite(e01, index.at(Edge(t[1], t[2])));
    }
    for (const Cycle& c : cycles_) {
      const std::size_t half = c.length() / 2;
      for (std::size_t i = 0; i < half; ++i)
        unite(index.at(c.edge(i)), index.at(c.edge(i + half)));
    }
    std::map<int, std::vector<Edge>> classes;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
      classes[find(i)].push_back(edges[i]);
    // Classes ordered by smallest edge; edges within a class are sorted.
    std::vector<std::vector<Edge>> ordered;
    for (auto& [root, es] : classes) {
      std::sort(es.begin(), es.end());
      ordered.push_back(std::move(es));
    }
    std::sort(ordered.begin(), ordered.end());
    for (int id = 0; id < static_cast<int>(ordered.size()); ++id) {
      for (const Edge& e : ordered[id]) edge_class_[e] = id;
      hyperplanes_.push_back({id, std::move(ordered[id])});
    }
  }

  void build_sectors() {
    sectors_.resize(count());
    sector_index_.assign(count(), std::vector<int>(g_.vertex_count(), -1));
    for (int id = 0; id < count(); ++id) {
      std::set<Edge> removed(hyperplanes_[id].edges.begin(), hyperplanes_[id].edges.end());
      sectors_[id] = g_.components_without_edges(removed);
      for (int si = 0; si < static_cast<int>(sectors_[id].size()); ++si)
        for (vertex_t v : sectors_[id][si]) sector_index_[id][v] = si;
    }
  }

  void index_cycles() {
    cycle_classes_.resize(cycles_.size());
    for (int ci = 0; ci < static_cast<int>(cycles_.size()); ++ci) {
      std::set<int> cls;
      for (const Edge& e : cycles_[ci].edges()) cls.insert(edge_class_.at(e));
      cycle_classes_[ci].assign(cls.begin(), cls.end());
    }
  }

  Graph g_;
  int max_len_;
  std::vector<Cycle> cycles_;
  std::vector<VertexSet> cliques_;
  std::vector<Hyperplane> hyperplanes_;
  std::map<Edge, int> edge_class_;
  std::vector<std::vector<VertexSet>> sectors_;
  std::vector<std::vector<int>> sector_index_;
  std::vector<std::vector<int>> cycle_classes_;
};

struct EmbeddingReport {
  bool pass = true;
  int factor_count = 0;
  std::vector<vertex_t> witness;  // a pair whose distance is not preserved
};

// One gated clique per hyperplane; the map sending a vertex to its tuple of
// gates embeds the graph isometrically into the product of those cliques.
// Verified exactly on finite graphs.
inline EmbeddingReport check_complete_graph_embedding(const HyperplaneArrangement& arr) {
  const Graph& g = arr.graph();
  EmbeddingReport rep;
  rep.factor_count = arr.count();
  std::vector<VertexSet> factor;
  for (int id = 0; id < arr.count(); ++id) {
    auto cliques = arr.cliques_of(id);
    if (!cliques.empty()) {
      factor.push_back(cliques.front());
    } else {
      const Edge& e = arr.hyperplane(id).edges.front();
      factor.push_back({e.u, e.v});
    }
  }
  const int n = g.vertex_count();
  std::vector<std::vector<vertex_t>> image(n, std::vector<vertex_t>(arr.count()));
  for (vertex_t x = 0; x < n; ++x)
    for (int id = 0; id < arr.count(); ++id) {
      auto gt = g.gate(factor[id], x);
      if (!gt) {
        rep.pass = false;
        rep.witness = {x};
        return rep;
      }
      image[x][id] = *gt;
    }
  for (vertex_t x = 0; x < n; ++x)
    for (vertex_t y = x + 1; y < n; ++y) {
      int hamming = 0;
      for (int id = 0; id < arr.count(); ++id) hamming += image[x][id] != image[y][id];
      if (hamming != g.distance(x, y)) {
        rep.pass = false;
        rep.witness = {x, y};
        return rep;
      }
    }
  return rep;
}

}  // namespace mediangle
