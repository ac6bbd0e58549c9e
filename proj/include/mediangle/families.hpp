#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "mediangle/cayley.hpp"
#include "mediangle/graph.hpp"
#include "mediangle/recognize.hpp"

namespace mediangle {

// Deterministic generators for the example corpus. Vertex numbering is
// lexicographic in each family's natural coordinates, so outputs are
// byte-stable across runs.

inline Graph complete_graph(int n) {
  if (n < 1) throw input_error("complete_graph: n must be >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph path_graph(int n) {
  if (n < 1) throw input_error("path: n must be >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph even_cycle(int len) {
  if (len < 4 || len % 2 != 0) throw input_error("even_cycle: length must be even and >= 4");
  std::vector<Edge> es;
  for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
  return Graph(len, es);
}

// Cayley graph of the dihedral group of order 2m with two standard
// reflections: the 2m-cycle.
inline Graph coxeter_dihedral(int m) {
  if (m < 2) throw input_error("coxeter_dihedral: m must be >= 2");
  return even_cycle(2 * m);
}

inline Graph hypercube(int dim) {
  if (dim < 0 || dim > 20) throw input_error("hypercube: dimension out of range");
  int n = 1 << dim;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) es.emplace_back(v, v | (1 << b));
  return Graph(n, es);
}

// Cartesian product of complete graphs of the given sizes.
inline Graph hamming(const std::vector<int>& sizes) {
  if (sizes.empty()) throw input_error("hamming: need at least one factor");
  long long n = 1;
  for (int k : sizes) {
    if (k < 1) throw input_error("hamming: factor sizes must be >= 1");
    n *= k;
    if (n > 2000000) throw input_error("hamming: graph too large");
  }
  auto decode = [&](int v) {
    std::vector<int> c(sizes.size());
    for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
      c[i] = v % sizes[i];
      v /= sizes[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) v = v * sizes[i] + c[i];
    return v;
  };
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) {
    auto c = decode(v);
    for (std::size_t i = 0; i < sizes.size(); ++i)
      for (int k = c[i] + 1; k < sizes[i]; ++k) {
        auto d = c;
        d[i] = k;
        es.emplace_back(v, encode(d));
      }
  }
  return Graph(static_cast<int>(n), es);
}

// Cartesian product; vertex (i, j) gets id i * |h| + j.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  int n = g.vertex_count() * h.vertex_count();
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    for (int j = 0; j < h.vertex_count(); ++j)
      es.emplace_back(e.u * h.vertex_count() + j, e.v * h.vertex_count() + j);
  for (const Edge& e : h.edges())
    for (int i = 0; i < g.vertex_count(); ++i)
      es.emplace_back(i * h.vertex_count() + e.u, i * h.vertex_count() + e.v);
  return Graph(n, es);
}

enum class TreeShape { path, star, heap };

inline Graph tree(TreeShape shape, int n) {
  if (n < 1) throw input_error("tree: n must be >= 1");
  std::vector<Edge> es;
  switch (shape) {
    case TreeShape::path:
      return path_graph(n);
    case TreeShape::star:
      for (int i = 1; i < n; ++i) es.emplace_back(0, i);
      return Graph(n, es);
    case TreeShape::heap:
      for (int i = 1; i < n; ++i) es.emplace_back(i, (i - 1) / 2);
      return Graph(n, es);
  }
  throw input_error("tree: unknown shape");
}

// One-skeleton of a 3-cube minus a vertex: a wheel of three 4-cycles. A
// small-cancellation C(6)-T(3) complex whose one-skeleton fails the cycle
// condition.
inline Graph cube_minus_vertex() {
  Graph q3 = hypercube(3);
  VertexSet keep;
  for (int v = 0; v < 7; ++v) keep.push_back(v);  // drop vertex 7 = 111
  return q3.induced(keep);
}

// Complete Cayley graph of the type A_n Coxeter group (S_{n+1}).
inline Graph coxeter_cayley_a(int n) {
  CayleyBall ball = cayley_ball(coxeter_a_presentation(n), -1, 50000);
  return ball.graph;
}

// Ball of a graph-product Cayley graph (all labels 2); ball metadata is
// attached when the radius truncates the group.
inline Graph graph_product_ball(const Presentation& p, int radius) {
  for (const auto& e : p.edges)
    if (e.lambda != 2) throw input_error("graph_product_ball requires all labels 2");
  CayleyBall ball = cayley_ball(p, radius);
  if (ball.complete) return ball.graph;
  return ball.graph.with_ball({0, radius});
}

// Radius-r ball of the hexagonal tiling of the plane: the Cayley graph of
// the (3,3,3) triangle Coxeter group. Always in ball mode; it exists to
// exercise interior-only checking and the non-gated-sector phenomenon.
inline Graph hexagonal_tiling_ball(int r) {
  if (r < 1) throw input_error("hexagonal_tiling_ball: radius must be >= 1");
  CayleyBall ball = cayley_ball(triangle_333_presentation(), r, 100000);
  return ball.graph.with_ball({0, r});
}

// A generated corpus member with its expected recognition labels.
struct GeneratedExample {
  std::string name;
  Graph graph;
  LabelSet expected;
  bool ball_mode = false;
  CheckOptions options;  // cycle cap / margin to recognize with
};

inline LabelSet all_labels() { return {true, true, true, true}; }

inline LabelSet combine_product_labels(const LabelSet& a, const LabelSet& b) {
  return {a.median && b.median, a.quasi_median && b.quasi_median,
          a.mediangle && b.mediangle, a.bipartite_mediangle && b.bipartite_mediangle};
}

// The standard desk-scale corpus used by the verification suites.
inline std::vector<GeneratedExample> standard_corpus() {
  std::vector<GeneratedExample> out;
  auto add = [&](std::string name, Graph g, LabelSet labels, bool ball = false,
                 CheckOptions opts = {}) {
    out.push_back({std::move(name), std::move(g), labels, ball, opts});
  };
  for (int n = 1; n <= 4; ++n)
    add("hypercube(" + std::to_string(n) + ")", hypercube(n), all_labels());
  add("tree(path,50)", tree(TreeShape::path, 50), all_labels());
  add("tree(star,30)", tree(TreeShape::star, 30), all_labels());
  add("tree(heap,50)", tree(TreeShape::heap, 50), all_labels());
  add("hamming(2,3)", hamming({2, 3}), {false, true, true, false});
  add("hamming(3,3)", hamming({3, 3}), {false, true, true, false});
  add("complete(4)", complete_graph(4), {false, true, true, false});
  for (int m : {3, 4, 5}) {
    add("coxeter_dihedral(" + std::to_string(m) + ")", coxeter_dihedral(m),
        {false, false, true, true});
  }
  add("prism", cartesian_product(complete_graph(3), complete_graph(2)),
      {false, true, true, false});
  add("C6xK2", cartesian_product(even_cycle(6), complete_graph(2)),
      {false, false, true, true});
  add("C8xK2", cartesian_product(even_cycle(8), complete_graph(2)),
      {false, false, true, true});
  add("C6xK3", cartesian_product(even_cycle(6), complete_graph(3)),
      {false, false, true, false});
  add("C6xC8", cartesian_product(even_cycle(6), even_cycle(8)),
      {false, false, true, true});
  // Convex cycles of a cycle product are the fibre cycles and the squares,
  // so a cap of 10 is exhaustive here; the default 2*diameter cap would
  // make the enumerator wade through isometric staircase cycles.
  add("C10xC10", cartesian_product(even_cycle(10), even_cycle(10)),
      {false, false, true, true}, false, CheckOptions{.max_len = 10});
  add("coxeter_cayley(A3)", coxeter_cayley_a(3), {false, false, true, true});
  // Convex cycles in type A are the dihedral 4- and 6-cycles, so the cap 6
  // is exhaustive; the order-120 graph exercises the suites at scale.
  add("coxeter_cayley(A4)", coxeter_cayley_a(4), {false, false, true, true}, false,
      CheckOptions{.max_len = 6});
  add("cube_minus_vertex", cube_minus_vertex(), {false, false, false, false});
  // The tiling's convex cycles are its hexagon faces; a radius-6 ball makes
  // the interior deep enough to contain one.
  add("hexagonal_tiling_ball(6)", hexagonal_tiling_ball(6), {false, false, true, true}, true,
      CheckOptions{.max_len = 6});
  return out;
}

}  // namespace mediangle
