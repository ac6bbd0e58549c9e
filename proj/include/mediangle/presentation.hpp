#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mediangle/errors.hpp"
#include "mediangle/graph.hpp"

namespace mediangle {

// A vertex group: cyclic of finite order, infinite cyclic, or an explicit
// multiplication table with the identity at index 0. Elements are indices
// for finite groups and nonzero integers (exponents) for the infinite
// cyclic group.
struct GroupSpec {
  enum class Kind { cyclic, infinite_cyclic, table };

  Kind kind = Kind::cyclic;
  int cyclic_order = 2;
  std::vector<std::vector<int>> mult_table;

  static GroupSpec cyclic(int n) {
    if (n < 2) throw input_error("cyclic group order must be >= 2");
    GroupSpec g;
    g.kind = Kind::cyclic;
    g.cyclic_order = n;
    return g;
  }

  static GroupSpec infinite_cyclic() {
    GroupSpec g;
    g.kind = Kind::infinite_cyclic;
    return g;
  }

  static GroupSpec from_table(std::vector<std::vector<int>> table) {
    GroupSpec g;
    g.kind = Kind::table;
    g.mult_table = std::move(table);
    g.validate_table();
    return g;
  }

  bool finite() const { return kind != Kind::infinite_cyclic; }

  // 0 for the infinite cyclic group.
  long long order() const {
    switch (kind) {
      case Kind::cyclic: return cyclic_order;
      case Kind::infinite_cyclic: return 0;
      case Kind::table: return static_cast<long long>(mult_table.size());
    }
    return 0;
  }

  bool valid_element(long long e) const {
    if (kind == Kind::infinite_cyclic) return true;
    return e >= 0 && e < order();
  }

  long long mul(long long a, long long b) const {
    switch (kind) {
      case Kind::cyclic: return (a + b) % cyclic_order;
      case Kind::infinite_cyclic: return a + b;
      case Kind::table: return mult_table[a][b];
    }
    return 0;
  }

  long long inv(long long a) const {
    switch (kind) {
      case Kind::cyclic: return (cyclic_order - a) % cyclic_order;
      case Kind::infinite_cyclic: return -a;
      case Kind::table:
        for (long long b = 0; b < order(); ++b)
          if (mult_table[a][b] == 0) return b;
        throw input_error("element has no inverse");
    }
    return 0;
  }

  // Total order on elements used by canonical forms: finite groups by index,
  // the infinite cyclic group by (|n|, sign) so 1 < -1 < 2 < -2 < ...
  long long element_key(long long e) const {
    if (kind != Kind::infinite_cyclic) return e;
    return 2 * std::abs(e) - (e > 0 ? 1 : 0);
  }

  void validate_table() const {
    if (kind != Kind::table) return;
    const std::size_t n = mult_table.size();
    if (n < 2) throw input_error("group table must have order >= 2");
    for (const auto& row : mult_table) {
      if (row.size() != n) throw input_error("group table is not square");
      std::vector<bool> seen(n, false);
      for (int v : row) {
        if (v < 0 || v >= static_cast<int>(n) || seen[v])
          throw input_error("group table row is not a permutation");
        seen[v] = true;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        int v = mult_table[i][j];
        if (seen[v]) throw input_error("group table column is not a permutation");
        seen[v] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (mult_table[0][i] != static_cast<int>(i) || mult_table[i][0] != static_cast<int>(i))
        throw input_error("group table identity must sit at index 0");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mult_table[mult_table[a][b]][c] != mult_table[a][mult_table[b][c]])
            throw input_error("group table is not associative");
  }
};

// Small-order isomorphism test by backtracking over identity-preserving
// bijections. Only meant for the tiny vertex groups handled here.
inline bool groups_isomorphic(const GroupSpec& a, const GroupSpec& b) {
  if (a.finite() != b.finite()) return false;
  if (!a.finite()) return true;
  const int n = static_cast<int>(a.order());
  if (n != b.order()) return false;
  std::vector<int> map(n, -1), used(n, 0);
  map[0] = 0;
  used[0] = 1;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int img = 1; img < n; ++img) {
      if (used[img]) continue;
      map[i] = img;
      used[img] = 1;
      bool consistent = true;
      for (int x = 0; x <= i && consistent; ++x)
        for (int y = 0; y <= i && consistent; ++y) {
          long long p = a.mul(x, y);
          if (p <= i && b.mul(map[x], map[y]) != map[p]) consistent = false;
        }
      if (consistent && self(self, i + 1)) return true;
      used[img] = 0;
      map[i] = -1;
    }
    return false;
  };
  return rec(rec, 1);
}

// A letter of a word: a nontrivial element of one vertex group.
struct Syllable {
  int vertex = 0;
  long long element = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// Periagroup presentation: a decorated graph (gamma, lambda) plus vertex
// groups. Edges with label > 2 force both endpoint groups to have order two.
struct Presentation {
  struct LabelledEdge {
    int u = 0;
    int v = 0;
    int lambda = 2;
  };

  std::vector<GroupSpec> groups;
  std::vector<LabelledEdge> edges;

  Presentation() = default;
  Presentation(std::vector<GroupSpec> gs, std::vector<LabelledEdge> es)
      : groups(std::move(gs)), edges(std::move(es)) {
    lambda_.assign(groups.size(), std::vector<int>(groups.size(), 0));
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= vertex_count() || e.v >= vertex_count() || e.u == e.v)
        throw input_error("presentation edge endpoints invalid");
      if (lambda_[e.u][e.v] != 0) throw input_error("duplicate presentation edge");
      lambda_[e.u][e.v] = lambda_[e.v][e.u] = e.lambda;
    }
    validate();
  }

  int vertex_count() const { return static_cast<int>(groups.size()); }

  // 0 when u,v are not joined in gamma.
  int lambda(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
      throw input_error("presentation vertex out of range");
    return lambda_[u][v];
  }

  const GroupSpec& group(int u) const {
    if (u < 0 || u >= vertex_count()) throw input_error("presentation vertex out of range");
    return groups[u];
  }

  bool all_groups_finite() const {
    for (const auto& g : groups)
      if (!g.finite()) return false;
    return true;
  }

  bool coxeter_only() const {
    for (const auto& g : groups)
      if (g.order() != 2) return false;
    return true;
  }

  Graph gamma() const {
    std::vector<Edge> es;
    for (const auto& e : edges) es.emplace_back(e.u, e.v);
    return Graph(vertex_count(), es);
  }

  void validate() const {
    for (const auto& g : groups) {
      if (g.kind == GroupSpec::Kind::table) g.validate_table();
      if (g.finite() && g.order() < 2) throw input_error("vertex group order must be >= 2");
    }
    for (const auto& e : edges) {
      if (e.lambda < 2) throw input_error("edge label must be >= 2");
      if (e.lambda > 2 && (groups[e.u].order() != 2 || groups[e.v].order() != 2))
        throw input_error("edge label > 2 requires both vertex groups of order two");
    }
  }

  void check_syllable(const Syllable& s) const {
    if (s.vertex < 0 || s.vertex >= vertex_count())
      throw input_error("syllable vertex out of range");
    if (!groups[s.vertex].valid_element(s.element)) throw input_error("syllable element invalid");
  }

  void check_word(const Word& w) const {
    for (const auto& s : w) check_syllable(s);
  }

  // Ordering key for canonical forms.
  std::pair<int, long long> syllable_key(const Syllable& s) const {
    return {s.vertex, groups[s.vertex].element_key(s.element)};
  }

  bool word_less(const Word& a, const Word& b) const {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto ka = syllable_key(a[i]);
      auto kb = syllable_key(b[i]);
      if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
  }

 private:
  std::vector<std::vector<int>> lambda_;
};

// Convenience builders for common presentations.

// Two order-two generators with one edge: the dihedral group of order 2m.
inline Presentation dihedral_presentation(int m) {
  return Presentation({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}, {{0, 1, m}});
}

// Coxeter presentation of type A_n (the symmetric group S_{n+1}): a path of
// lambda = 3 edges, all other pairs commuting.
inline Presentation coxeter_a_presentation(int n) {
  if (n < 1) throw input_error("type A rank must be >= 1");
  std::vector<GroupSpec> gs(n, GroupSpec::cyclic(2));
  std::vector<Presentation::LabelledEdge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, j - i == 1 ? 3 : 2});
  return Presentation(std::move(gs), std::move(es));
}

// Coxeter presentation of the (3,3,3) triangle group; its Cayley graph is
// the hexagonal tiling of the plane.
inline Presentation triangle_333_presentation() {
  std::vector<GroupSpec> gs(3, GroupSpec::cyclic(2));
  return Presentation(std::move(gs), {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Graph product presentation: all edges labelled 2.
inline Presentation graph_product_presentation(std::vector<GroupSpec> gs,
                                               const std::vector<std::pair<int, int>>& edges) {
  std::vector<Presentation::LabelledEdge> es;
  for (auto [u, v] : edges) es.push_back({u, v, 2});
  return Presentation(std::move(gs), std::move(es));
}

}  // namespace mediangle
