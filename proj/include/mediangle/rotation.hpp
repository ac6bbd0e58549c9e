#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mediangle/cayley.hpp"
#include "mediangle/graph.hpp"
#include "mediangle/hyperplane.hpp"
#include "mediangle/presentation.hpp"

namespace mediangle {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// (a after b): apply b first.
inline Perm compose_perms(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm invert_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

inline bool is_graph_automorphism(const Graph& g, const Perm& p) {
  if (static_cast<int>(p.size()) != g.vertex_count()) return false;
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

// A finite graph with permutation generators; the generated group is
// enumerated explicitly up to element_cap.
struct GroupAction {
  Graph graph;
  std::vector<Perm> generators;
  long long element_cap = 1'000'000;
};

// Explicit element list of a permutation group, identity first, in
// breadth-first order over the generators.
class PermGroup {
 public:
  static PermGroup enumerate(const GroupAction& action) {
    for (const Perm& g : action.generators)
      if (!is_graph_automorphism(action.graph, g))
        throw input_error("generator is not a graph automorphism");
    PermGroup G;
    G.degree_ = action.graph.vertex_count();
    std::vector<Perm> gens = action.generators;
    for (const Perm& g : action.generators) gens.push_back(invert_perm(g));
    G.elements_.push_back(identity_perm(G.degree_));
    G.index_[G.elements_[0]] = 0;
    for (std::size_t head = 0; head < G.elements_.size(); ++head) {
      Perm cur = G.elements_[head];
      for (const Perm& g : gens) {
        Perm next = compose_perms(cur, g);
        if (!G.index_.count(next)) {
          if (static_cast<long long>(G.elements_.size()) >= action.element_cap)
            throw budget_error("group enumeration exceeds element cap");
          G.index_[next] = static_cast<int>(G.elements_.size());
          G.elements_.push_back(std::move(next));
        }
      }
    }
    return G;
  }

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& perm(int i) const { return elements_[i]; }

  int id_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw input_error("permutation outside the generated group");
    return it->second;
  }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  int mul(int a, int b) const { return id_of(compose_perms(elements_[a], elements_[b])); }
  int inv(int a) const { return id_of(invert_perm(elements_[a])); }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }

  std::vector<int> closure(std::vector<int> gens) const {
    std::set<int> seen{0};
    std::vector<int> stack{0};
    for (int g : gens)
      if (seen.insert(g).second) stack.push_back(g);
    for (std::size_t head = 0; head < stack.size(); ++head)
      for (int g : gens) {
        int a = mul(stack[head], g);
        if (seen.insert(a).second) stack.push_back(a);
        int b = mul(stack[head], inv(g));
        if (seen.insert(b).second) stack.push_back(b);
      }
    return {seen.begin(), seen.end()};
  }

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
};

using Subgroup = std::vector<int>;  // sorted element ids

struct RotationViolation {
  std::string axiom;  // "conjugation-closed", "generates", "clique-stabilizer",
                      // "subgroup-not-stabilizer", "barrier", "free-transitivity"
  std::string detail;
  VertexSet clique;
  int subgroup = -1;
};

struct RotationReport {
  bool presystem = false;
  bool system = false;
  bool free_transitive = false;
  int group_order = 0;
  std::vector<RotationViolation> violations;
  std::vector<VertexSet> cliques;
  std::vector<int> clique_stabilizer;  // index into subgroups, -1 when absent
  std::vector<Subgroup> subgroups;
};

namespace detail {

// Does the subgroup act freely-transitively on the clique's vertices?
inline bool acts_freely_transitively(const PermGroup& G, const Subgroup& s, const VertexSet& c) {
  if (s.size() != c.size()) return false;
  for (int e : s) {
    const Perm& p = G.perm(e);
    for (vertex_t v : c)
      if (!set_contains(c, p[v])) return false;  // must stabilise setwise
    if (e != 0)
      for (vertex_t v : c)
        if (p[v] == v) return false;  // freeness
  }
  // Transitivity: the orbit of the first vertex covers the clique.
  std::set<int> orbit;
  for (int e : s) orbit.insert(G.perm(e)[c.front()]);
  return orbit.size() == c.size();
}

}  // namespace detail

// Closes each listed subgroup generator set and checks the rotation
// presystem axioms; with check_barrier also the separation axiom and free
// transitivity on vertices.
inline RotationReport verify_rotation_axioms(const GroupAction& action,
                                             const std::vector<std::vector<Perm>>& subgroup_gens,
                                             bool check_barrier) {
  PermGroup G = PermGroup::enumerate(action);
  RotationReport rep;
  rep.group_order = G.order();

  // Close the subgroup inputs; they must be nontrivial and inside G.
  std::set<Subgroup> unique_subs;
  for (const auto& gens : subgroup_gens) {
    std::vector<int> ids;
    for (const Perm& p : gens) {
      if (!is_graph_automorphism(action.graph, p))
        throw input_error("subgroup element is not a graph automorphism");
      if (!G.contains(p)) throw input_error("subgroup element outside the generated group");
      ids.push_back(G.id_of(p));
    }
    Subgroup s = G.closure(ids);
    if (s.size() < 2) throw input_error("rotative-stabilizer candidates must be nontrivial");
    unique_subs.insert(std::move(s));
  }
  rep.subgroups.assign(unique_subs.begin(), unique_subs.end());

  // Conjugation closure (generators suffice).
  for (std::size_t si = 0; si < rep.subgroups.size(); ++si) {
    for (const Perm& gp : action.generators) {
      int g = G.id_of(gp);
      Subgroup conj;
      for (int e : rep.subgroups[si]) conj.push_back(G.conj(g, e));
      std::sort(conj.begin(), conj.end());
      if (!unique_subs.count(conj))
        rep.violations.push_back({"conjugation-closed",
                                  "conjugate of a subgroup is not in the family",
                                  {},
                                  static_cast<int>(si)});
    }
  }

  // The family generates the group.
  std::vector<int> all;
  for (const auto& s : rep.subgroups) all.insert(all.end(), s.begin(), s.end());
  if (static_cast<int>(G.closure(all).size()) != G.order())
    rep.violations.push_back({"generates", "the family does not generate the group", {}, -1});

  // Unique rotative-stabilizer per clique.
  rep.cliques = action.graph.cliques();
  rep.clique_stabilizer.assign(rep.cliques.size(), -1);
  std::vector<bool> used(rep.subgroups.size(), false);
  for (std::size_t ci = 0; ci < rep.cliques.size(); ++ci) {
    int found = -1, count = 0;
    for (std::size_t si = 0; si < rep.subgroups.size(); ++si)
      if (detail::acts_freely_transitively(G, rep.subgroups[si], rep.cliques[ci])) {
        found = static_cast<int>(si);
        ++count;
      }
    if (count == 1) {
      rep.clique_stabilizer[ci] = found;
      used[found] = true;
    } else {
      rep.violations.push_back({"clique-stabilizer",
                                count == 0 ? "no subgroup acts freely-transitively on the clique"
                                           : "several subgroups act freely-transitively",
                                rep.cliques[ci],
                                -1});
    }
  }
  for (std::size_t si = 0; si < rep.subgroups.size(); ++si)
    if (!used[si])
      rep.violations.push_back({"subgroup-not-stabilizer",
                                "subgroup is not the rotative-stabilizer of any clique",
                                {},
                                static_cast<int>(si)});

  rep.presystem = rep.violations.empty();

  if (check_barrier) {
    // Barrier axiom: removing all cliques with the same rotative-stabilizer
    // separates the clique's vertices.
    for (std::size_t ci = 0; ci < rep.cliques.size(); ++ci) {
      int si = rep.clique_stabilizer[ci];
      if (si < 0) continue;
      std::set<Edge> barrier;
      for (std::size_t cj = 0; cj < rep.cliques.size(); ++cj)
        if (rep.clique_stabilizer[cj] == si) {
          const auto& c = rep.cliques[cj];
          for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) barrier.insert(Edge(c[i], c[j]));
        }
      auto comps = action.graph.components_without_edges(barrier);
      std::vector<int> comp_of(action.graph.vertex_count());
      for (std::size_t k = 0; k < comps.size(); ++k)
        for (vertex_t v : comps[k]) comp_of[v] = static_cast<int>(k);
      const auto& c = rep.cliques[ci];
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (comp_of[c[i]] == comp_of[c[j]])
            rep.violations.push_back({"barrier",
                                      "clique vertices remain connected without the barrier",
                                      {c[i], c[j]},
                                      si});
    }

    // Rotation systems act freely and transitively on the vertices.
    rep.free_transitive = G.order() == action.graph.vertex_count();
    if (rep.free_transitive) {
      std::set<int> orbit;
      for (int e = 0; e < G.order(); ++e) orbit.insert(G.perm(e)[0]);
      if (static_cast<int>(orbit.size()) != action.graph.vertex_count())
        rep.free_transitive = false;
      for (int e = 1; e < G.order() && rep.free_transitive; ++e)
        for (int v = 0; v < action.graph.vertex_count(); ++v)
          if (G.perm(e)[v] == v) {
            rep.free_transitive = false;
            break;
          }
    }
    if (!rep.free_transitive)
      rep.violations.push_back(
          {"free-transitivity", "the action is not free and transitive on vertices", {}, -1});
    rep.system = rep.violations.empty();
  }
  return rep;
}

inline RotationReport verify_presystem(const GroupAction& action,
                                       const std::vector<std::vector<Perm>>& subgroup_gens) {
  return verify_rotation_axioms(action, subgroup_gens, false);
}

inline RotationReport verify_rotation_system(const GroupAction& action,
                                             const std::vector<std::vector<Perm>>& subgroup_gens) {
  return verify_rotation_axioms(action, subgroup_gens, true);
}

struct ExtractedPresentation {
  Presentation presentation;
  std::vector<VertexSet> basepoint_cliques;  // gamma vertex i <-> clique i
  bool verified = false;  // complete Cayley ball is label-isomorphic to the graph
};

// Reads a periagroup presentation off a rotation system: gamma is the set
// of cliques at the basepoint, vertex groups are their rotative-stabilizers
// as multiplication tables, and edges join cliques with transverse
// hyperplanes, labelled pi/angle.
inline ExtractedPresentation extract_periagroup(const GroupAction& action,
                                                const std::vector<std::vector<Perm>>& subgroup_gens,
                                                vertex_t basepoint = 0, bool verify = true,
                                                int max_len = 0) {
  RotationReport rep = verify_rotation_system(action, subgroup_gens);
  if (!rep.system) throw input_error("extract_periagroup requires a rotation system");
  PermGroup G = PermGroup::enumerate(action);

  // Cliques at the basepoint, with their stabilizers' elements ordered by
  // the clique vertex each element sends the basepoint to.
  std::vector<VertexSet> at_base;
  std::vector<std::vector<int>> stab_elems;  // [gamma vertex][element index] -> group element
  for (std::size_t ci = 0; ci < rep.cliques.size(); ++ci) {
    if (!set_contains(rep.cliques[ci], basepoint)) continue;
    const VertexSet& c = rep.cliques[ci];
    const Subgroup& s = rep.subgroups[rep.clique_stabilizer[ci]];
    std::vector<vertex_t> order{basepoint};
    for (vertex_t v : c)
      if (v != basepoint) order.push_back(v);
    std::vector<int> elems(c.size(), -1);
    for (int e : s) {
      vertex_t img = G.perm(e)[basepoint];
      auto it = std::find(order.begin(), order.end(), img);
      elems[it - order.begin()] = e;
    }
    at_base.push_back(c);
    stab_elems.push_back(std::move(elems));
  }

  // Vertex groups as multiplication tables over those orderings.
  std::vector<GroupSpec> groups;
  for (const auto& elems : stab_elems) {
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int prod = G.mul(elems[i], elems[j]);
        auto it = std::find(elems.begin(), elems.end(), prod);
        if (it == elems.end()) throw property_error("stabilizer elements do not close");
        table[i][j] = static_cast<int>(it - elems.begin());
      }
    groups.push_back(n == 2 ? GroupSpec::cyclic(2) : GroupSpec::from_table(table));
  }

  // Edges where the cliques' hyperplanes are transverse; lambda = pi/angle.
  HyperplaneArrangement arr(action.graph, max_len);
  std::vector<Presentation::LabelledEdge> edges;
  for (std::size_t i = 0; i < at_base.size(); ++i)
    for (std::size_t j = i + 1; j < at_base.size(); ++j) {
      vertex_t oi = at_base[i][0] == basepoint ? at_base[i][1] : at_base[i][0];
      vertex_t oj = at_base[j][0] == basepoint ? at_base[j][1] : at_base[j][0];
      int hi = arr.class_of(Edge(basepoint, oi));
      int hj = arr.class_of(Edge(basepoint, oj));
      if (hi == hj) throw property_error("distinct basepoint cliques share a hyperplane");
      if (!arr.transverse(hi, hj)) continue;
      auto lab = dihedral_label_from_angle(arr.angle(hi, hj));
      if (!lab) throw property_error("angle is not an integral submultiple of pi");
      edges.push_back({static_cast<int>(i), static_cast<int>(j), *lab});
    }

  ExtractedPresentation out;
  out.presentation = Presentation(std::move(groups), std::move(edges));
  out.basepoint_cliques = at_base;

  if (verify) {
    CayleyBall ball;
    try {
      ball = cayley_ball(out.presentation, -1, action.graph.vertex_count() + 1);
    } catch (const budget_error&) {
      // The extracted presentation generates past the acting graph.
      out.verified = false;
      return out;
    }
    out.verified = ball.complete && ball.graph.vertex_count() == action.graph.vertex_count();
    if (out.verified) {
      // Evaluate each representative word through the action and compare
      // the induced vertex map with the graph structure.
      auto eval = [&](const Word& w) {
        Perm p = identity_perm(action.graph.vertex_count());
        for (const Syllable& s : w)
          p = compose_perms(p, G.perm(stab_elems[s.vertex][s.element]));
        return p;
      };
      std::vector<vertex_t> image(ball.graph.vertex_count());
      std::set<vertex_t> seen;
      for (int v = 0; v < ball.graph.vertex_count(); ++v) {
        image[v] = eval(ball.reps[v])[basepoint];
        seen.insert(image[v]);
      }
      if (static_cast<int>(seen.size()) != action.graph.vertex_count()) out.verified = false;
      for (const Edge& e : ball.graph.edges())
        if (out.verified && !action.graph.adjacent(image[e.u], image[e.v])) out.verified = false;
      // Labels: an edge generated by gamma vertex i lands in the translate
      // of the i-th basepoint clique.
      for (const auto& [pair, s] : ball.labels) {
        if (!out.verified) break;
        Perm left = eval(ball.reps[pair.first]);
        VertexSet translated;
        for (vertex_t v : at_base[s.vertex]) translated.push_back(left[v]);
        translated = make_vertex_set(std::move(translated));
        if (!set_contains(translated, image[pair.first]) ||
            !set_contains(translated, image[pair.second]))
          out.verified = false;
      }
    }
  }
  return out;
}

struct RotationDecomposition {
  std::vector<int> saturated_hyperplanes;
  std::vector<int> tangent_hyperplanes;
  Subgroup rot;
  Subgroup stab_y;
  VertexSet y;
  bool product_ok = false;
  bool intersection_trivial = false;
  bool rot_presentation_valid = false;
  Presentation rot_presentation;
  int group_order = 0;
};

// Rotation-subgroup decomposition: saturate the seed hyperplanes into an
// invariant family J, take Rot generated by their rotative-stabilizers and
// Y the intersection of the J-sectors at the basepoint, and verify
// G = Rot . stab(Y) with trivial intersection. Rot's own presentation is
// extracted from its action on the quotient graph of sector-intersection
// classes and re-verified.
inline RotationDecomposition rotation_subgroup(const GroupAction& action,
                                               const std::vector<int>& seed_hyperplanes,
                                               vertex_t basepoint = 0, int max_len = 0) {
  PermGroup G = PermGroup::enumerate(action);
  HyperplaneArrangement arr(action.graph, max_len);
  RotationDecomposition out;
  out.group_order = G.order();

  auto hyperplane_image = [&](int id, int g) {
    const Edge& e = arr.hyperplane(id).edges.front();
    const Perm& p = G.perm(g);
    return arr.class_of(Edge(p[e.u], p[e.v]));
  };

  // Saturate under the full acting group.
  std::set<int> family(seed_hyperplanes.begin(), seed_hyperplanes.end());
  for (int id : seed_hyperplanes)
    if (id < 0 || id >= arr.count()) throw input_error("seed hyperplane id out of range");
  std::vector<int> queue(family.begin(), family.end());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int g = 0; g < G.order(); ++g) {
      int img = hyperplane_image(queue[head], g);
      if (family.insert(img).second) queue.push_back(img);
    }
  out.saturated_hyperplanes.assign(family.begin(), family.end());

  // Rotative-stabilizer of each hyperplane: the common setwise stabilizer
  // of its cliques, which must permute its sectors freely-transitively.
  std::map<int, Subgroup> stab_of;
  for (int id : out.saturated_hyperplanes) {
    auto cliques = arr.cliques_of(id);
    if (cliques.empty()) throw input_error("hyperplane without cliques");
    Subgroup stab;
    for (std::size_t k = 0; k < cliques.size(); ++k) {
      Subgroup s;
      for (int e = 0; e < G.order(); ++e) {
        bool setwise = true;
        for (vertex_t v : cliques[k])
          if (!set_contains(cliques[k], G.perm(e)[v])) {
            setwise = false;
            break;
          }
        if (setwise) s.push_back(e);
      }
      if (k == 0)
        stab = s;
      else if (stab != s)
        throw input_error("cliques of one hyperplane have different stabilizers");
    }
    // Precondition: the stabilizer permutes the sectors freely-transitively.
    auto sectors = arr.sectors(id).sectors;
    if (stab.size() != sectors.size())
      throw input_error("rotative-stabilizer is not regular on sectors");
    std::set<int> orbit;
    for (int e : stab) {
      for (std::size_t si = 0; si < sectors.size(); ++si) {
        int img = arr.sector_of(id, G.perm(e)[sectors[si].front()]);
        if (si == 0) orbit.insert(img);
        if (e != 0 && img == static_cast<int>(si))
          throw input_error("rotative-stabilizer does not permute sectors freely");
      }
    }
    if (orbit.size() != sectors.size())
      throw input_error("rotative-stabilizer is not transitive on sectors");
    stab_of[id] = std::move(stab);
  }

  std::vector<int> rot_gens;
  for (const auto& [id, s] : stab_of) rot_gens.insert(rot_gens.end(), s.begin(), s.end());
  out.rot = G.closure(rot_gens);

  // Y: vertices not separated from the basepoint by any family hyperplane.
  for (vertex_t v = 0; v < action.graph.vertex_count(); ++v) {
    bool inside = true;
    for (int id : out.saturated_hyperplanes)
      if (arr.separates(id, v, basepoint)) {
        inside = false;
        break;
      }
    if (inside) out.y.push_back(v);
  }

  for (int e = 0; e < G.order(); ++e) {
    VertexSet img;
    for (vertex_t v : out.y) img.push_back(G.perm(e)[v]);
    if (make_vertex_set(std::move(img)) == out.y) out.stab_y.push_back(e);
  }

  Subgroup inter;
  std::set_intersection(out.rot.begin(), out.rot.end(), out.stab_y.begin(), out.stab_y.end(),
                        std::back_inserter(inter));
  out.intersection_trivial = inter == Subgroup{0};

  std::set<int> product;
  for (int r : out.rot)
    for (int s : out.stab_y) product.insert(G.mul(r, s));
  out.product_ok = static_cast<int>(product.size()) == G.order();

  for (int id : out.saturated_hyperplanes) {
    bool tangent = false;
    for (const Edge& e : arr.hyperplane(id).edges) {
      bool u_in = set_contains(out.y, e.u), v_in = set_contains(out.y, e.v);
      if (u_in != v_in) tangent = true;
    }
    if (tangent) out.tangent_hyperplanes.push_back(id);
  }

  if (out.saturated_hyperplanes.empty()) {
    out.rot_presentation_valid = true;  // trivial rotation subgroup
    return out;
  }

  // Quotient graph of sector-intersection classes: vertices are profiles of
  // sector membership over the family, edges join profiles differing in
  // exactly one hyperplane.
  const int n = action.graph.vertex_count();
  std::map<std::vector<int>, int> profile_id;
  std::vector<int> class_of(n);
  std::vector<std::vector<int>> profiles;
  for (vertex_t v = 0; v < n; ++v) {
    std::vector<int> prof;
    prof.reserve(out.saturated_hyperplanes.size());
    for (int id : out.saturated_hyperplanes) prof.push_back(arr.sector_of(id, v));
    auto [it, fresh] = profile_id.try_emplace(prof, static_cast<int>(profiles.size()));
    if (fresh) profiles.push_back(prof);
    class_of[v] = it->second;
  }
  std::vector<Edge> omega_edges;
  for (std::size_t a = 0; a < profiles.size(); ++a)
    for (std::size_t b = a + 1; b < profiles.size(); ++b) {
      int diff = 0;
      for (std::size_t k = 0; k < profiles[a].size(); ++k) diff += profiles[a][k] != profiles[b][k];
      if (diff == 1) omega_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  Graph omega(static_cast<int>(profiles.size()), omega_edges);

  auto induced_perm = [&](int e) {
    Perm p(profiles.size());
    std::vector<bool> set(profiles.size(), false);
    for (vertex_t v = 0; v < n; ++v) {
      int from = class_of[v], to = class_of[G.perm(e)[v]];
      if (set[from] && p[from] != to) throw property_error("group does not act on the quotient");
      p[from] = to;
      set[from] = true;
    }
    return p;
  };

  std::vector<Perm> omega_gens;
  for (int e : rot_gens) omega_gens.push_back(induced_perm(e));
  std::vector<std::vector<Perm>> omega_subgroups;
  std::set<std::vector<Perm>> seen_subs;
  for (const auto& [id, s] : stab_of) {
    std::vector<Perm> sub;
    for (int e : s) sub.push_back(induced_perm(e));
    std::sort(sub.begin(), sub.end());
    if (seen_subs.insert(sub).second) omega_subgroups.push_back(sub);
  }
  GroupAction omega_action{omega, omega_gens, 1'000'000};
  try {
    auto extracted = extract_periagroup(omega_action, omega_subgroups, class_of[basepoint]);
    out.rot_presentation = extracted.presentation;
    out.rot_presentation_valid =
        extracted.verified &&
        static_cast<int>(extracted.basepoint_cliques.size()) ==
            static_cast<int>(out.tangent_hyperplanes.size());
    out.rot_presentation.validate();
  } catch (const input_error&) {
    out.rot_presentation_valid = false;
  } catch (const property_error&) {
    out.rot_presentation_valid = false;
  }
  return out;
}

// The canonical rotation structure of a completely enumerated periagroup:
// the group acting on its Cayley graph by left multiplication, with the
// conjugates of the vertex groups as rotative-stabilizer candidates.
struct CanonicalRotation {
  GroupAction action;
  std::vector<std::vector<Perm>> subgroups;
};

inline CanonicalRotation canonical_rotation_structure(const BallGroup& G) {
  const int n = G.order();
  auto left_mult = [&](int a) {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = G.mul(a, x);
    return p;
  };
  CanonicalRotation out;
  out.action.graph = G.ball().graph;
  for (const Syllable& s : generator_syllables(G.presentation()))
    out.action.generators.push_back(left_mult(G.element_of({s})));
  std::set<std::vector<int>> seen;
  for (int u = 0; u < G.presentation().vertex_count(); ++u) {
    auto base = G.vertex_group_elements(u);
    for (int g = 0; g < n; ++g) {
      auto conj = G.conjugate_subgroup(g, base);
      if (seen.insert(conj).second) {
        std::vector<Perm> perms;
        for (int e : conj)
          if (e != 0) perms.push_back(left_mult(e));
        out.subgroups.push_back(std::move(perms));
      }
    }
  }
  return out;
}

}  // namespace mediangle
