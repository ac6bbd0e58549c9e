#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mediangle/graph.hpp"
#include "mediangle/presentation.hpp"
#include "mediangle/words.hpp"

namespace mediangle {

// Ball of the Cayley graph of a periagroup with respect to its vertex
// groups. Vertices are numbered in breadth-first order from the identity,
// with generator syllables enumerated in canonical order; this numbering is
// part of the contract.
struct CayleyBall {
  Graph graph;
  std::vector<Word> reps;  // canonical word per vertex; reps[0] is empty
  std::map<std::pair<int, int>, Syllable> labels;  // (g,h) -> s with g*s = h
  bool complete = false;
  int radius = 0;
  Presentation presentation;

  const Syllable& label(int g, int h) const {
    auto it = labels.find({g, h});
    if (it == labels.end()) throw input_error("no label for vertex pair");
    return it->second;
  }
};

// All nontrivial generator syllables in canonical order.
inline std::vector<Syllable> generator_syllables(const Presentation& p) {
  std::vector<Syllable> out;
  for (int u = 0; u < p.vertex_count(); ++u) {
    if (!p.group(u).finite()) throw input_error("infinite cyclic vertex group has no finite syllable list");
    for (long long e = 1; e < p.group(u).order(); ++e) out.push_back({u, e});
  }
  return out;
}

// Breadth-first generation of the Cayley ball, deduplicating by canonical
// form. radius < 0 means unbounded (stops at vertex_cap with an error).
inline CayleyBall cayley_ball(const Presentation& p, int radius = -1, int vertex_cap = 20000,
                              const RewriteBudget& budget = {}) {
  if (!p.all_groups_finite())
    throw input_error("cayley_ball requires all vertex groups to be finite");
  auto gens = generator_syllables(p);

  CayleyBall ball;
  ball.presentation = p;
  std::map<Word, int, detail::WordLess> index{detail::WordLess{&p}};
  std::vector<Word> reps;
  std::vector<int> depth;
  std::vector<Edge> edges;
  reps.push_back({});
  depth.push_back(0);
  index[{}] = 0;
  bool truncated = false;
  std::size_t head = 0;
  while (head < reps.size()) {
    int g = static_cast<int>(head++);
    bool boundary = radius >= 0 && depth[g] == radius;
    for (const Syllable& s : gens) {
      Word wd = canonical_form(p, concat(reps[g], {s}), budget);
      auto it = index.find(wd);
      int h = -1;
      if (it == index.end()) {
        // A boundary vertex keeps its in-ball edges; a generator leading
        // outside just marks the ball incomplete.
        if (boundary) {
          truncated = true;
          continue;
        }
        if (static_cast<int>(reps.size()) >= vertex_cap) {
          if (radius < 0) throw budget_error("cayley_ball vertex cap exceeded");
          truncated = true;
          continue;
        }
        h = static_cast<int>(reps.size());
        index[wd] = h;
        reps.push_back(std::move(wd));
        depth.push_back(static_cast<int>(reps.back().size()));
      } else {
        h = it->second;
      }
      if (h != g) {
        edges.emplace_back(g, h);
        ball.labels[{g, h}] = s;
        ball.labels[{h, g}] = {s.vertex, p.group(s.vertex).inv(s.element)};
      }
    }
  }
  ball.reps = std::move(reps);
  ball.complete = !truncated;
  ball.radius = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  ball.graph = Graph(static_cast<int>(ball.reps.size()), edges);
  return ball;
}

// Multiplication structure of a completely enumerated periagroup.
class BallGroup {
 public:
  explicit BallGroup(const CayleyBall& ball, const RewriteBudget& budget = {})
      : ball_(&ball), budget_(budget) {
    if (!ball.complete) throw input_error("group operations require a complete Cayley ball");
    const int n = order();
    sorted_ids_.resize(n);
    for (int i = 0; i < n; ++i) sorted_ids_[i] = i;
    std::sort(sorted_ids_.begin(), sorted_ids_.end(), [&](int a, int b) {
      return presentation().word_less(ball_->reps[a], ball_->reps[b]);
    });
    mult_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mult_[i][j] = element_of(concat(ball.reps[i], ball.reps[j]));
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mult_[i][j] == 0) inv_[i] = j;
  }

  const CayleyBall& ball() const { return *ball_; }
  const Presentation& presentation() const { return ball_->presentation; }
  int order() const { return static_cast<int>(ball_->reps.size()); }

  int mul(int a, int b) const { return mult_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1

  int element_of(const Word& w) const {
    Word c = canonical_form(presentation(), w, budget_);
    auto it = std::lower_bound(
        sorted_ids_.begin(), sorted_ids_.end(), c,
        [&](int id, const Word& word) { return presentation().word_less(ball_->reps[id], word); });
    if (it == sorted_ids_.end() || !(ball_->reps[*it] == c))
      throw input_error("word does not represent a ball element");
    return *it;
  }

  // Nontrivial syllables of the vertex group at u, as element ids.
  std::vector<int> vertex_group_elements(int u) const {
    std::vector<int> out{0};
    for (long long e = 1; e < presentation().group(u).order(); ++e)
      out.push_back(element_of({{u, e}}));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> subgroup_closure(std::vector<int> gens) const {
    std::set<int> seen{0};
    std::vector<int> stack{0};
    for (int g : gens)
      if (seen.insert(g).second) stack.push_back(g);
    for (std::size_t head = 0; head < stack.size(); ++head) {
      int a = stack[head];
      for (int g : gens) {
        for (int next : {mul(a, g), mul(a, inv(g))})
          if (seen.insert(next).second) stack.push_back(next);
      }
    }
    return {seen.begin(), seen.end()};
  }

  // Subgroup generated by the vertex groups of a subset of gamma.
  std::vector<int> standard_subgroup(const std::vector<int>& xi) const {
    std::vector<int> gens;
    for (int u : xi)
      for (int e : vertex_group_elements(u))
        if (e != 0) gens.push_back(e);
    return subgroup_closure(std::move(gens));
  }

  std::vector<int> coset(int g, const std::vector<int>& subgroup) const {
    std::vector<int> out;
    out.reserve(subgroup.size());
    for (int h : subgroup) out.push_back(mul(g, h));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> conjugate_subgroup(int g, const std::vector<int>& subgroup) const {
    std::vector<int> out;
    out.reserve(subgroup.size());
    for (int h : subgroup) out.push_back(conj(g, h));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const CayleyBall* ball_;
  RewriteBudget budget_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<int> sorted_ids_;
};

// Exchange-condition check for one (reduced word, syllable) pair.
struct ExchangeReport {
  enum class Branch { longer, equal, shorter } branch = Branch::longer;
  bool pass = true;
  Word reduced;
  std::string detail;
};

inline ExchangeReport exchange_check(const Presentation& p, const Word& w, const Syllable& s,
                                     const RewriteBudget& budget = {}) {
  p.check_syllable(s);
  if (s.element == 0) throw input_error("exchange syllable must be nontrivial");
  ExchangeReport rep;
  rep.reduced = reduce(p, w, budget);
  const int len = static_cast<int>(rep.reduced.size());
  const int len_gs = word_length(p, concat(rep.reduced, {s}), budget);
  long long s_inv = p.group(s.vertex).inv(s.element);
  if (len_gs > len) {
    rep.branch = ExchangeReport::Branch::longer;
    rep.detail = "|gs| > |g|: nothing to check";
    return rep;
  }
  rep.branch = len_gs == len ? ExchangeReport::Branch::equal : ExchangeReport::Branch::shorter;
  bool found = false;
  for (const Word& member : flip_closure(p, rep.reduced, budget)) {
    if (member.empty()) continue;
    const Syllable& last = member.back();
    if (last.vertex != s.vertex) continue;
    if (len_gs == len) {
      if (last.element != s_inv && last.element != 0) found = true;
    } else {
      if (last.element == s_inv) found = true;
    }
    if (found) break;
  }
  rep.pass = found;
  rep.detail = len_gs == len
                   ? "needs a reduced word ending in the vertex group, not in the inverse"
                   : "needs a reduced word ending in the inverse syllable";
  return rep;
}

// Minimal-length representative of the coset w<t> in a Coxeter-only
// presentation, via the tail descent: right-multiply by generators of t
// while that shortens.
inline Word coset_min_rep(const Presentation& p, const Word& w, const std::vector<int>& t,
                          const RewriteBudget& budget = {}) {
  if (!p.coxeter_only()) throw input_error("coset_min_rep requires a Coxeter-only presentation");
  for (int u : t)
    if (u < 0 || u >= p.vertex_count()) throw input_error("coset generator out of range");
  Word m = reduce(p, w, budget);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : t) {
      Word cand = reduce(p, concat(m, {{u, 1}}), budget);
      if (cand.size() < m.size()) {
        m = cand;
        changed = true;
        break;
      }
    }
  }
  return canonical_form(p, m, budget);
}

// Semidirect decomposition report: the retraction onto the Coxeter part,
// its kernel, and the graph-product generation check.
struct SemidirectReport {
  bool pass = true;
  int group_order = 0;
  int coxeter_order = 0;
  int kernel_size = 0;
  std::vector<std::string> failures;
};

inline SemidirectReport verify_semidirect(const BallGroup& G, const RewriteBudget& budget = {}) {
  const Presentation& p = G.presentation();
  SemidirectReport rep;
  rep.group_order = G.order();

  std::vector<int> phi, psi;  // order-two part and graph-product part
  for (int u = 0; u < p.vertex_count(); ++u)
    (p.group(u).order() == 2 ? phi : psi).push_back(u);

  // Sub-presentation on phi.
  std::vector<int> phi_index(p.vertex_count(), -1);
  for (std::size_t i = 0; i < phi.size(); ++i) phi_index[phi[i]] = static_cast<int>(i);
  std::vector<GroupSpec> cox_groups(phi.size(), GroupSpec::cyclic(2));
  std::vector<Presentation::LabelledEdge> cox_edges;
  for (const auto& e : p.edges)
    if (phi_index[e.u] >= 0 && phi_index[e.v] >= 0)
      cox_edges.push_back({phi_index[e.u], phi_index[e.v], e.lambda});
  Presentation cox(std::move(cox_groups), std::move(cox_edges));
  CayleyBall cox_ball = cayley_ball(cox, -1, G.order() + 1, budget);
  BallGroup C(cox_ball, budget);
  rep.coxeter_order = C.order();

  // Retraction: delete graph-product syllables.
  auto retract = [&](int g) {
    Word wd;
    for (const Syllable& s : G.ball().reps[g])
      if (phi_index[s.vertex] >= 0) wd.push_back({phi_index[s.vertex], s.element});
    return C.element_of(wd);
  };
  std::vector<int> kernel;
  for (int g = 0; g < G.order(); ++g)
    if (retract(g) == 0) kernel.push_back(g);
  rep.kernel_size = static_cast<int>(kernel.size());

  if (rep.group_order != rep.kernel_size * rep.coxeter_order) {
    rep.pass = false;
    rep.failures.push_back("order is not kernel size times Coxeter order");
  }

  // The canonical section of the Coxeter part meets the kernel trivially.
  std::set<int> kernel_set(kernel.begin(), kernel.end());
  for (int c = 1; c < C.order(); ++c) {
    Word lifted;
    for (const Syllable& s : C.ball().reps[c]) lifted.push_back({phi[s.vertex], s.element});
    int g = G.element_of(lifted);
    if (kernel_set.count(g)) {
      rep.pass = false;
      rep.failures.push_back("section of the Coxeter part meets the kernel nontrivially");
      break;
    }
  }

  // The kernel is generated by the conjugates of the graph-product
  // vertex groups.
  std::vector<int> gens;
  for (int u : psi)
    for (int e : G.vertex_group_elements(u))
      if (e != 0)
        for (int g = 0; g < G.order(); ++g) gens.push_back(G.conj(g, e));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<int> normal_closure = G.subgroup_closure(gens);
  if (normal_closure != kernel) {
    rep.pass = false;
    rep.failures.push_back("kernel is not generated by conjugated vertex groups");
  }
  return rep;
}

// The coset g<xi> as a vertex set of the ball. Gatedness of the parabolic
// subgraph is verified; failure signals an implementation bug.
inline VertexSet parabolic_coset(const BallGroup& G, int g, const std::vector<int>& xi) {
  auto sub = G.standard_subgroup(xi);
  auto cs = G.coset(g, sub);
  VertexSet out(cs.begin(), cs.end());
  if (!G.ball().graph.is_gated(out))
    throw property_error("parabolic coset is not gated");
  return out;
}

struct ParabolicIntersection {
  int k = 0;                 // representative vertex of the projection
  std::vector<int> xi;       // gamma vertices labelling edges of the projection
  std::vector<int> elements; // the intersection subgroup, as element ids
};

// Intersection of the parabolic subgroups attached to the cosets g<phi> and
// h<psi>: project h<psi> onto g<phi>, read off the edge labels, and verify
// against the brute-force element-set intersection.
inline ParabolicIntersection parabolic_intersection(const BallGroup& G, int g,
                                                    const std::vector<int>& phi, int h,
                                                    const std::vector<int>& psi) {
  const Graph& X = G.ball().graph;
  VertexSet A = parabolic_coset(G, g, phi);
  VertexSet B = parabolic_coset(G, h, psi);
  VertexSet P = X.gate_image(A, B);

  ParabolicIntersection out;
  std::set<int> xi;
  for (vertex_t a : P)
    for (vertex_t b : X.neighbors(a))
      if (b > a && set_contains(P, b)) xi.insert(G.ball().label(a, b).vertex);
  out.xi.assign(xi.begin(), xi.end());
  out.k = P.front();

  // Brute force: conjugated element sets.
  auto conj_set = [&](int c, const std::vector<int>& sub) {
    std::set<int> s;
    for (int x : sub) s.insert(G.conj(c, x));
    return s;
  };
  auto sa = conj_set(g, G.standard_subgroup(phi));
  auto sb = conj_set(h, G.standard_subgroup(psi));
  std::set<int> inter;
  for (int x : sa)
    if (sb.count(x)) inter.insert(x);
  auto claimed = conj_set(out.k, G.standard_subgroup(out.xi));
  if (claimed != inter)
    throw property_error("parabolic intersection mismatch between projection and brute force");
  out.elements.assign(inter.begin(), inter.end());
  return out;
}

// Presentation isomorphism: a vertex bijection matching edge labels with
// isomorphic vertex groups. Brute force over bijections; gamma is tiny.
inline bool presentations_isomorphic(const Presentation& a, const Presentation& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!groups_isomorphic(a.group(u), b.group(perm[u]))) ok = false;
      for (int v = u + 1; v < n && ok; ++v)
        if (a.lambda(u, v) != b.lambda(perm[u], perm[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace mediangle
