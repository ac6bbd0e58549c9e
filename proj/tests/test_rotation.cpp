#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mediangle/families.hpp"
#include "mediangle/rotation.hpp"

using namespace mediangle;

namespace {

Presentation prism_presentation() {
  return Presentation({GroupSpec::cyclic(3), GroupSpec::cyclic(2)}, {{0, 1, 2}});
}

Presentation s3_z3_presentation() {
  return Presentation({GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(3)},
                      {{0, 1, 3}, {0, 2, 2}, {1, 2, 2}});
}

// Octahedron as the circulant graph C6(1,2).
Graph octahedron() {
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) {
    es.emplace_back(i, (i + 1) % 6);
    es.emplace_back(i, (i + 2) % 6);
  }
  return Graph(6, es);
}

Perm cycle6(std::initializer_list<std::pair<int, int>> moves) {
  Perm p = identity_perm(6);
  for (auto [a, b] : moves) p[a] = b;
  return p;
}

}  // namespace

TEST_CASE("permutation group enumeration") {
  // S3 acting on the hexagon by left multiplication.
  CayleyBall ball = cayley_ball(dihedral_presentation(3));
  BallGroup G(ball);
  auto rot = canonical_rotation_structure(G);
  PermGroup S3 = PermGroup::enumerate(rot.action);
  CHECK(S3.order() == 6);
  CHECK(rot.subgroups.size() == 3);  // three reflection subgroups

  GroupAction bad{even_cycle(4), {Perm{1, 0, 2, 3}}, 100};
  CHECK_THROWS_AS(PermGroup::enumerate(bad), input_error);
}

TEST_CASE("canonical rotation structures pass verification") {
  for (const Presentation& p :
       {dihedral_presentation(3), prism_presentation(), dihedral_presentation(4),
        s3_z3_presentation(), Presentation({GroupSpec::cyclic(4)}, {}),
        Presentation({GroupSpec::cyclic(2)}, {})}) {
    CayleyBall ball = cayley_ball(p);
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto rep = verify_rotation_system(rot.action, rot.subgroups);
    CHECK(rep.presystem);
    CHECK(rep.system);
    CHECK(rep.free_transitive);
  }
}

TEST_CASE("rotation by a quarter turn is no rotation system on C4") {
  Perm r = {1, 2, 3, 0};
  GroupAction a{even_cycle(4), {r}, 100};
  auto rep = verify_presystem(a, {{r}});
  CHECK_FALSE(rep.presystem);
  bool missing = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "clique-stabilizer") missing = true;
  CHECK(missing);
}

TEST_CASE("reflections of C5 form a presystem but not a system") {
  std::vector<Perm> refl;
  for (int m = 0; m < 5; ++m) {
    Perm p(5);
    for (int i = 0; i < 5; ++i) p[i] = ((m - i) % 5 + 5) % 5;
    refl.push_back(p);
  }
  Graph c5(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)});
  GroupAction a{c5, refl, 100};
  std::vector<std::vector<Perm>> subs;
  for (const Perm& p : refl) subs.push_back({p});

  auto pre = verify_presystem(a, subs);
  CHECK(pre.presystem);

  auto sys = verify_rotation_system(a, subs);
  CHECK_FALSE(sys.system);
  bool barrier = false, freeness = false;
  for (const auto& v : sys.violations) {
    if (v.axiom == "barrier") barrier = true;
    if (v.axiom == "free-transitivity") freeness = true;
  }
  CHECK(barrier);
  CHECK(freeness);
}

TEST_CASE("face rotations of the octahedron violate the barrier axiom") {
  Graph oct = octahedron();
  // Rotations about the four face axes.
  Perm p1 = cycle6({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  Perm p2 = cycle6({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 0}, {0, 4}});
  Perm p3 = cycle6({{2, 3}, {3, 4}, {4, 2}, {5, 0}, {0, 1}, {1, 5}});
  Perm p4 = cycle6({{0, 2}, {2, 4}, {4, 0}, {1, 3}, {3, 5}, {5, 1}});
  GroupAction a{oct, {p1, p4}, 100};
  PermGroup G = PermGroup::enumerate(a);
  CHECK(G.order() == 12);  // A4

  std::vector<std::vector<Perm>> subs = {{p1}, {p2}, {p3}, {p4}};
  auto pre = verify_presystem(a, subs);
  CHECK(pre.presystem);

  // The detection point: the octahedron has distinct cliques sharing edges.
  auto cliques = oct.cliques();
  bool sharing = false;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (set_intersection(cliques[i], cliques[j]).size() >= 2) sharing = true;
  CHECK(sharing);

  auto sys = verify_rotation_system(a, subs);
  CHECK_FALSE(sys.system);
  bool barrier = false;
  for (const auto& v : sys.violations)
    if (v.axiom == "barrier") {
      barrier = true;
      CHECK(v.clique.size() == 2);  // a clique pair left connected
    }
  CHECK(barrier);
}

TEST_CASE("left multiplication of Z/4 on K4 is a rotation system") {
  // The canonical rotation structure of the one-vertex periagroup on Z/4.
  CayleyBall ball = cayley_ball(Presentation({GroupSpec::cyclic(4)}, {}));
  BallGroup G(ball);
  auto rot = canonical_rotation_structure(G);
  CHECK(rot.subgroups.size() == 1);
  auto rep = verify_rotation_system(rot.action, rot.subgroups);
  CHECK(rep.presystem);
  CHECK(rep.system);
}

TEST_CASE("cliques of a rotation system intersect in at most one vertex") {
  for (const Presentation& p : {prism_presentation(), s3_z3_presentation()}) {
    CayleyBall ball = cayley_ball(p);
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto rep = verify_rotation_system(rot.action, rot.subgroups);
    REQUIRE(rep.system);
    for (std::size_t i = 0; i < rep.cliques.size(); ++i)
      for (std::size_t j = i + 1; j < rep.cliques.size(); ++j)
        CHECK(set_intersection(rep.cliques[i], rep.cliques[j]).size() <= 1);
  }
}

TEST_CASE("barriers coincide with hyperplanes and count distances") {
  for (const Presentation& p :
       {dihedral_presentation(3), prism_presentation(), s3_z3_presentation()}) {
    CayleyBall ball = cayley_ball(p);
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto rep = verify_rotation_system(rot.action, rot.subgroups);
    REQUIRE(rep.system);

    const Graph& X = rot.action.graph;
    HyperplaneArrangement arr(X);
    // The partition of cliques by rotative-stabilizer matches the partition
    // by hyperplane.
    std::map<int, std::set<int>> barrier_cliques, hyperplane_cliques;
    for (std::size_t ci = 0; ci < rep.cliques.size(); ++ci) {
      const auto& c = rep.cliques[ci];
      barrier_cliques[rep.clique_stabilizer[ci]].insert(static_cast<int>(ci));
      hyperplane_cliques[arr.class_of(Edge(c[0], c[1]))].insert(static_cast<int>(ci));
    }
    std::set<std::set<int>> a, b;
    for (auto& [k, v] : barrier_cliques) a.insert(v);
    for (auto& [k, v] : hyperplane_cliques) b.insert(v);
    CHECK(a == b);

    // Distance equals the number of separating barriers (= hyperplanes).
    for (int x = 0; x < X.vertex_count(); ++x)
      for (int y = x + 1; y < X.vertex_count(); ++y)
        CHECK(static_cast<int>(arr.separating_hyperplanes(x, y).size()) == X.distance(x, y));
  }
}

TEST_CASE("convex even cycles are exactly the dihedral cycles") {
  for (const Presentation& p :
       {dihedral_presentation(3), prism_presentation(), coxeter_a_presentation(3)}) {
    CayleyBall ball = cayley_ball(p);
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    PermGroup PG = PermGroup::enumerate(rot.action);
    auto rep = verify_rotation_system(rot.action, rot.subgroups);
    REQUIRE(rep.system);
    const Graph& X = rot.action.graph;

    // Dihedral cycles: walk o, a.o, ab.o, ... for nontrivial a, b in the
    // rotative-stabilizers of two distinct cliques at o.
    std::set<Cycle> dihedral;
    for (vertex_t o = 0; o < X.vertex_count(); ++o) {
      std::vector<std::size_t> at_o;
      for (std::size_t ci = 0; ci < rep.cliques.size(); ++ci)
        if (set_contains(rep.cliques[ci], o)) at_o.push_back(ci);
      for (std::size_t i = 0; i < at_o.size(); ++i)
        for (std::size_t j = 0; j < at_o.size(); ++j) {
          if (i == j) continue;
          const Subgroup& A = rep.subgroups[rep.clique_stabilizer[at_o[i]]];
          const Subgroup& B = rep.subgroups[rep.clique_stabilizer[at_o[j]]];
          for (int a : A) {
            if (a == 0) continue;
            for (int b : B) {
              if (b == 0) continue;
              // Alternating products <a,b>^k and <b,a>^k until they meet.
              std::vector<int> ab{0}, ba{0};
              for (int k = 1; k <= X.vertex_count(); ++k) {
                ab.push_back(PG.mul(ab.back(), k % 2 == 1 ? a : b));
                ba.push_back(PG.mul(ba.back(), k % 2 == 1 ? b : a));
              }
              int m = -1;
              for (int k = 2; k <= X.vertex_count(); ++k)
                if (ab[k] == ba[k]) {
                  m = k;
                  break;
                }
              if (m < 0) continue;
              // o, a.o, ..., <a,b>^m . o = <b,a>^m . o, ..., b.o and back.
              std::vector<vertex_t> cyc;
              for (int k = 0; k <= m; ++k) cyc.push_back(PG.perm(ab[k])[o]);
              for (int k = m - 1; k >= 1; --k) cyc.push_back(PG.perm(ba[k])[o]);
              std::set<vertex_t> distinct(cyc.begin(), cyc.end());
              if (distinct.size() == cyc.size() && cyc.size() >= 4)
                dihedral.insert(Cycle(cyc));
            }
          }
        }
    }
    auto convex = X.convex_even_cycles();
    CHECK(std::set<Cycle>(convex.begin(), convex.end()) == dihedral);
  }
}

TEST_CASE("extract_periagroup on small systems") {
  {
    CayleyBall ball = cayley_ball(dihedral_presentation(3));
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto ex = extract_periagroup(rot.action, rot.subgroups, 0);
    CHECK(ex.verified);
    CHECK(ex.presentation.vertex_count() == 2);
    CHECK(ex.presentation.lambda(0, 1) == 3);
    CHECK(presentations_isomorphic(ex.presentation, dihedral_presentation(3)));
  }
  {
    CayleyBall ball = cayley_ball(prism_presentation());
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto ex = extract_periagroup(rot.action, rot.subgroups, 0);
    CHECK(ex.verified);
    CHECK(ex.presentation.vertex_count() == 2);
    CHECK(ex.presentation.lambda(0, 1) == 2);
    CHECK(presentations_isomorphic(ex.presentation, prism_presentation()));
  }
  {
    CayleyBall ball = cayley_ball(Presentation({GroupSpec::cyclic(2)}, {}));
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto ex = extract_periagroup(rot.action, rot.subgroups, 0);
    CHECK(ex.verified);
    CHECK(ex.presentation.vertex_count() == 1);
    CHECK(ex.presentation.group(0).order() == 2);
  }
}

TEST_CASE("round trip through the canonical rotation structure") {
  for (const Presentation& p :
       {dihedral_presentation(3), prism_presentation(), s3_z3_presentation(),
        coxeter_a_presentation(3), dihedral_presentation(4)}) {
    CayleyBall ball = cayley_ball(p);
    REQUIRE(ball.complete);
    BallGroup G(ball);
    auto rot = canonical_rotation_structure(G);
    auto ex = extract_periagroup(rot.action, rot.subgroups, 0);
    CHECK(ex.verified);
    CHECK(presentations_isomorphic(ex.presentation, p));
  }
}

TEST_CASE("rotation subgroup decomposition of the prism") {
  CayleyBall ball = cayley_ball(prism_presentation());
  BallGroup G(ball);
  auto rot = canonical_rotation_structure(G);
  HyperplaneArrangement arr(rot.action.graph);
  REQUIRE(arr.count() == 2);
  int vertical = arr.hyperplane(0).edges.size() == 3 ? 0 : 1;

  auto dec = rotation_subgroup(rot.action, {vertical}, 0);
  CHECK(dec.group_order == 6);
  CHECK(dec.rot.size() == 2);
  CHECK(dec.stab_y.size() == 3);
  CHECK(dec.y.size() == 3);  // a triangle
  CHECK(dec.product_ok);
  CHECK(dec.intersection_trivial);
  CHECK(dec.rot_presentation_valid);
  CHECK(dec.rot_presentation.vertex_count() == 1);
  CHECK(dec.rot_presentation.group(0).order() == 2);
}

TEST_CASE("rotation subgroup decomposition of the hexagon") {
  CayleyBall ball = cayley_ball(dihedral_presentation(3));
  BallGroup G(ball);
  auto rot = canonical_rotation_structure(G);
  auto dec = rotation_subgroup(rot.action, {0}, 0);
  CHECK(dec.saturated_hyperplanes.size() == 3);  // saturation reaches all
  CHECK(dec.rot.size() == 6);                    // the whole of S3
  CHECK(dec.y.size() == 1);
  CHECK(dec.stab_y.size() == 1);
  CHECK(dec.product_ok);
  CHECK(dec.intersection_trivial);
  CHECK(dec.rot_presentation_valid);
  CHECK(presentations_isomorphic(dec.rot_presentation, dihedral_presentation(3)));
}

TEST_CASE("empty seed gives the trivial decomposition") {
  CayleyBall ball = cayley_ball(prism_presentation());
  BallGroup G(ball);
  auto rot = canonical_rotation_structure(G);
  auto dec = rotation_subgroup(rot.action, {}, 0);
  CHECK(dec.rot == Subgroup{0});
  CHECK(static_cast<int>(dec.y.size()) == rot.action.graph.vertex_count());
  CHECK(dec.product_ok);
  CHECK(dec.intersection_trivial);
  CHECK(dec.rot_presentation_valid);
}
