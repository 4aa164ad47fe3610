#include "qcov/group_action.hpp"

#include "qcov/covering.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace qcov;

namespace {

// A shift on a truncated line segment is not a total automorphism, so the
// finite free-action fixtures here are cycles with rotations.
Quiver cycle6() {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (int i = 0; i < 6; ++i) v.push_back("c" + std::to_string(i));
  for (int i = 0; i < 6; ++i) {
    a.push_back({"e" + std::to_string(i), "c" + std::to_string(i), "c" + std::to_string((i + 1) % 6)});
  }
  return Quiver(v, a);
}

ActionPresentation cycle6_rotation(int step) {
  Quiver q = cycle6();
  std::map<std::string, std::string> vmap, amap;
  for (int i = 0; i < 6; ++i) {
    vmap["c" + std::to_string(i)] = "c" + std::to_string((i + step) % 6);
    amap["e" + std::to_string(i)] = "e" + std::to_string((i + step) % 6);
  }
  ActionPresentation a;
  a.ambient = q;
  a.generators.push_back(make_automorphism(q, vmap, amap, nullptr));
  a.enumeration_bound = 8;
  return a;
}

}  // namespace

TEST_CASE("ball enumeration closes for finite groups") {
  auto act = fixtures::counterexample6_action();
  Ball ball = enumerate_ball(act);
  CHECK(ball.closed);
  CHECK(ball.elements.size() == 2);

  Ball rot = enumerate_ball(cycle6_rotation(1));
  CHECK(rot.closed);
  CHECK(rot.elements.size() == 6);
}

TEST_CASE("acts_freely: flip of the six-vertex quiver, trivial group, rotation") {
  auto fr = acts_freely(fixtures::counterexample6_action());
  CHECK(fr.free);
  CHECK(fr.exact);

  ActionPresentation trivial;
  trivial.ambient = fixtures::kronecker();
  auto fr2 = acts_freely(trivial);
  CHECK(fr2.free);
  CHECK(fr2.exact);

  auto fr3 = acts_freely(cycle6_rotation(2));
  CHECK(fr3.free);
}

TEST_CASE("acts_freely: a fixing automorphism is reported with a witness") {
  // Example 1.5's source has the x <-> z swap fixing y.
  Quiver q = fixtures::example15_source_quiver();
  std::map<std::string, std::string> vmap = {{"x", "z"}, {"y", "y"}, {"z", "x"}};
  std::map<std::string, std::string> amap = {{"al_x", "be_z"},  {"be_z", "al_x"},
                                             {"be_xy", "al_zy"}, {"al_zy", "be_xy"},
                                             {"be_yx", "al_yz"}, {"al_yz", "be_yx"}};
  auto ideal = fixtures::example15_source_ideal();
  ActionPresentation act;
  act.ambient = q;
  act.generators.push_back(make_automorphism(q, vmap, amap, &ideal));
  act.enumeration_bound = 4;
  auto fr = acts_freely(act);
  CHECK_FALSE(fr.free);
  CHECK(fr.witness.find("y") != std::string::npos);
}

TEST_CASE("admissibility: rotation of the 6-cycle is admissible; shift-by-2 on the zigzag fails") {
  CHECK(is_admissible(cycle6_rotation(1)).admissible);

  // Kronecker universal cover ball with the shift by 2 as far as it exists:
  // materialize the infinite zigzag as a 6-cycle-free finite model: use the
  // orbit statement instead on the true cover via enumerate on a closed
  // zigzag of period 2: vertices z0..z5 alternating sources and sinks.
  std::vector<std::string> v{"z0", "z1", "z2", "z3", "z4", "z5"};
  std::vector<Arrow> arrows;
  // Odd vertices are sources: z1 -> z0 (alpha), z1 -> z2 (beta), etc.
  arrows.push_back({"a1", "z1", "z0"});
  arrows.push_back({"b1", "z1", "z2"});
  arrows.push_back({"a3", "z3", "z2"});
  arrows.push_back({"b3", "z3", "z4"});
  arrows.push_back({"a5", "z5", "z4"});
  arrows.push_back({"b5", "z5", "z0"});  // wraps: period-3 closed zigzag
  Quiver zig(v, arrows);
  std::map<std::string, std::string> vmap, amap;
  for (int i = 0; i < 6; ++i) vmap["z" + std::to_string(i)] = "z" + std::to_string((i + 2) % 6);
  amap = {{"a1", "a3"}, {"b1", "b3"}, {"a3", "a5"}, {"b3", "b5"}, {"a5", "a1"}, {"b5", "b1"}};
  ActionPresentation act;
  act.ambient = zig;
  act.generators.push_back(make_automorphism(zig, vmap, amap, nullptr));
  act.enumeration_bound = 6;
  auto fr = acts_freely(act);
  CHECK(fr.free);
  // Both successors of an odd vertex are even, and all even vertices lie in
  // one orbit of the shift.
  auto adm = is_admissible(act);
  CHECK_FALSE(adm.admissible);
  CHECK(adm.exact);

  // Trivial group is vacuously admissible.
  ActionPresentation trivial;
  trivial.ambient = zig;
  CHECK(is_admissible(trivial).admissible);
}

TEST_CASE("orbit quiver of the flip: three vertices, doubled arrows, projected relations") {
  auto act = fixtures::counterexample6_action();
  auto ideal = fixtures::counterexample6_ideal();
  auto orb = orbit_quiver(act, ideal);
  CHECK(orb.quotient.vertices().size() == 3);
  CHECK(orb.quotient.arrows().size() == 4);
  // Two parallel arrows between consecutive orbit vertices.
  CHECK(orb.quotient.out_arrows("d0").size() == 2);
  CHECK(orb.quotient.out_arrows("d1").size() == 2);
  // Induced relations: a^2 - b^2 and ab - ba shapes (two 2-term generators
  // after dedup by normalization; the four source generators project in
  // pairs).
  // Free actions make the projection a covering of quivers with relations.
  BoundQuiverMorphism m{orb.projection, ideal, orb.induced_ideal};
  CHECK(is_relation_covering(m).ok);
  CHECK(is_quiver_covering(orb.projection).ok);
}

TEST_CASE("orbit quiver of the trivial group is the identity") {
  ActionPresentation trivial;
  trivial.ambient = fixtures::riedtmann();
  auto ideal = fixtures::riedtmann_I2();
  auto orb = orbit_quiver(trivial, ideal);
  CHECK(orb.quotient.vertices() == trivial.ambient.vertices());
  CHECK(orb.quotient.arrows().size() == trivial.ambient.arrows().size());
}

TEST_CASE("orbit quiver of the A2 u A2 swap is A2") {
  Quiver two({"p1", "p2", "q1", "q2"}, {{"e", "p1", "p2"}, {"f", "q1", "q2"}});
  std::map<std::string, std::string> vmap = {{"p1", "q1"}, {"q1", "p1"}, {"p2", "q2"}, {"q2", "p2"}};
  std::map<std::string, std::string> amap = {{"e", "f"}, {"f", "e"}};
  ActionPresentation act;
  act.ambient = two;
  act.generators.push_back(make_automorphism(two, vmap, amap, nullptr));
  act.enumeration_bound = 3;
  auto orb = orbit_quiver(act, fixtures::zero_ideal(two));
  CHECK(orb.quotient.vertices().size() == 2);
  CHECK(orb.quotient.arrows().size() == 1);
}

TEST_CASE("is_galois_covering: flip projection is Galois") {
  auto act = fixtures::counterexample6_action();
  auto ideal = fixtures::counterexample6_ideal();
  auto orb = orbit_quiver(act, ideal);
  BoundQuiverMorphism m{orb.projection, ideal, orb.induced_ideal};
  auto rep = is_galois_covering(m, act);
  CHECK(rep.ok);
}

TEST_CASE("is_galois_covering: identity with the trivial group") {
  auto ideal = fixtures::riedtmann_I2();
  ActionPresentation trivial;
  trivial.ambient = ideal.ambient;
  BoundQuiverMorphism m{identity_morphism(ideal.ambient), ideal, ideal};
  CHECK(is_galois_covering(m, trivial).ok);
}

TEST_CASE("Example 1.5 is not Galois: no subgroup of Aut(Q, I) works") {
  auto src = fixtures::example15_source_ideal();
  auto dst = fixtures::example15_target_ideal();
  BoundQuiverMorphism m{fixtures::example15_map(), src, dst};
  bool complete = true;
  auto all = enumerate_automorphisms(src.ambient, src, 1000000, &complete);
  CHECK(complete);
  CHECK(all.size() >= 2);  // identity and the x <-> z swap at least
  bool any = false;
  for (const auto& sub : subgroups_of(all)) {
    ActionPresentation act;
    act.ambient = src.ambient;
    act.enumeration_bound = static_cast<int>(sub.size()) + 1;
    for (const auto& e : sub) {
      if (e.is_identity()) continue;
      BoundQuiverAutomorphism g;
      g.ambient = src.ambient;
      g.element = e;
      act.generators.push_back(g);
    }
    if (is_galois_covering(m, act).ok) any = true;
  }
  CHECK_FALSE(any);
}

TEST_CASE("Galois verdicts are invariant under relabeling") {
  // Relabel the six-vertex quiver's ids and re-run the Galois check.
  auto act = fixtures::counterexample6_action();
  auto ideal = fixtures::counterexample6_ideal();
  auto orb = orbit_quiver(act, ideal);
  BoundQuiverMorphism m{orb.projection, ideal, orb.induced_ideal};
  REQUIRE(is_galois_covering(m, act).ok);

  // Relabeled copy: prefix every id with "w".
  auto relabel = [](const std::string& s) { return "w" + s; };
  std::vector<std::string> verts;
  std::vector<Arrow> arrows;
  for (const auto& v : ideal.ambient.vertices()) verts.push_back(relabel(v));
  for (const auto& a : ideal.ambient.arrows()) arrows.push_back({relabel(a.id), relabel(a.from), relabel(a.to)});
  Quiver q2(verts, arrows);
  std::vector<Relation> gens;
  for (const auto& g : ideal.generators) {
    Relation r;
    for (const auto& t : g.terms) {
      Path p;
      for (const auto& s : t.path.steps) p.steps.push_back(relabel(s));
      r.terms.push_back({t.coeff, p});
    }
    gens.push_back(r);
  }
  auto ideal2 = IdealPresentation::make(q2, gens, std::nullopt, 4);
  std::map<std::string, std::string> vmap, amap;
  const auto& flip = fixtures::counterexample6_flip();
  for (const auto& [x, y] : flip.element.vmap) vmap[relabel(x)] = relabel(y);
  for (const auto& [x, y] : flip.element.amap) amap[relabel(x)] = relabel(y);
  ActionPresentation act2;
  act2.ambient = q2;
  act2.generators.push_back(make_automorphism(q2, vmap, amap, &ideal2));
  act2.enumeration_bound = 4;
  auto orb2 = orbit_quiver(act2, ideal2);
  BoundQuiverMorphism m2{orb2.projection, ideal2, orb2.induced_ideal};
  CHECK(is_galois_covering(m2, act2).ok);
}

TEST_CASE("admissible implies free on the hypothesis fixtures") {
  CHECK(admissible_implies_free_check(cycle6_rotation(1)));
  CHECK(admissible_implies_free_check(fixtures::counterexample6_action()));
  ActionPresentation trivial;
  trivial.ambient = fixtures::a_n(3);
  CHECK(admissible_implies_free_check(trivial));
}

TEST_CASE("ball elements preserve the ideal") {
  auto act = fixtures::counterexample6_action();
  auto ideal = fixtures::counterexample6_ideal();
  IdealMembership mem(ideal);
  for (const auto& e : enumerate_ball(act).elements) {
    QuiverMorphism f;
    f.source = act.ambient;
    f.target = act.ambient;
    f.vertex_map = e.vmap;
    f.arrow_map = e.amap;
    for (const auto& g : ideal.generators) CHECK(mem.contains(map_relation(f, g)));
  }
}
