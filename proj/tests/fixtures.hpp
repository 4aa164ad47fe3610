#ifndef QCOV_TESTS_FIXTURES_HPP
#define QCOV_TESTS_FIXTURES_HPP

#include "qcov/group_action.hpp"
#include "qcov/relations.hpp"

namespace fixtures {

using namespace qcov;

inline Path mkpath(std::vector<std::string> steps) {
  Path p;
  p.steps = std::move(steps);
  return p;
}

inline Relation rel(std::vector<std::pair<long, std::vector<std::string>>> terms) {
  Relation r;
  for (auto& [c, steps] : terms) r.terms.push_back({Rational(c), mkpath(steps)});
  return r;
}

// Kronecker quiver: two arrows a, b: y -> x, zero ideal.
inline Quiver kronecker() {
  return Quiver({"x", "y"}, {{"a", "y", "x"}, {"b", "y", "x"}});
}
inline IdealPresentation kronecker_zero_ideal() {
  return IdealPresentation::make(kronecker(), {}, std::nullopt, 4);
}

// Three-vertex covering source: loops alpha at x / beta at z, double arrows
// between x,y (beta) and y,z (alpha); covers the two-loop one-vertex quiver.
inline Quiver example15_source_quiver() {
  return Quiver({"x", "y", "z"}, {
                                     {"al_x", "x", "x"},
                                     {"al_yz", "y", "z"},
                                     {"al_zy", "z", "y"},
                                     {"be_xy", "x", "y"},
                                     {"be_yx", "y", "x"},
                                     {"be_z", "z", "z"},
                                 });
}
inline IdealPresentation example15_source_ideal() {
  std::vector<Relation> gens = {
      // a^2 - b^2 lifted from x, y, z
      rel({{1, {"al_x", "al_x"}}, {-1, {"be_xy", "be_yx"}}}),
      rel({{1, {"al_yz", "al_zy"}}, {-1, {"be_yx", "be_xy"}}}),
      rel({{1, {"al_zy", "al_yz"}}, {-1, {"be_z", "be_z"}}}),
      // ab (b first, then a) lifted from x, y, z
      rel({{1, {"be_xy", "al_yz"}}}),
      rel({{1, {"be_yx", "al_x"}}}),
      rel({{1, {"be_z", "al_zy"}}}),
      // ba (a first, then b) lifted from x, y, z
      rel({{1, {"al_x", "be_xy"}}}),
      rel({{1, {"al_yz", "be_z"}}}),
      rel({{1, {"al_zy", "be_yx"}}}),
  };
  return IdealPresentation::make(example15_source_quiver(), gens, std::nullopt, 4);
}
inline Quiver example15_target_quiver() {
  return Quiver({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
}
inline IdealPresentation example15_target_ideal() {
  std::vector<Relation> gens = {
      rel({{1, {"a", "a"}}, {-1, {"b", "b"}}}),
      rel({{1, {"b", "a"}}}),
      rel({{1, {"a", "b"}}}),
  };
  return IdealPresentation::make(example15_target_quiver(), gens, std::nullopt, 4);
}
inline QuiverMorphism example15_map() {
  QuiverMorphism f;
  f.source = example15_source_quiver();
  f.target = example15_target_quiver();
  f.vertex_map = {{"x", "v"}, {"y", "v"}, {"z", "v"}};
  f.arrow_map = {{"al_x", "a"}, {"al_yz", "a"}, {"al_zy", "a"},
                 {"be_xy", "b"}, {"be_yx", "b"}, {"be_z", "b"}};
  return f;
}

// Riedtmann: loop alpha at 1, beta: 1 -> 2, gamma: 2 -> 1.
inline Quiver riedtmann() {
  return Quiver({"1", "2"}, {{"al", "1", "1"}, {"be", "1", "2"}, {"ga", "2", "1"}});
}
// I1 = <alpha^2 - gamma beta, beta gamma - beta alpha gamma, alpha^4>
inline IdealPresentation riedtmann_I1() {
  std::vector<Relation> gens = {
      rel({{1, {"al", "al"}}, {-1, {"be", "ga"}}}),
      rel({{1, {"ga", "be"}}, {-1, {"ga", "al", "be"}}}),
      rel({{1, {"al", "al", "al", "al"}}}),
  };
  return IdealPresentation::make(riedtmann(), gens, std::nullopt, 6);
}
// I2 = <alpha^2 - gamma beta, beta gamma>
inline IdealPresentation riedtmann_I2() {
  std::vector<Relation> gens = {
      rel({{1, {"al", "al"}}, {-1, {"be", "ga"}}}),
      rel({{1, {"ga", "be"}}}),
  };
  return IdealPresentation::make(riedtmann(), gens, std::nullopt, 4);
}

// Commutative square: a1: x -> t, a2: t -> r, a3: x -> b, a4: b -> r.
inline Quiver square() {
  return Quiver({"b", "r", "t", "x"},
                {{"a1", "x", "t"}, {"a2", "t", "r"}, {"a3", "x", "b"}, {"a4", "b", "r"}});
}
inline IdealPresentation square_I1() {
  return IdealPresentation::make(square(), {rel({{1, {"a1", "a2"}}})}, std::nullopt, 4);
}
inline IdealPresentation square_I2() {
  return IdealPresentation::make(square(), {rel({{1, {"a1", "a2"}}, {-1, {"a3", "a4"}}})},
                                 std::nullopt, 4);
}

// One loop with alpha^2 = 0.
inline Quiver loop_quiver() { return Quiver({"v"}, {{"al", "v", "v"}}); }
inline IdealPresentation loop_alpha2() {
  return IdealPresentation::make(loop_quiver(), {rel({{1, {"al", "al"}}})}, 2, 4);
}

// Six-vertex skew-gentle-style quiver with the order-2 flip (rows u/d).
inline Quiver counterexample6() {
  return Quiver({"d0", "d1", "d2", "u0", "u1", "u2"},
                {
                    {"al_u01", "u0", "u1"},
                    {"al_u12", "u1", "u2"},
                    {"al_d01", "d0", "d1"},
                    {"al_d12", "d1", "d2"},
                    {"be_u0d1", "u0", "d1"},
                    {"be_d0u1", "d0", "u1"},
                    {"be_u1d2", "u1", "d2"},
                    {"be_d1u2", "d1", "u2"},
                });
}
inline IdealPresentation counterexample6_ideal() {
  std::vector<Relation> gens = {
      rel({{1, {"al_u01", "al_u12"}}, {-1, {"be_u0d1", "be_d1u2"}}}),
      rel({{1, {"al_d01", "al_d12"}}, {-1, {"be_d0u1", "be_u1d2"}}}),
      rel({{1, {"be_u0d1", "al_d12"}}, {-1, {"al_u01", "be_u1d2"}}}),
      rel({{1, {"be_d0u1", "al_u12"}}, {-1, {"al_d01", "be_d1u2"}}}),
  };
  return IdealPresentation::make(counterexample6(), gens, std::nullopt, 4);
}
inline BoundQuiverAutomorphism counterexample6_flip() {
  std::map<std::string, std::string> vmap = {{"u0", "d0"}, {"u1", "d1"}, {"u2", "d2"},
                                             {"d0", "u0"}, {"d1", "u1"}, {"d2", "u2"}};
  std::map<std::string, std::string> amap = {
      {"al_u01", "al_d01"}, {"al_d01", "al_u01"}, {"al_u12", "al_d12"}, {"al_d12", "al_u12"},
      {"be_u0d1", "be_d0u1"}, {"be_d0u1", "be_u0d1"}, {"be_u1d2", "be_d1u2"}, {"be_d1u2", "be_u1d2"}};
  auto ideal = counterexample6_ideal();
  return make_automorphism(counterexample6(), vmap, amap, &ideal);
}
inline ActionPresentation counterexample6_action() {
  ActionPresentation a;
  a.ambient = counterexample6();
  a.generators.push_back(counterexample6_flip());
  a.enumeration_bound = 4;
  return a;
}

// Linear quivers A_n: v1 -> v2 -> ... -> vn.
inline Quiver a_n(int n) {
  std::vector<std::string> verts;
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    arrows.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
  }
  return Quiver(verts, arrows);
}

inline IdealPresentation zero_ideal(const Quiver& q, int truncation = 4) {
  return IdealPresentation::make(q, {}, std::nullopt, truncation);
}

}  // namespace fixtures

#endif  // QCOV_TESTS_FIXTURES_HPP
