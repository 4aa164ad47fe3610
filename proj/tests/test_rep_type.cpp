#include "qcov/rep_type.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace qcov;

namespace {

Quiver star_d4() {
  return Quiver({"c", "l1", "l2", "l3"},
                {{"s1", "c", "l1"}, {"s2", "l2", "c"}, {"s3", "c", "l3"}});
}

// T(a, b, c) star with three arms, orientations alternating.
Quiver three_arm(int a, int b, int c) {
  std::vector<std::string> verts{"c"};
  std::vector<Arrow> arrows;
  auto arm = [&](const std::string& name, int len) {
    std::string prev = "c";
    for (int i = 1; i <= len; ++i) {
      std::string v = name + std::to_string(i);
      verts.push_back(v);
      arrows.push_back({name + std::to_string(i) + "e", prev, v});
      prev = v;
    }
  };
  arm("p", a);
  arm("q", b);
  arm("r", c);
  return Quiver(verts, arrows);
}

Quiver reorient(const Quiver& q, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) {
    if (rng() % 2) {
      arrows.push_back({a.id, a.to, a.from});
    } else {
      arrows.push_back(a);
    }
  }
  return Quiver(q.vertices(), arrows);
}

}  // namespace

TEST_CASE("classify_path_algebra: Dynkin fixtures are finite") {
  CHECK(classify_path_algebra(fixtures::a_n(4)).verdict == RepType::Finite);
  CHECK(classify_path_algebra(star_d4()).verdict == RepType::Finite);  // D4
  CHECK(classify_path_algebra(three_arm(1, 2, 2)).verdict == RepType::Finite);   // E6
  CHECK(classify_path_algebra(three_arm(1, 2, 3)).verdict == RepType::Finite);   // E7
  CHECK(classify_path_algebra(three_arm(1, 2, 4)).verdict == RepType::Finite);   // E8
  CHECK(classify_path_algebra(three_arm(1, 1, 5)).verdict == RepType::Finite);   // D8
}

TEST_CASE("classify_path_algebra: Euclidean fixtures are tame") {
  CHECK(classify_path_algebra(fixtures::kronecker()).verdict == RepType::Tame);  // A~1
  // Oriented 3-cycle = A~2.
  Quiver cyc({"u", "v", "w"}, {{"e1", "u", "v"}, {"e2", "v", "w"}, {"e3", "w", "u"}});
  CHECK(classify_path_algebra(cyc).verdict == RepType::Tame);
  // One loop: A~0 (the Jordan quiver).
  Quiver loop({"o"}, {{"l", "o", "o"}});
  CHECK(classify_path_algebra(loop).verdict == RepType::Tame);
  // D~4: star with four legs.
  Quiver d4t({"c", "l1", "l2", "l3", "l4"},
             {{"s1", "c", "l1"}, {"s2", "c", "l2"}, {"s3", "l3", "c"}, {"s4", "c", "l4"}});
  CHECK(classify_path_algebra(d4t).verdict == RepType::Tame);
  CHECK(classify_path_algebra(three_arm(2, 2, 2)).verdict == RepType::Tame);  // E~6
  CHECK(classify_path_algebra(three_arm(1, 3, 3)).verdict == RepType::Tame);  // E~7
  CHECK(classify_path_algebra(three_arm(1, 2, 5)).verdict == RepType::Tame);  // E~8
}

TEST_CASE("classify_path_algebra: wild fixtures carry a proper Euclidean certificate") {
  // Triple Kronecker.
  Quiver k3({"x", "y"}, {{"a", "y", "x"}, {"b", "y", "x"}, {"c", "y", "x"}});
  auto v3 = classify_path_algebra(k3);
  CHECK(v3.verdict == RepType::WildCertified);
  CHECK(v3.certificate.find("A~") != std::string::npos);

  auto v6 = classify_path_algebra(three_arm(2, 2, 3));  // beyond E~6
  CHECK(v6.verdict == RepType::WildCertified);
  CHECK(v6.certificate.find("E~6") != std::string::npos);

  auto v8 = classify_path_algebra(three_arm(1, 2, 6));  // beyond E~8
  CHECK(v8.verdict == RepType::WildCertified);
  CHECK(v8.certificate.find("E~8") != std::string::npos);

  auto v7 = classify_path_algebra(three_arm(1, 3, 4));  // beyond E~7
  CHECK(v7.verdict == RepType::WildCertified);
  CHECK(v7.certificate.find("E~7") != std::string::npos);
}

TEST_CASE("classification is orientation independent") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(classify_path_algebra(reorient(three_arm(1, 2, 3), seed)).verdict == RepType::Finite);
    CHECK(classify_path_algebra(reorient(three_arm(1, 3, 3), seed)).verdict == RepType::Tame);
    CHECK(classify_path_algebra(reorient(three_arm(2, 3, 3), seed)).verdict ==
          RepType::WildCertified);
  }
}

TEST_CASE("detect_wild_patterns: each pattern detects in itself and its dual") {
  const auto& patterns = wild_patterns();
  REQUIRE(patterns.size() == 6);
  for (const auto& p : patterns) {
    auto v = detect_wild_patterns(p);
    CHECK(v.verdict == RepType::WildCertified);
    auto vd = detect_wild_patterns(opposite_quiver(p));
    CHECK(vd.verdict == RepType::WildCertified);
  }
  // A2 matches nothing.
  CHECK(detect_wild_patterns(fixtures::a_n(2)).verdict == RepType::Inconclusive);
}

TEST_CASE("planted wild patterns are found and certificates re-validate") {
  std::mt19937_64 rng(99);
  const auto& patterns = wild_patterns();
  for (int trial = 0; trial < 100; ++trial) {
    const Quiver& pat = patterns[trial % patterns.size()];
    // Host: the pattern plus noise vertices and arrows.
    std::vector<std::string> verts = pat.vertices();
    std::vector<Arrow> arrows = pat.arrows();
    for (int i = 0; i < 3; ++i) verts.push_back("n" + std::to_string(i));
    arrows.push_back({"x0", "n0", "n1"});
    arrows.push_back({"x1", "n1", "n2"});
    arrows.push_back({"x2", pat.vertices().front(), "n0"});
    // Random relabeling to avoid accidental name reliance.
    std::map<std::string, std::string> rename;
    std::vector<std::string> shuffled = verts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (size_t i = 0; i < verts.size(); ++i) rename[verts[i]] = "h" + std::to_string(i);
    std::vector<std::string> hv;
    std::vector<Arrow> ha;
    for (const auto& v : verts) hv.push_back(rename[v]);
    int k = 0;
    for (const auto& a : arrows) ha.push_back({"a" + std::to_string(k++), rename[a.from], rename[a.to]});
    Quiver host(hv, ha);
    auto v = detect_wild_patterns(host);
    REQUIRE(v.verdict == RepType::WildCertified);
    // Re-validate the returned embedding against the named pattern.
    size_t idx = 0;
    bool dual = v.certificate.find("dual") != std::string::npos;
    for (size_t i = 0; i < patterns.size(); ++i) {
      if (v.certificate.find("pattern " + std::to_string(i + 1)) != std::string::npos) idx = i;
    }
    const Quiver checked = dual ? opposite_quiver(patterns[idx]) : patterns[idx];
    CHECK(validate_embedding(checked, host, v.embedding_vertices, v.embedding_arrows));
  }
}

TEST_CASE("two-in-two-out criterion") {
  // Example 1.5's source: every vertex has two arrows in and two out.
  auto v = two_in_two_out_criterion(fixtures::example15_source_quiver());
  CHECK(v.verdict == RepType::InfiniteType);

  CHECK(two_in_two_out_criterion(fixtures::a_n(2)).verdict == RepType::Inconclusive);

  // Counter-example six-vertex quiver: boundary vertices fail the degree
  // condition (u0 has nothing coming in).
  CHECK(two_in_two_out_criterion(fixtures::counterexample6()).verdict == RepType::Inconclusive);

  // The one-vertex two-loop quiver satisfies it.
  CHECK(two_in_two_out_criterion(fixtures::example15_target_quiver()).verdict ==
        RepType::InfiniteType);
}

TEST_CASE("E7~~ tree certificate in the rad^2 cover of pattern (i)") {
  const Quiver& p1 = wild_patterns()[0];  // two loops and an exit arrow
  auto cert = e7tt_tree_certificate(p1, 6);
  REQUIRE(cert.has_value());
  CHECK(cert->chain.size() == 8);
  CHECK_FALSE(cert->branch.empty());
  // rad^2 forbids all compositions, so the subtree is fully alternating and
  // matches the displayed orientations.
  CHECK(cert->displayed_orientation);
}

TEST_CASE("no E7~~ tree in small covers of linear quivers") {
  CHECK_FALSE(e7tt_tree_certificate(fixtures::a_n(4), 6).has_value());
  CHECK_FALSE(e7tt_tree_certificate(fixtures::a_n(8), 8).has_value());
}

TEST_CASE("E7~~ tree for the two-relation-free-compositions configuration") {
  // Host with every vertex 2-in/2-out; relations: all length-2 paths except
  // beta alpha and gamma alpha for a chosen alpha (the configuration whose
  // cover holds the mixed-orientation tree).
  Quiver q = fixtures::example15_source_quiver();
  // alpha = be_xy (x -> y); the two continuations out of y are be_yx, al_yz.
  std::vector<Relation> gens;
  for (const auto& v : q.vertices()) {
    for (const auto& p : enumerate_paths_from(q, v, 2)) {
      if (p.length() != 2) continue;
      if (p.steps[0] == "be_xy" && (p.steps[1] == "be_yx" || p.steps[1] == "al_yz")) continue;
      Relation r;
      r.terms.push_back({Rational(1), p});
      gens.push_back(r);
    }
  }
  // Every length-3 path contains a zero-relation window, so the bound is 3.
  auto ideal = IdealPresentation::make(q, gens, 3, 4);
  auto cert = e7tt_tree_certificate(q, 6, &ideal);
  REQUIRE(cert.has_value());
  // The surviving compositions make the central vertex mixed, so the tree
  // does not carry one of the six displayed orientations.
  CHECK_FALSE(cert->displayed_orientation);
}
