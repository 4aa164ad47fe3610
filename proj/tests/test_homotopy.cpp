#include "qcov/homotopy.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>

using namespace qcov;

namespace {

// Independent exhaustive move-graph closure: primitive (E1)/(E2) moves only,
// explored from one side with a hard length cap. Deliberately separate from
// the engine's bidirectional search.
struct BruteCloser {
  const Quiver& q;
  std::vector<Relation> minimal;
  int length_cap;

  BruteCloser(const IdealPresentation& ideal, int cap)
      : q(ideal.ambient), length_cap(cap) {
    for (const auto& tg : IdealMembership(ideal).minimal_generators()) {
      if (tg.tag == RelationClass::Minimal) minimal.push_back(tg.relation);
    }
  }

  std::string vertex_at(const Walk& w, size_t pos) const {
    if (pos == 0) return w.base;
    const WalkStep& s = w.steps[pos - 1];
    const Arrow& a = q.arrow(s.arrow);
    return s.forward ? a.to : a.from;
  }

  std::vector<Walk> moves(const Walk& w) const {
    std::vector<Walk> out;
    // (E1) delete adjacent cancelling pairs.
    for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
      if (w.steps[i].arrow == w.steps[i + 1].arrow && w.steps[i].forward != w.steps[i + 1].forward) {
        Walk n = w;
        n.steps.erase(n.steps.begin() + static_cast<long>(i), n.steps.begin() + static_cast<long>(i) + 2);
        out.push_back(n);
      }
    }
    // (E1) insert cancelling pairs.
    if (static_cast<int>(w.steps.size()) + 2 <= length_cap) {
      for (size_t pos = 0; pos <= w.steps.size(); ++pos) {
        const std::string v = vertex_at(w, pos);
        for (const auto& a : q.arrows()) {
          if (a.from == v) {
            Walk n = w;
            n.steps.insert(n.steps.begin() + static_cast<long>(pos),
                           {WalkStep{a.id, true}, WalkStep{a.id, false}});
            out.push_back(n);
          }
          if (a.to == v) {
            Walk n = w;
            n.steps.insert(n.steps.begin() + static_cast<long>(pos),
                           {WalkStep{a.id, false}, WalkStep{a.id, true}});
            out.push_back(n);
          }
        }
      }
    }
    // (E2) replace a forward occurrence of p_i by p_j.
    for (const auto& r : minimal) {
      for (size_t i = 0; i < r.terms.size(); ++i) {
        for (size_t j = 0; j < r.terms.size(); ++j) {
          if (i == j) continue;
          const auto& pi = r.terms[i].path.steps;
          const auto& pj = r.terms[j].path.steps;
          if (static_cast<int>(w.steps.size() - pi.size() + pj.size()) > length_cap) continue;
          for (size_t pos = 0; pos + pi.size() <= w.steps.size(); ++pos) {
            bool match = true;
            for (size_t k = 0; k < pi.size() && match; ++k) {
              match = w.steps[pos + k].forward && w.steps[pos + k].arrow == pi[k];
            }
            if (!match) continue;
            Walk n;
            n.base = w.base;
            n.steps.assign(w.steps.begin(), w.steps.begin() + static_cast<long>(pos));
            for (const auto& s : pj) n.steps.push_back({s, true});
            n.steps.insert(n.steps.end(), w.steps.begin() + static_cast<long>(pos + pi.size()),
                           w.steps.end());
            out.push_back(n);
          }
        }
      }
    }
    return out;
  }

  bool connected(const Walk& w1, const Walk& w2, size_t node_cap = 200000) const {
    std::set<std::string> seen{walk_str(w1)};
    std::deque<Walk> queue{w1};
    const std::string goal = walk_str(w2);
    if (walk_str(w1) == goal) return true;
    while (!queue.empty() && seen.size() < node_cap) {
      Walk w = queue.front();
      queue.pop_front();
      for (const auto& n : moves(w)) {
        const std::string key = walk_str(n);
        if (key == goal) return true;
        if (seen.insert(key).second) queue.push_back(n);
      }
    }
    return false;
  }

  // Component id per walk: one exhaustive closure per move-graph component.
  std::map<std::string, int> components(const std::vector<Walk>& walks,
                                        size_t node_cap = 400000) const {
    std::map<std::string, int> comp;
    int next = 0;
    for (const auto& start : walks) {
      if (comp.count(walk_str(start))) continue;
      const int id = next++;
      std::set<std::string> seen{walk_str(start)};
      std::deque<Walk> queue{start};
      comp[walk_str(start)] = id;
      while (!queue.empty() && seen.size() < node_cap) {
        Walk w = queue.front();
        queue.pop_front();
        for (const auto& n : moves(w)) {
          const std::string key = walk_str(n);
          if (seen.insert(key).second) {
            comp[key] = id;
            queue.push_back(n);
          }
        }
      }
    }
    return comp;
  }
};

}  // namespace

TEST_CASE("walks_equivalent: Riedtmann I2 basics") {
  auto ideal = fixtures::riedtmann_I2();
  HomotopyEngine eng(ideal.ambient, ideal);
  // alpha . alpha ~ gamma beta via one (E2) move.
  Walk a2{"1", {{"al", true}, {"al", true}}};
  Walk gb{"1", {{"be", true}, {"ga", true}}};
  CHECK(eng.equivalent(a2, gb) == Equivalence::Yes);
  // w ~ w.
  CHECK(eng.equivalent(a2, a2) == Equivalence::Yes);
  // alpha ~ gamma beta alpha^-1 needs an (E1) insertion first.
  Walk alpha{"1", {{"al", true}}};
  Walk gba{"1", {{"al", false}, {"be", true}, {"ga", true}}};
  CHECK(eng.equivalent(alpha, gba) == Equivalence::Yes);
  CHECK(eng.equivalent_by_search(alpha, gba) == Equivalence::Yes);
  // alpha is not homotopic to alpha^-1.
  Walk ainv{"1", {{"al", false}}};
  CHECK(eng.equivalent(alpha, ainv) == Equivalence::No);
  // Endpoint mismatch is a precondition violation.
  Walk beta{"1", {{"be", true}}};
  CHECK_THROWS_AS(eng.equivalent(alpha, beta), std::invalid_argument);
}

TEST_CASE("walks_equivalent: Kronecker zero ideal separates a and b") {
  auto ideal = fixtures::kronecker_zero_ideal();
  HomotopyEngine eng(ideal.ambient, ideal);
  Walk wa{"y", {{"a", true}}};
  Walk wb{"y", {{"b", true}}};
  CHECK(eng.equivalent(wa, wb) == Equivalence::No);
  CHECK(eng.equivalent_by_search(wa, wa) == Equivalence::Yes);
}

TEST_CASE("engine agrees with the brute-force closure on Riedtmann I2 (<= length 4)") {
  auto ideal = fixtures::riedtmann_I2();
  HomotopyEngine eng(ideal.ambient, ideal);
  BruteCloser brute(ideal, 10);
  const Quiver& q = ideal.ambient;
  int pairs = 0, yes = 0;
  for (const auto& base : q.vertices()) {
    std::vector<Walk> reduced;
    for (const auto& w : enumerate_walks_from(q, base, 4)) {
      if (walk_reduced(w)) reduced.push_back(w);
    }
    auto comp = brute.components(reduced);
    for (size_t i = 0; i < reduced.size(); ++i) {
      for (size_t j = i; j < reduced.size(); ++j) {
        if (walk_target(q, reduced[i]) != walk_target(q, reduced[j])) continue;
        Equivalence e = eng.equivalent(reduced[i], reduced[j]);
        bool b = comp.at(walk_str(reduced[i])) == comp.at(walk_str(reduced[j]));
        REQUIRE(e != Equivalence::Undecided);
        CHECK((e == Equivalence::Yes) == b);
        ++pairs;
        if (b) ++yes;
      }
    }
  }
  CHECK(pairs > 400);
  CHECK(yes > 20);
}

TEST_CASE("engine agrees with the brute-force closure on the two-loop covering source") {
  auto ideal = fixtures::example15_source_ideal();
  HomotopyEngine eng(ideal.ambient, ideal);
  BruteCloser brute(ideal, 9);
  const Quiver& q = ideal.ambient;
  int pairs = 0;
  std::vector<Walk> reduced;
  for (const auto& w : enumerate_walks_from(q, "x", 3)) {
    if (walk_reduced(w)) reduced.push_back(w);
  }
  auto comp = brute.components(reduced);
  for (size_t i = 0; i < reduced.size(); ++i) {
    for (size_t j = i + 1; j < reduced.size(); ++j) {
      if (walk_target(q, reduced[i]) != walk_target(q, reduced[j])) continue;
      Equivalence e = eng.equivalent(reduced[i], reduced[j]);
      bool b = comp.at(walk_str(reduced[i])) == comp.at(walk_str(reduced[j]));
      REQUIRE(e != Equivalence::Undecided);
      CHECK((e == Equivalence::Yes) == b);
      ++pairs;
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("square I2: the two sides of the commutative square are homotopic") {
  auto ideal = fixtures::square_I2();
  HomotopyEngine eng(ideal.ambient, ideal);
  Walk top{"x", {{"a1", true}, {"a2", true}}};
  Walk bottom{"x", {{"a3", true}, {"a4", true}}};
  CHECK(eng.equivalent(top, bottom) == Equivalence::Yes);
  // With the monomial ideal I1 they stay distinct.
  auto mono = fixtures::square_I1();
  HomotopyEngine eng1(mono.ambient, mono);
  CHECK(eng1.equivalent(top, bottom) == Equivalence::No);
}
