#include "qcov/group_action.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qcov {

bool GroupElement::is_identity() const {
  for (const auto& [x, y] : vmap) {
    if (x != y) return false;
  }
  for (const auto& [x, y] : amap) {
    if (x != y) return false;
  }
  return true;
}

std::string GroupElement::key() const {
  std::string s;
  for (const auto& [x, y] : vmap) s += x + ">" + y + ";";
  s += "/";
  for (const auto& [x, y] : amap) s += x + ">" + y + ";";
  return s;
}

GroupElement identity_element(const Quiver& q) {
  GroupElement e;
  for (const auto& v : q.vertices()) e.vmap[v] = v;
  for (const auto& a : q.arrows()) e.amap[a.id] = a.id;
  e.word = "1";
  return e;
}

GroupElement compose_elements(const GroupElement& g, const GroupElement& f) {
  GroupElement h;
  for (const auto& [x, y] : f.vmap) h.vmap[x] = g.vmap.at(y);
  for (const auto& [x, y] : f.amap) h.amap[x] = g.amap.at(y);
  h.word = g.word == "1" ? f.word : (f.word == "1" ? g.word : g.word + "*" + f.word);
  return h;
}

GroupElement invert_element(const GroupElement& g) {
  GroupElement h;
  for (const auto& [x, y] : g.vmap) h.vmap[y] = x;
  for (const auto& [x, y] : g.amap) h.amap[y] = x;
  h.word = g.word == "1" ? g.word : "(" + g.word + ")^-1";
  return h;
}

BoundQuiverAutomorphism make_automorphism(const Quiver& q,
                                          std::map<std::string, std::string> vmap,
                                          std::map<std::string, std::string> amap,
                                          const IdealPresentation* ideal) {
  QuiverMorphism m;
  m.source = q;
  m.target = q;
  m.vertex_map = vmap;
  m.arrow_map = amap;
  auto defects = morphism_defects(m);
  if (!defects.empty()) {
    throw std::invalid_argument("make_automorphism: " + defects.front());
  }
  std::set<std::string> vimg, aimg;
  for (const auto& [_, y] : vmap) vimg.insert(y);
  for (const auto& [_, y] : amap) aimg.insert(y);
  if (vimg.size() != q.vertices().size() || aimg.size() != q.arrows().size()) {
    throw std::invalid_argument("make_automorphism: map is not bijective");
  }
  if (ideal) {
    IdealMembership mem(*ideal);
    for (const auto& g : ideal->generators) {
      if (!mem.contains(map_relation(m, g))) {
        throw std::invalid_argument("make_automorphism: ideal not preserved on generator " + relation_str(g));
      }
    }
  }
  BoundQuiverAutomorphism out;
  out.ambient = q;
  out.element.vmap = std::move(vmap);
  out.element.amap = std::move(amap);
  out.element.word = "g";
  return out;
}

Ball enumerate_ball(const ActionPresentation& a) {
  Ball ball;
  GroupElement id = identity_element(a.ambient);
  std::set<std::string> seen{id.key()};
  ball.elements.push_back(id);

  std::vector<GroupElement> letters;
  for (size_t i = 0; i < a.generators.size(); ++i) {
    GroupElement g = a.generators[i].element;
    g.word = "g" + std::to_string(i + 1);
    GroupElement gi = invert_element(g);
    gi.word = "g" + std::to_string(i + 1) + "^-1";
    letters.push_back(g);
    letters.push_back(gi);
  }

  std::vector<GroupElement> layer{id};
  for (int len = 1; len <= a.enumeration_bound; ++len) {
    std::vector<GroupElement> next;
    for (const auto& e : layer) {
      for (const auto& l : letters) {
        GroupElement c = compose_elements(l, e);
        c.word = e.word == "1" ? l.word : l.word + "*" + e.word;
        if (seen.insert(c.key()).second) {
          next.push_back(c);
          ball.elements.push_back(c);
        }
      }
    }
    if (next.empty()) {
      ball.closed = true;
      return ball;
    }
    layer = std::move(next);
  }
  // One more probe layer to detect closure exactly at the bound.
  for (const auto& e : layer) {
    for (const auto& l : letters) {
      if (!seen.count(compose_elements(l, e).key())) return ball;
    }
  }
  ball.closed = true;
  return ball;
}

FreenessReport acts_freely(const ActionPresentation& a) {
  Ball ball = enumerate_ball(a);
  FreenessReport rep;
  rep.exact = ball.closed;
  for (const auto& e : ball.elements) {
    if (e.is_identity()) continue;
    for (const auto& [x, y] : e.vmap) {
      if (x == y) {
        rep.free = false;
        rep.witness = "element " + e.word + " fixes vertex " + x;
        return rep;
      }
    }
  }
  rep.free = true;
  return rep;
}

namespace {

std::map<std::string, std::string> vertex_orbit_reps(const Quiver& q, const Ball& ball) {
  std::map<std::string, std::string> rep;
  for (const auto& v : q.vertices()) {
    std::string best = v;
    for (const auto& e : ball.elements) {
      const std::string img = e.vmap.at(v);
      if (img < best) best = img;
    }
    rep[v] = best;
  }
  // Stabilize: orbit reps must be consistent (rep of rep is rep); iterate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, r] : rep) {
      const std::string rr = rep.at(r);
      if (rr != r) { r = rr; changed = true; }
    }
  }
  return rep;
}

std::map<std::string, std::string> arrow_orbit_reps(const Quiver& q, const Ball& ball) {
  std::map<std::string, std::string> rep;
  for (const auto& a : q.arrows()) {
    std::string best = a.id;
    for (const auto& e : ball.elements) {
      const std::string img = e.amap.at(a.id);
      if (img < best) best = img;
    }
    rep[a.id] = best;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, r] : rep) {
      const std::string rr = rep.at(r);
      if (rr != r) { r = rr; changed = true; }
    }
  }
  return rep;
}

}  // namespace

AdmissibilityReport is_admissible(const ActionPresentation& a) {
  Ball ball = enumerate_ball(a);
  AdmissibilityReport rep;
  rep.exact = ball.closed;
  auto vreps = vertex_orbit_reps(a.ambient, ball);
  for (const auto& x : a.ambient.vertices()) {
    std::set<std::string> succ, pred;
    for (const auto& aid : a.ambient.out_arrows(x)) succ.insert(a.ambient.arrow(aid).to);
    for (const auto& aid : a.ambient.in_arrows(x)) pred.insert(a.ambient.arrow(aid).from);
    std::map<std::string, int> succ_count, pred_count;
    for (const auto& y : succ) succ_count[vreps.at(y)]++;
    for (const auto& y : pred) pred_count[vreps.at(y)]++;
    for (const auto& [orbit, n] : succ_count) {
      if (n > 1) {
        rep.admissible = false;
        rep.witness = "orbit of " + orbit + " meets " + x + "^+ " + std::to_string(n) + " times";
        return rep;
      }
    }
    for (const auto& [orbit, n] : pred_count) {
      if (n > 1) {
        rep.admissible = false;
        rep.witness = "orbit of " + orbit + " meets " + x + "^- " + std::to_string(n) + " times";
        return rep;
      }
    }
  }
  rep.admissible = true;
  return rep;
}

OrbitQuiverResult orbit_quiver(const ActionPresentation& a, const IdealPresentation& ideal) {
  Ball ball = enumerate_ball(a);
  if (!ball.closed) {
    throw std::invalid_argument("orbit_quiver: group ball does not close within the enumeration bound");
  }
  auto vreps = vertex_orbit_reps(a.ambient, ball);
  auto areps = arrow_orbit_reps(a.ambient, ball);

  std::set<std::string> qverts;
  for (const auto& [_, r] : vreps) qverts.insert(r);
  std::vector<Arrow> qarrows;
  std::set<std::string> done;
  for (const auto& ar : a.ambient.arrows()) {
    const std::string r = areps.at(ar.id);
    if (!done.insert(r).second) continue;
    const Arrow& rep_arrow = a.ambient.arrow(r);
    qarrows.push_back({r, vreps.at(rep_arrow.from), vreps.at(rep_arrow.to)});
  }

  OrbitQuiverResult out;
  out.quotient = Quiver(std::vector<std::string>(qverts.begin(), qverts.end()), qarrows);
  out.projection.source = a.ambient;
  out.projection.target = out.quotient;
  out.projection.vertex_map = vreps;
  out.projection.arrow_map = areps;

  std::vector<Relation> induced;
  for (const auto& g : ideal.generators) {
    Relation img = map_relation(out.projection, g);
    if (!img.terms.empty()) induced.push_back(img);
  }
  out.induced_ideal = IdealPresentation::make(out.quotient, induced, ideal.nilpotency_bound,
                                              ideal.truncation_length);
  return out;
}

GaloisReport is_galois_covering(const BoundQuiverMorphism& m, const ActionPresentation& a) {
  GaloisReport rep;
  Ball ball = enumerate_ball(a);
  if (!ball.closed) {
    throw std::invalid_argument("is_galois_covering: group ball does not close within the enumeration bound");
  }
  FreenessReport fr = acts_freely(a);
  if (!fr.free) {
    rep.detail = "group does not act freely: " + fr.witness;
    return rep;
  }
  // f must factor through the orbit projection.
  for (const auto& e : ball.elements) {
    for (const auto& [x, y] : e.vmap) {
      if (m.f.vertex_map.at(x) != m.f.vertex_map.at(y)) {
        rep.detail = "f is not constant on the orbit of vertex " + x;
        return rep;
      }
    }
    for (const auto& [x, y] : e.amap) {
      if (m.f.arrow_map.at(x) != m.f.arrow_map.at(y)) {
        rep.detail = "f is not constant on the orbit of arrow " + x;
        return rep;
      }
    }
  }
  OrbitQuiverResult orb = orbit_quiver(a, m.source_ideal);

  // nu: Q/G -> Q' forced by nu . pi = f.
  QuiverMorphism nu;
  nu.source = orb.quotient;
  nu.target = m.f.target;
  for (const auto& v : orb.quotient.vertices()) nu.vertex_map[v] = m.f.vertex_map.at(v);
  for (const auto& ar : orb.quotient.arrows()) nu.arrow_map[ar.id] = m.f.arrow_map.at(ar.id);
  if (!morphism_defects(nu).empty()) {
    rep.detail = "induced map on the orbit quiver is not a morphism";
    return rep;
  }
  std::set<std::string> vimg, aimg;
  for (const auto& [_, y] : nu.vertex_map) vimg.insert(y);
  for (const auto& [_, y] : nu.arrow_map) aimg.insert(y);
  if (vimg.size() != orb.quotient.vertices().size() || vimg.size() != m.f.target.vertices().size() ||
      aimg.size() != orb.quotient.arrows().size() || aimg.size() != m.f.target.arrows().size()) {
    rep.detail = "induced map on the orbit quiver is not bijective";
    return rep;
  }

  // Isomorphism of quivers with relations: ideals match in both directions.
  IdealMembership dst(m.target_ideal);
  for (const auto& g : orb.induced_ideal.generators) {
    if (!dst.contains(map_relation(nu, g))) {
      rep.detail = "induced ideal does not map into the target ideal on " + relation_str(g);
      return rep;
    }
  }
  QuiverMorphism nu_inv;
  nu_inv.source = m.f.target;
  nu_inv.target = orb.quotient;
  for (const auto& [x, y] : nu.vertex_map) nu_inv.vertex_map[y] = x;
  for (const auto& [x, y] : nu.arrow_map) nu_inv.arrow_map[y] = x;
  IdealMembership ind(orb.induced_ideal);
  for (const auto& tg : dst.minimal_generators()) {
    if (!ind.contains(map_relation(nu_inv, tg.relation))) {
      rep.detail = "target ideal does not pull back into the induced ideal on " + relation_str(tg.relation);
      return rep;
    }
  }
  rep.ok = true;
  rep.detail = "Galois with group of order " + std::to_string(ball.elements.size());
  return rep;
}

std::vector<GroupElement> enumerate_automorphisms(const Quiver& q, const IdealPresentation& ideal,
                                                  long node_cap, bool* complete) {
  if (complete) *complete = true;
  const auto& verts = q.vertices();
  // Degree/loop signature pruning.
  auto signature = [&](const std::string& v) {
    int loops = 0;
    for (const auto& a : q.out_arrows(v)) {
      if (q.arrow(a).to == v) ++loops;
    }
    return std::tuple<size_t, size_t, int>(q.out_arrows(v).size(), q.in_arrows(v).size(), loops);
  };

  std::vector<GroupElement> found;
  std::map<std::string, std::string> vmap;
  std::set<std::string> vused;
  long nodes = 0;

  IdealMembership mem(ideal);

  std::function<void(size_t)> rec = [&](size_t i) {
    if (node_cap >= 0 && ++nodes > node_cap) {
      if (complete) *complete = false;
      return;
    }
    if (i == verts.size()) {
      // Assign arrows: for each arrow pick an unused arrow between the image
      // endpoints; backtrack over parallel choices.
      const auto& arrows = q.arrows();
      std::map<std::string, std::string> amap;
      std::set<std::string> aused;
      std::function<void(size_t)> arec = [&](size_t j) {
        if (node_cap >= 0 && ++nodes > node_cap) {
          if (complete) *complete = false;
          return;
        }
        if (j == arrows.size()) {
          QuiverMorphism morph;
          morph.source = q;
          morph.target = q;
          morph.vertex_map = vmap;
          morph.arrow_map = amap;
          for (const auto& g : ideal.generators) {
            if (!mem.contains(map_relation(morph, g))) return;
          }
          GroupElement e;
          e.vmap = vmap;
          e.amap = amap;
          e.word = "aut" + std::to_string(found.size());
          found.push_back(e);
          return;
        }
        const Arrow& ar = arrows[j];
        const std::string tf = vmap.at(ar.from), tt = vmap.at(ar.to);
        for (const auto& cand : q.out_arrows(tf)) {
          if (q.arrow(cand).to != tt || aused.count(cand)) continue;
          amap[ar.id] = cand;
          aused.insert(cand);
          arec(j + 1);
          aused.erase(cand);
          amap.erase(ar.id);
        }
      };
      arec(0);
      return;
    }
    const std::string& v = verts[i];
    for (const auto& w : verts) {
      if (vused.count(w) || signature(v) != signature(w)) continue;
      vmap[v] = w;
      vused.insert(w);
      rec(i + 1);
      vused.erase(w);
      vmap.erase(v);
    }
  };
  rec(0);
  return found;
}

std::vector<std::vector<GroupElement>> subgroups_of(const std::vector<GroupElement>& elements) {
  // Index elements and build the multiplication table.
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i].key()] = i;
  const size_t n = elements.size();
  std::vector<std::vector<size_t>> mul(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      mul[i][j] = index.at(compose_elements(elements[i], elements[j]).key());
    }
  }
  size_t id = 0;
  for (size_t i = 0; i < n; ++i) {
    if (elements[i].is_identity()) { id = i; break; }
  }
  auto closure = [&](std::set<size_t> s) {
    s.insert(id);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<size_t> cur(s.begin(), s.end());
      for (size_t a : cur) {
        for (size_t b : cur) {
          if (s.insert(mul[a][b]).second) grew = true;
        }
      }
      // Inverses: in a finite group, powers reach the inverse, so closure
      // under multiplication alone suffices.
    }
    return s;
  };
  std::set<std::set<size_t>> groups{closure({})};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : std::set<std::set<size_t>>(groups)) {
      for (size_t e = 0; e < n; ++e) {
        if (s.count(e)) continue;
        std::set<size_t> bigger = s;
        bigger.insert(e);
        if (groups.insert(closure(bigger)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<GroupElement>> out;
  for (const auto& s : groups) {
    std::vector<GroupElement> g;
    for (size_t i : s) g.push_back(elements[i]);
    out.push_back(g);
  }
  return out;
}

bool admissible_implies_free_check(const ActionPresentation& a) {
  if (!a.ambient.is_connected()) return true;  // hypothesis not met: vacuous
  std::set<std::pair<std::string, std::string>> ends;
  for (const auto& ar : a.ambient.arrows()) {
    if (!ends.emplace(ar.from, ar.to).second) return true;  // double arrows: vacuous
  }
  AdmissibilityReport adm = is_admissible(a);
  if (!adm.admissible) return true;
  return acts_freely(a).free;
}

}  // namespace qcov
