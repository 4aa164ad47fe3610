#include "qcov/covering.hpp"

#include <algorithm>
#include <set>

namespace qcov {

namespace {

std::vector<std::string> fibre_of(const QuiverMorphism& f, const std::string& target_vertex) {
  std::vector<std::string> out;
  for (const auto& v : f.source.vertices()) {
    if (f.vertex_map.at(v) == target_vertex) out.push_back(v);
  }
  return out;
}

// Lift every term of rho from the anchor; empty when some terms end at
// different fibre vertices (no coherent lift).
std::optional<Relation> lift_terms(const BoundQuiverMorphism& m, const Relation& rho,
                                   const std::string& anchor, AnchorEnd end) {
  Relation lift;
  std::optional<std::string> shared;
  for (const auto& t : rho.terms) {
    Path lp = lift_path(m.f, t.path, anchor, end);
    const std::string far_end = end == AnchorEnd::Start ? path_target(m.f.source, lp)
                                                        : path_source(m.f.source, lp);
    if (shared && *shared != far_end) return std::nullopt;
    shared = far_end;
    lift.terms.push_back({t.coeff, lp});
  }
  return lift;
}

}  // namespace

RelCoveringReport is_relation_covering(const BoundQuiverMorphism& m) {
  RelCoveringReport rep;
  rep.quiver_covering = is_quiver_covering(m.f);
  if (!rep.quiver_covering.ok) {
    throw std::invalid_argument("is_relation_covering: underlying map is not a quiver covering");
  }
  IdealMembership src(m.source_ideal);
  IdealMembership dst(m.target_ideal);

  // (kf)(I) must land in I': check on generators.
  for (const auto& g : m.source_ideal.generators) {
    Relation img = map_relation(m.f, g);
    if (img.terms.empty()) continue;
    if (!dst.contains(img)) {
      rep.failures.push_back("image of generator " + relation_str(g) + " is not in the target ideal");
    }
  }

  // Every minimal or zero relation of I' lifts at every fibre vertex.
  for (const auto& tg : dst.minimal_generators()) {
    const Relation& rho = tg.relation;
    const std::string a = relation_source(m.f.target, rho);
    const std::string b = relation_target(m.f.target, rho);
    for (const auto& x : fibre_of(m.f, a)) {
      auto lift = lift_terms(m, rho, x, AnchorEnd::Start);
      if (!lift) {
        rep.failures.push_back("relation " + relation_str(rho) + " has no coherent lift at source-fibre vertex " + x);
      } else if (!src.contains(*lift)) {
        rep.failures.push_back("lift of " + relation_str(rho) + " at " + x + " is not in the source ideal");
      }
    }
    for (const auto& y : fibre_of(m.f, b)) {
      auto lift = lift_terms(m, rho, y, AnchorEnd::End);
      if (!lift) {
        rep.failures.push_back("relation " + relation_str(rho) + " has no coherent lift at target-fibre vertex " + y);
      } else if (!src.contains(*lift)) {
        rep.failures.push_back("lift of " + relation_str(rho) + " at " + y + " (end-anchored) is not in the source ideal");
      }
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

Relation lift_minimal_relation(const BoundQuiverMorphism& m, const Relation& rho,
                               const std::string& anchor, AnchorEnd end) {
  IdealMembership dst(m.target_ideal);
  RelationClass target_class = dst.classify(rho);
  if (target_class != RelationClass::Minimal && target_class != RelationClass::Zero) {
    throw std::invalid_argument("lift_minimal_relation: relation is " + to_string(target_class) +
                                ", expected minimal or zero");
  }
  auto lift = lift_terms(m, rho, anchor, end);
  if (!lift) {
    throw std::logic_error("lift_minimal_relation: no coherent lift at " + anchor +
                           " (morphism is not a relation covering)");
  }
  RelationClass source_class = IdealMembership(m.source_ideal).classify(*lift);
  if (source_class != target_class) {
    throw std::logic_error("lift_minimal_relation: lift classifies as " + to_string(source_class) +
                           " but the target relation is " + to_string(target_class));
  }
  return *lift;
}

QuotientDimsReport verify_quotient_covering_dims(const BoundQuiverMorphism& m,
                                                 const std::vector<std::string>& window) {
  QuotientDimsReport rep;
  IdealMembership src(m.source_ideal);
  IdealMembership dst(m.target_ideal);
  const int L = m.source_ideal.truncation_length;
  const Quiver& q = m.f.source;
  std::set<std::string> win(window.begin(), window.end());

  // An anchor is safe when every path of length <= L from it (resp. into it)
  // stays inside the window; only then is the fibre sum provably complete.
  // Paths that merely pass through a missing region could both add fibre
  // vertices and change hom counts (truncated covers have partial stars at
  // their frontier).
  auto forward_safe = [&](const std::string& x) {
    for (const auto& p : enumerate_paths_from(q, x, L)) {
      std::string at = x;
      for (const auto& s : p.steps) {
        at = q.arrow(s).to;
        if (!win.count(at)) return false;
      }
    }
    return true;
  };
  auto backward_safe = [&](const std::string& y) {
    // Walk in-arrows transitively up to depth L.
    std::set<std::pair<std::string, int>> seen;
    std::vector<std::pair<std::string, int>> stack{{y, 0}};
    while (!stack.empty()) {
      auto [v, d] = stack.back();
      stack.pop_back();
      if (d >= L) continue;
      for (const auto& a : q.in_arrows(v)) {
        const std::string w = q.arrow(a).from;
        if (!win.count(w)) return false;
        if (seen.emplace(w, d + 1).second) stack.push_back({w, d + 1});
      }
    }
    return true;
  };

  rep.ok = true;
  for (const auto& x : window) {
    const bool safe = forward_safe(x);
    for (const auto& b : m.f.target.vertices()) {
      QuotientDimEntry e;
      e.anchor = x;
      e.other = b;
      e.base_dim = dst.quotient_hom_dim(m.f.vertex_map.at(x), b);
      e.complete = safe;
      for (const auto& y : fibre_of(m.f, b)) {
        if (win.count(y)) e.fibre_sum += src.quotient_hom_dim(x, y);
      }
      e.match = e.base_dim == e.fibre_sum;
      if (!e.complete) ++rep.incomplete;
      if (e.complete && !e.match) rep.ok = false;
      rep.source_anchored.push_back(e);
    }
  }
  for (const auto& y : window) {
    const bool safe = backward_safe(y);
    for (const auto& a : m.f.target.vertices()) {
      QuotientDimEntry e;
      e.anchor = y;
      e.other = a;
      e.base_dim = dst.quotient_hom_dim(a, m.f.vertex_map.at(y));
      e.complete = safe;
      for (const auto& x : fibre_of(m.f, a)) {
        if (win.count(x)) e.fibre_sum += src.quotient_hom_dim(x, y);
      }
      e.match = e.base_dim == e.fibre_sum;
      if (!e.complete) ++rep.incomplete;
      if (e.complete && !e.match) rep.ok = false;
      rep.target_anchored.push_back(e);
    }
  }
  return rep;
}

}  // namespace qcov
