#ifndef QCOV_GROUP_ACTION_HPP
#define QCOV_GROUP_ACTION_HPP

#include "qcov/covering.hpp"
#include "qcov/relations.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcov {

/// Total automorphism of a quiver as plain maps; composable and hashable.
struct GroupElement {
  std::map<std::string, std::string> vmap;
  std::map<std::string, std::string> amap;
  std::string word;  // how it was produced from the generators, for reports

  bool is_identity() const;
  std::string key() const;  // canonical serialization of (vmap, amap)
};

GroupElement identity_element(const Quiver& q);
GroupElement compose_elements(const GroupElement& g, const GroupElement& f);  // g after f
GroupElement invert_element(const GroupElement& g);

/// Automorphism of (Q, I): bijective self-morphism whose induced functor
/// preserves the ideal. Construction validates everything and builds the
/// inverse.
struct BoundQuiverAutomorphism {
  Quiver ambient;
  GroupElement element;
};

BoundQuiverAutomorphism make_automorphism(const Quiver& q,
                                          std::map<std::string, std::string> vmap,
                                          std::map<std::string, std::string> amap,
                                          const IdealPresentation* ideal = nullptr);

/// Generator-presented group acting on a quiver; only the ball of words of
/// length <= enumeration_bound is ever materialized.
struct ActionPresentation {
  Quiver ambient;
  std::vector<BoundQuiverAutomorphism> generators;
  int enumeration_bound = 6;
};

struct Ball {
  std::vector<GroupElement> elements;  // identity first, then discovery order
  bool closed = false;                 // no growth before the bound: exact group
};

Ball enumerate_ball(const ActionPresentation& a);

struct FreenessReport {
  bool free = false;
  bool exact = false;  // ball closed, so the verdict is about the whole group
  std::string witness;  // "element <word> fixes vertex <v>" on failure
};
FreenessReport acts_freely(const ActionPresentation& a);

struct AdmissibilityReport {
  bool admissible = false;
  bool exact = false;
  std::string witness;
};
AdmissibilityReport is_admissible(const ActionPresentation& a);

struct OrbitQuiverResult {
  Quiver quotient;
  QuiverMorphism projection;
  IdealPresentation induced_ideal;
};

/// Orbit quiver with lexicographically least orbit representatives and the
/// induced ideal. Requires the ball to close (finite group).
OrbitQuiverResult orbit_quiver(const ActionPresentation& a, const IdealPresentation& ideal);

struct GaloisReport {
  bool ok = false;
  std::string detail;
};

/// Galois covering recognition: the group must act freely and the morphism
/// must factor through the orbit quiver by an isomorphism of quivers with
/// relations.
GaloisReport is_galois_covering(const BoundQuiverMorphism& m, const ActionPresentation& a);

/// Exhaustive (Q, I)-automorphism enumeration by backtracking, pruned by
/// degree and loop signatures. Sets *complete to false past the node cap.
std::vector<GroupElement> enumerate_automorphisms(const Quiver& q, const IdealPresentation& ideal,
                                                  long node_cap = 1000000, bool* complete = nullptr);

/// All subgroups of a (small) finite group given by its element list.
std::vector<std::vector<GroupElement>> subgroups_of(const std::vector<GroupElement>& elements);

/// Prop-style harness: under "connected, no double arrows", admissibility
/// must imply freeness on the given action.
bool admissible_implies_free_check(const ActionPresentation& a);

}  // namespace qcov

#endif  // QCOV_GROUP_ACTION_HPP
