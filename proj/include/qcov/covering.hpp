#ifndef QCOV_COVERING_HPP
#define QCOV_COVERING_HPP

#include "qcov/relations.hpp"

#include <string>
#include <vector>

namespace qcov {

/// Morphism of quivers with relations: the underlying quiver morphism must
/// send each source generator into the target ideal.
struct BoundQuiverMorphism {
  QuiverMorphism f;
  IdealPresentation source_ideal;
  IdealPresentation target_ideal;
};

struct RelCoveringReport {
  bool ok = false;
  CoveringReport quiver_covering;
  /// Human-readable failures: unmapped generators, fibre vertices where a
  /// minimal/zero relation does not lift, incoherent endpoints.
  std::vector<std::string> failures;
};

/// Covering of quivers with relations: the underlying map is a quiver
/// covering, generators map into the target ideal, and every minimal or zero
/// relation of the target lifts at every fibre vertex (both anchorings).
RelCoveringReport is_relation_covering(const BoundQuiverMorphism& m);

/// Unique lift of a minimal or zero relation of the target ideal, anchored
/// at a fibre vertex. Asserts that classification is preserved.
Relation lift_minimal_relation(const BoundQuiverMorphism& m, const Relation& rho,
                               const std::string& anchor, AnchorEnd end);

struct QuotientDimEntry {
  std::string anchor;       // window vertex in the source
  std::string other;        // vertex of the target
  int base_dim = 0;
  int fibre_sum = 0;
  bool complete = false;    // fibre support provably inside the window
  bool match = false;
};

struct QuotientDimsReport {
  bool ok = false;  // every complete entry matches
  std::vector<QuotientDimEntry> source_anchored;  // hom(anchor, fibre) vs hom(f(anchor), other)
  std::vector<QuotientDimEntry> target_anchored;  // hom(fibre, anchor) vs hom(other, f(anchor))
  int incomplete = 0;
};

/// Numerical check that the induced functor on truncated quotient categories
/// is a covering: fibre-summed hom dimensions match the base hom dimensions.
QuotientDimsReport verify_quotient_covering_dims(const BoundQuiverMorphism& m,
                                                 const std::vector<std::string>& window);

}  // namespace qcov

#endif  // QCOV_COVERING_HPP
