#ifndef QCOV_HOMOTOPY_HPP
#define QCOV_HOMOTOPY_HPP

#include "qcov/pi1.hpp"
#include "qcov/relations.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qcov {

enum class Equivalence { Yes, No, Undecided };
std::string to_string(Equivalence e);

struct HomotopyCaps {
  /// Intermediate walks may exceed the longer input by this much. Negative
  /// means derive from the ideal (twice the longest minimal-relation path,
  /// plus slack for cancelling-pair insertions).
  int extra_length = -1;
  size_t class_size = 10000;
};

/// Walk-homotopy engine for ~_I: free cancellation (E1), replacement of the
/// parallel paths of a minimal relation (E2), both closed under context (E3).
class HomotopyEngine {
public:
  HomotopyEngine(const Quiver& q, const IdealPresentation& ideal, HomotopyCaps caps = {});

  const Quiver& quiver() const { return quiver_; }
  const IdealPresentation& ideal() const { return ideal_; }
  const std::vector<Relation>& minimal_relations() const { return minimal_; }

  /// One-move neighbours of a walk, restricted to the length cap:
  /// E1 deletions and insertions plus E2 rewrites in both orientations.
  /// Sets *pruned when a move was suppressed by the cap.
  std::vector<Walk> neighbors(const Walk& w, int length_cap, bool* pruned = nullptr) const;

  /// Decides w1 ~_I w2 (shared endpoints required). Uses the fundamental
  /// group's normal forms when the presentation simplifies to a free one;
  /// otherwise a capped bidirectional search over the move graph.
  Equivalence equivalent(const Walk& w1, const Walk& w2) const;

  /// The capped bidirectional BFS on its own (no group-theoretic shortcut).
  Equivalence equivalent_by_search(const Walk& w1, const Walk& w2) const;

  const WordSolver& solver() const { return *solver_; }
  int derived_extra_length() const;

private:
  Quiver quiver_;
  IdealPresentation ideal_;
  HomotopyCaps caps_;
  std::vector<Relation> minimal_;  // minimal relations only (no zero relations)
  std::shared_ptr<WordSolver> solver_;
};

}  // namespace qcov

#endif  // QCOV_HOMOTOPY_HPP
