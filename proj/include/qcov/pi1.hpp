#ifndef QCOV_PI1_HPP
#define QCOV_PI1_HPP

#include "qcov/relations.hpp"

#include <string>
#include <vector>

namespace qcov {

/// Words are sequences of signed 1-based generator indices.
using Word = std::vector<int>;

Word word_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(Word a, const Word& b);
std::string word_str(const Word& w, const std::vector<std::string>& names);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely and cyclically reduced
};

enum class GroupVerdict { Trivial, Free, InfiniteCyclic, Unresolved };
std::string to_string(GroupVerdict v);

struct SimplifiedPresentation {
  GroupPresentation presentation;
  GroupVerdict verdict = GroupVerdict::Unresolved;
  int free_rank = 0;  // meaningful for Free / InfiniteCyclic / Trivial (0)
  /// Elementary divisors > 1 followed by one 0 per free abelian factor.
  std::vector<BigInt> abelian_invariants;
  /// Original generator index -> word over the surviving generators.
  std::vector<Word> original_to_final;
  /// Two generators u, v with the single relator u^2 = v^(+-2): the group is
  /// the Klein bottle group Z x| Z, whose normal form is exact even though
  /// the presentation does not simplify to a free one.
  bool klein = false;
  int klein_v_sign = 1;  // relator u^2 v^-2 (+1) or u^2 v^2 (-1)
};

/// Fundamental group of the underlying graph: free on the non-tree arrows.
GroupPresentation graph_pi1(const Quiver& q, const std::string& base, SpanningTree* tree_out = nullptr);

/// Image of a walk in the free group on the non-tree arrows (tree arrows
/// collapse); multiplicative in concatenation order.
Word word_of_walk(const SpanningTree& tree, const GroupPresentation& p, const Walk& w);

/// Presentation of the fundamental group of (Q, I): graph generators with one
/// relator per ordered pair of paths of each minimal relation.
GroupPresentation pi1_presentation(const Quiver& q, const IdealPresentation& ideal,
                                   const std::string& base, SpanningTree* tree_out = nullptr);

/// Tietze simplification: eliminate generators occurring exactly once in some
/// relator, in lexicographic order; reduce and dedupe relators. Terminates
/// because every elimination removes a generator.
SimplifiedPresentation simplify(const GroupPresentation& p);

std::vector<BigInt> abelian_invariants(const GroupPresentation& p);

/// Sufficient simple-connectedness check: no oriented cycles, trivial pi1,
/// and every arrow is the unique path between its endpoints.
struct SimplyConnectedReport {
  bool ok = false;
  std::string detail;
};
SimplyConnectedReport simply_connected_criterion(const Quiver& q, const IdealPresentation& ideal);

/// Decides walk-class equality through the simplified fundamental group:
/// two walks from the base are homotopic iff their endpoints agree and their
/// group images coincide. Exact whenever simplification reaches a free
/// presentation.
class WordSolver {
public:
  WordSolver(const Quiver& q, const IdealPresentation& ideal, const std::string& base);

  bool exact() const { return exact_; }
  const SpanningTree& tree() const { return tree_; }
  const GroupPresentation& presentation() const { return pres_; }
  const SimplifiedPresentation& simplified() const { return simp_; }

  /// Walk image over the original generators.
  Word walk_word(const Walk& w) const;
  /// Normal form over the final generators; exact() must hold for this to be
  /// a complete invariant.
  Word normal_form(const Walk& w) const;
  std::string normal_form_str(const Walk& w) const;

private:
  Quiver quiver_;
  SpanningTree tree_;
  GroupPresentation pres_;
  SimplifiedPresentation simp_;
  bool exact_ = false;
};

}  // namespace qcov

#endif  // QCOV_PI1_HPP
