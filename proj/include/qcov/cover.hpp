#ifndef QCOV_COVER_HPP
#define QCOV_COVER_HPP

#include "qcov/homotopy.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

namespace qcov {

/// Radius-R ball of the universal cover of (Q, I): vertices are ~_I-classes
/// of walks from the base point, named by their canonical representative.
/// Frontier vertices (first reached at distance R) may have incomplete arrow
/// stars; everything closer satisfies the covering bijections.
struct TruncatedCover {
  Quiver cover;
  QuiverMorphism projection;  // cover -> base
  std::string base_class;
  std::string base_vertex;
  int radius = 0;
  std::set<std::string> frontier;
  IdealPresentation cover_ideal;  // anchored lifts of the base ideal's minimal/zero generators
  std::map<std::string, Walk> class_walks;  // cover vertex -> canonical walk
  std::map<std::string, int> distance;
  std::shared_ptr<const HomotopyEngine> engine;

  bool is_frontier(const std::string& v) const { return frontier.count(v) > 0; }
};

/// Thrown when two candidate walk classes cannot be told apart under the
/// caps; a misidentified vertex would corrupt the whole cover.
struct ClassIdentificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TruncatedCover build_universal_cover(const Quiver& q, const IdealPresentation& ideal,
                                     const std::string& base, int radius,
                                     HomotopyCaps caps = {});

/// Partial automorphism of the truncated cover induced by a closed walk at
/// the base point (the class [u] maps to [u v^-1]). Vertices whose image
/// leaves the truncation are excluded from the domain.
struct DeckElement {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
  bool identity = false;
};

DeckElement deck_action(const TruncatedCover& cov, const Walk& v);

/// pi1 of the truncated cover ball with the lifted ideal; "trivial" here
/// certifies triviality within the radius only.
SimplifiedPresentation cover_pi1(const TruncatedCover& cov);

std::string cover_dot(const TruncatedCover& cov);

}  // namespace qcov

#endif  // QCOV_COVER_HPP
