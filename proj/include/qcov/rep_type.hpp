#ifndef QCOV_REP_TYPE_HPP
#define QCOV_REP_TYPE_HPP

#include "qcov/cover.hpp"
#include "qcov/quiver.hpp"
#include "qcov/relations.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcov {

enum class RepType { Finite, Tame, WildCertified, InfiniteType, Inconclusive };
std::string to_string(RepType t);

struct TypeVerdict {
  RepType verdict = RepType::Inconclusive;
  std::string certificate;  // classification name or embedding description
  std::map<std::string, std::string> embedding_vertices;  // pattern/euclidean vertex -> host vertex
  std::map<std::string, std::string> embedding_arrows;
};

/// Gabriel/ARS dichotomy on the underlying multigraph: Dynkin -> finite,
/// Euclidean -> tame, otherwise wild with a properly embedded Euclidean
/// subgraph as the certificate.
TypeVerdict classify_path_algebra(const Quiver& q);

/// The six wild host patterns and their duals as subquiver-embedding
/// searches.
TypeVerdict detect_wild_patterns(const Quiver& q);
const std::vector<Quiver>& wild_patterns();
Quiver opposite_quiver(const Quiver& q);

/// Re-validate a pattern embedding returned by detect_wild_patterns.
bool validate_embedding(const Quiver& pattern, const Quiver& host,
                        const std::map<std::string, std::string>& vmap,
                        const std::map<std::string, std::string>& amap);

/// Every vertex with >= 2 arrows in and >= 2 arrows out forces infinite
/// representation type (via infinite lines in the rad^2 cover).
TypeVerdict two_in_two_out_criterion(const Quiver& q);

/// Search the radius-R universal cover of (Q, rad^2) — or of a supplied
/// monomial ideal — for a tree of shape T(2,4,5): an 8-chain with a pendant
/// vertex on the fourth node, no two consecutive arrows composable into the
/// ideal.
struct TreeCertificate {
  std::vector<std::string> chain;  // 8 cover vertices
  std::string branch;              // pendant cover vertex
  bool displayed_orientation = false;  // matches one of the displayed trees
};
std::optional<TreeCertificate> e7tt_tree_certificate(const Quiver& q, int radius,
                                                     const IdealPresentation* ideal = nullptr);

/// All length-2 paths as zero relations (the rad^2 presentation).
IdealPresentation rad_square_ideal(const Quiver& q);

}  // namespace qcov

#endif  // QCOV_REP_TYPE_HPP
