#ifndef QCOV_RELATIONS_HPP
#define QCOV_RELATIONS_HPP

#include "qcov/linalg.hpp"
#include "qcov/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcov {

/// Linear combination of parallel paths of length >= 1 with nonzero
/// coefficients; paths pairwise distinct.
struct Relation {
  struct Term {
    Rational coeff;
    Path path;
  };
  std::vector<Term> terms;

  size_t size() const { return terms.size(); }
};

std::string relation_source(const Quiver& q, const Relation& r);
std::string relation_target(const Quiver& q, const Relation& r);
/// Sorts terms by path, merges duplicates, drops zero coefficients.
Relation relation_normalize(const Quiver& q, const Relation& r);
bool relation_well_formed(const Quiver& q, const Relation& r, std::string* why = nullptr);
std::string relation_str(const Relation& r);
Relation map_relation(const QuiverMorphism& f, const Relation& r);

/// Ideal of the path category given by generators, with truncated-degree
/// semantics: all computations read paths of length <= truncation_length
/// only. When nilpotency_bound is set, every path of length >= the bound is
/// treated as an ideal element (admissible-ideal regime), which makes the
/// truncated answers exact.
struct IdealPresentation {
  Quiver ambient;
  std::vector<Relation> generators;
  std::optional<int> nilpotency_bound;
  int truncation_length = 0;

  static int default_truncation(const std::vector<Relation>& gens, std::optional<int> nilpotency);
  static IdealPresentation make(Quiver q, std::vector<Relation> gens,
                                std::optional<int> nilpotency = std::nullopt,
                                std::optional<int> truncation = std::nullopt);
  int max_generator_length() const;
};

enum class RelationClass { Zero, Minimal, Decomposable, NotInIdeal };
std::string to_string(RelationClass c);

struct TaggedRelation {
  Relation relation;
  RelationClass tag = RelationClass::Zero;  // Zero or Minimal
};

/// Exact membership and classification against a truncated ideal. Caches the
/// eliminated span per (source, target) pair; immutable w.r.t. the ideal.
class IdealMembership {
public:
  explicit IdealMembership(const IdealPresentation& ideal);

  const IdealPresentation& ideal() const { return ideal_; }

  /// Candidate lies in the truncated ideal span. Throws std::invalid_argument
  /// when a candidate path exceeds the truncation length.
  bool contains(const Relation& candidate) const;
  bool contains_path(const Path& p) const;

  /// Dimension of (kQ/I)(x, y), both spaces truncated at length L.
  int quotient_hom_dim(const std::string& x, const std::string& y) const;

  /// Zero / minimal / decomposable / not-in-ideal per the subset criterion.
  /// Throws std::length_error past the subset-explosion cap.
  RelationClass classify(const Relation& r, int subset_cap = 20) const;

  /// Greedy split of the ideal's generators into minimal and zero relations.
  std::vector<TaggedRelation> minimal_generators(int subset_cap = 20) const;

private:
  struct Space {
    std::vector<Path> basis;            // all paths x -> y, length <= L
    std::map<Path, size_t> index;
    Mat span_rref;                      // RREF of ideal span rows
    std::vector<Eigen::Index> pivots;
  };
  const Space& space(const std::string& x, const std::string& y) const;
  Vec coords(const Space& s, const Relation& r) const;

  IdealPresentation ideal_;
  mutable std::map<std::pair<std::string, std::string>, Space> cache_;
};

/// Convenience wrappers matching the operation names.
bool membership(const IdealPresentation& ideal, const Relation& candidate);
RelationClass classify_relation(const IdealPresentation& ideal, const Relation& r, int subset_cap = 20);
std::vector<TaggedRelation> minimal_generators(const IdealPresentation& ideal, int subset_cap = 20);

}  // namespace qcov

#endif  // QCOV_RELATIONS_HPP
