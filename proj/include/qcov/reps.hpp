#ifndef QCOV_REPS_HPP
#define QCOV_REPS_HPP

#include "qcov/cover.hpp"
#include "qcov/group_action.hpp"
#include "qcov/linalg.hpp"
#include "qcov/relations.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcov {

/// Finite-dimensional representation of a bound quiver with the contravariant
/// convention: for an arrow a: x -> y the matrix acts V_y -> V_x, so it has
/// dims[x] rows and dims[y] columns. Vertices and arrows absent from the
/// maps are treated as zero.
struct Representation {
  std::map<std::string, int> dims;
  std::map<std::string, Mat> mats;

  int dim_at(const std::string& v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
  }
  int total_dim() const {
    int t = 0;
    for (const auto& [_, d] : dims) t += d;
    return t;
  }
  std::vector<std::string> support() const {
    std::vector<std::string> s;
    for (const auto& [v, d] : dims) {
      if (d > 0) s.push_back(v);
    }
    return s;
  }
};

Representation zero_representation(const Quiver& q);
/// Simple module at a vertex.
Representation simple_representation(const Quiver& q, const std::string& v);
Mat rep_matrix(const Quiver& q, const Representation& m, const std::string& arrow);
/// Matrix of a path (product of step matrices in traversal order).
Mat eval_path(const Quiver& q, const Representation& m, const Path& p);

struct RepCheck {
  bool ok = false;
  std::string violation;
};
/// Shapes match and every ideal generator (and, under a nilpotency bound,
/// every long path) evaluates to zero.
RepCheck check_rep(const IdealPresentation& ideal, const Representation& m);

/// Morphism of representations as one matrix per vertex (f_x: M_x -> N_x).
using HomElement = std::map<std::string, Mat>;

std::vector<HomElement> hom_basis(const Quiver& q, const Representation& m, const Representation& n);
int hom_dim(const Quiver& q, const Representation& m, const Representation& n);

struct IsoResult {
  bool isomorphic = false;
  std::string detail;
};
/// Exact isomorphism test: invertible element search over Hom(M, N), with a
/// recursive-evaluation certificate of non-existence when the search fails.
/// Throws std::length_error past the dimension cap or evaluation budget.
IsoResult are_isomorphic(const Quiver& q, const Representation& m, const Representation& n,
                         uint64_t seed = 0, int dim_cap = 64);

enum class Indecomposability { Yes, No, Unresolved };
std::string to_string(Indecomposability v);

struct IndecResult {
  Indecomposability verdict = Indecomposability::Unresolved;
  std::string detail;
  /// For a No verdict: per-vertex dimensions of one complementary pair.
  std::map<std::string, int> part_a, part_b;
};
IndecResult is_indecomposable(const Quiver& q, const Representation& m,
                              uint64_t seed = 0, int dim_cap = 64);

/// Translate along a total automorphism: (^gM)_x = M_{g^-1 x}.
Representation translate(const Quiver& q, const Representation& m, const GroupElement& g);
/// Translate along a partial deck element; every supported vertex of m must
/// have an image (and its arrows likewise), otherwise throws.
Representation translate(const Quiver& cover, const Representation& m, const DeckElement& g);

struct PushDownResult {
  Representation rep;  // over the covering's target
  /// Base vertex -> ordered cover vertices whose blocks build the fibre sum.
  std::map<std::string, std::vector<std::string>> blocks;
  std::vector<std::string> warnings;
};
/// Push-down along a covering projection: fibre-wise direct sums with blocks
/// in lexicographic cover-vertex order.
PushDownResult push_down(const QuiverMorphism& pi, const Representation& m);

struct PullUpResult {
  Representation rep;  // over the covering's source, supported on the window
  bool windowed = true;
  std::vector<std::string> warnings;
};
PullUpResult pull_up(const QuiverMorphism& pi, const Representation& v,
                     const std::vector<std::string>& window);

struct AdjunctionReport {
  bool match = false;
  bool complete = false;  // window covers supp(m) and its neighbours
  int dim_hom_pushdown = 0;
  int dim_hom_pullup = 0;
};
/// dim Hom(F_lambda M, V) vs dim Hom(M, F_bullet V |window).
AdjunctionReport adjunction_check(const QuiverMorphism& pi, const Representation& m,
                                  const Representation& v, const std::vector<std::string>& window);

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b);

}  // namespace qcov

#endif  // QCOV_REPS_HPP
