#ifndef QCOV_QUIVER_HPP
#define QCOV_QUIVER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qcov {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;
};

/// Finite directed multigraph with string-named vertices and arrows.
/// Loops and parallel arrows are permitted. Immutable after construction.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(const std::string& v) const { return vset_.count(v) > 0; }
  bool has_arrow(const std::string& a) const { return aidx_.count(a) > 0; }
  const Arrow& arrow(const std::string& id) const;

  /// Arrow ids starting (resp. ending) at a vertex, in lexicographic order.
  const std::vector<std::string>& out_arrows(const std::string& v) const;
  const std::vector<std::string>& in_arrows(const std::string& v) const;

  bool is_connected() const;  // underlying undirected graph
  bool has_oriented_cycle() const;

private:
  std::vector<std::string> vertices_;  // sorted
  std::vector<Arrow> arrows_;          // sorted by id
  std::set<std::string> vset_;
  std::map<std::string, size_t> aidx_;
  std::map<std::string, std::vector<std::string>> out_, in_;
  static const std::vector<std::string> empty_;
};

/// Directed path. Steps are arrow ids in traversal order (first step first);
/// a length-0 path carries its vertex in `base`.
struct Path {
  std::string base;
  std::vector<std::string> steps;

  bool trivial() const { return steps.empty(); }
  size_t length() const { return steps.size(); }
  bool operator==(const Path& o) const { return trivial() == o.trivial() && (trivial() ? base == o.base : steps == o.steps); }
  bool operator<(const Path& o) const;
};

std::string path_source(const Quiver& q, const Path& p);
std::string path_target(const Quiver& q, const Path& p);
bool path_valid(const Quiver& q, const Path& p);
std::string path_str(const Path& p);

struct WalkStep {
  std::string arrow;
  bool forward = true;
  bool operator==(const WalkStep& o) const { return arrow == o.arrow && forward == o.forward; }
  /// Forward orientation sorts before inverse at equal arrow id.
  bool operator<(const WalkStep& o) const {
    return arrow != o.arrow ? arrow < o.arrow : (forward && !o.forward);
  }
};

/// Walk: arrows and formal inverses with matching endpoints. `base` is the
/// start vertex (also the carrier for trivial walks).
struct Walk {
  std::string base;
  std::vector<WalkStep> steps;

  bool trivial() const { return steps.empty(); }
  size_t length() const { return steps.size(); }
  bool operator==(const Walk& o) const { return base == o.base && steps == o.steps; }
  bool operator<(const Walk& o) const;
};

std::string walk_source(const Quiver& q, const Walk& w);
std::string walk_target(const Quiver& q, const Walk& w);
bool walk_valid(const Quiver& q, const Walk& w);
Walk walk_inverse(const Quiver& q, const Walk& w);
Walk walk_concat(const Quiver& q, const Walk& first, const Walk& then);
/// Removes adjacent (a, a^-1) pairs until none remain (confluent).
Walk walk_reduce(const Quiver& q, const Walk& w);
bool walk_reduced(const Walk& w);
Walk path_to_walk(const Path& p, const std::string& base);
/// Serialized step list: "a,-b,c"; trivial walks print as "[]".
std::string walk_str(const Walk& w);
Walk parse_walk(const Quiver& q, const std::string& s, const std::string& base);

/// Incidence-preserving map of quivers. Source and target are embedded so a
/// morphism is self-contained.
struct QuiverMorphism {
  Quiver source;
  Quiver target;
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;

  std::string v(const std::string& x) const;
  std::string a(const std::string& x) const;
};

/// Empty when well-formed; otherwise a list of defects.
std::vector<std::string> morphism_defects(const QuiverMorphism& f);
Path map_path(const QuiverMorphism& f, const Path& p);
Walk map_walk(const QuiverMorphism& f, const Walk& w);
QuiverMorphism identity_morphism(const Quiver& q);
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);  // g after f

struct CoveringReport {
  bool ok = false;
  /// (vertex, "out"/"in") pairs where the star bijection fails.
  std::vector<std::pair<std::string, std::string>> violations;
  bool surjective_on_vertices = false;
  bool surjective_on_arrows = false;
};

/// Def: f is a covering when arrow stars map bijectively at every vertex.
CoveringReport is_quiver_covering(const QuiverMorphism& f);

enum class AnchorEnd { Start, End };

/// Unique lift of a target path through a covering, anchored at a fibre
/// vertex on the chosen end. Throws std::invalid_argument on bad anchors.
Path lift_path(const QuiverMorphism& f, const Path& p, const std::string& anchor, AnchorEnd end);
Walk lift_walk(const QuiverMorphism& f, const Walk& w, const std::string& anchor, AnchorEnd end);

struct SpanningTree {
  std::set<std::string> tree_arrows;
  std::map<std::string, std::string> parent;      // vertex -> tree arrow toward root
  std::vector<std::string> non_tree_arrows;       // stable order
  std::string root;
  /// Tree walk from the root to a vertex.
  Walk walk_from_root(const Quiver& q, const std::string& v) const;
};

/// Deterministic BFS spanning tree of the underlying undirected graph,
/// expanding vertices and arrows in lexicographic order.
/// Throws std::invalid_argument if the quiver is disconnected.
SpanningTree spanning_tree(const Quiver& q, const std::string& base);

/// All paths from `from` of length <= max_len (targets unrestricted),
/// in (length, lexicographic) order.
std::vector<Path> enumerate_paths_from(const Quiver& q, const std::string& from, int max_len);
/// All paths from -> to of length <= max_len.
std::vector<Path> enumerate_paths(const Quiver& q, const std::string& from, const std::string& to, int max_len);
/// All walks from `from` of length <= max_len.
std::vector<Walk> enumerate_walks_from(const Quiver& q, const std::string& from, int max_len);

std::string quiver_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace qcov

#endif  // QCOV_QUIVER_HPP
