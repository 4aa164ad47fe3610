#ifndef QCOV_STRINGS_BANDS_HPP
#define QCOV_STRINGS_BANDS_HPP

#include "qcov/cover.hpp"
#include "qcov/group_action.hpp"
#include "qcov/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcov {

struct StringAlgebraReport {
  bool ok = false;
  std::string witness;
};

/// (R1) at most two arrows in and out of every vertex, (R2) at most one
/// relation-free composition per arrow on each side, and a monomial ideal.
StringAlgebraReport is_string_presentation(const IdealPresentation& ideal);

/// A string: reduced walk avoiding the ideal in both orientations, stored in
/// its canonical form (lexicographically least of the walk and its inverse).
struct StringWord {
  Walk walk;
  std::string canonical;  // serialized canonical walk
  bool operator<(const StringWord& o) const { return canonical < o.canonical; }
};

/// A band: primitive cyclic string whose rotations all stay strings, stored
/// as the least rotation over the word and its inverse.
struct BandWord {
  Walk walk;  // canonical rotation, closed
  std::string canonical;
  bool operator<(const BandWord& o) const { return canonical < o.canonical; }
};

bool is_valid_string(const IdealMembership& mem, const Walk& w);
std::vector<StringWord> enumerate_strings(const IdealPresentation& ideal, int max_len);
std::vector<BandWord> enumerate_bands(const IdealPresentation& ideal, int max_len);

std::optional<StringWord> make_string(const IdealPresentation& ideal, const Walk& w);
std::optional<BandWord> make_band(const IdealPresentation& ideal, const Walk& w);

/// 0/1 incidence representation along the walk; indecomposable by
/// construction for string algebras.
Representation string_module(const Quiver& q, const StringWord& s);

/// Band module: the canonical band traversed with identity blocks except a
/// Jordan block J_n(lambda) on the lexicographically least forward step.
Representation band_module(const Quiver& q, const BandWord& b, int n, const Rational& lambda);

/// Jordan block with lambda on the diagonal and 1 below it.
Mat jordan_block(int n, const Rational& lambda);

/// Line in a (truncated) cover: a convex full subcategory whose underlying
/// shape is linear.
struct Line {
  std::vector<std::string> vertices;  // in order along the line
  std::vector<std::string> arrows;    // arrows[i] joins vertices[i], vertices[i+1] (either way)
  bool truncated = false;             // endpoints touch the cover frontier
};

struct LineCheck {
  bool ok = false;
  std::string why;
};
/// Convexity and linearity of the full subquiver on the given vertices.
LineCheck check_line(const Quiver& q, const Line& line, int path_probe_len);

/// Identify an ordered vertex list as a line in the quiver (builds the arrow
/// list; rejects non-lines).
std::optional<Line> line_from_vertices(const Quiver& q, const std::vector<std::string>& vertices,
                                       int path_probe_len, std::string* why = nullptr);

/// The all-one-dimensional module B_L supported on a line.
Representation line_module(const Quiver& q, const Line& line);

struct LineStabilizer {
  bool trivial = true;
  int period = 0;      // index shift along the line's vertex order
  std::string witness;  // word of a smallest-shift element
  std::optional<std::map<std::string, std::string>> shift_vertex_map;
};
LineStabilizer line_stabilizer(const Quiver& q, const Line& line, const ActionPresentation& action);
/// Deck-ball variant for truncated covers: elements are partial, and a shift
/// only needs to map the line into itself where defined.
LineStabilizer line_stabilizer(const Quiver& q, const Line& line,
                               const std::vector<std::pair<std::string, DeckElement>>& ball);

}  // namespace qcov

#endif  // QCOV_STRINGS_BANDS_HPP
