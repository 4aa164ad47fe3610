#ifndef QCOV_JSON_IO_HPP
#define QCOV_JSON_IO_HPP

#include "qcov/cover.hpp"
#include "qcov/group_action.hpp"
#include "qcov/relations.hpp"
#include "qcov/reps.hpp"

#include <json.hpp>

#include <string>

namespace qcov {

using Json = nlohmann::json;

// Quiver:   {"vertices": ["x", ...], "arrows": [{"id": "a", "from": "x", "to": "y"}, ...]}
// Morphism: {"vertex_map": {...}, "arrow_map": {...}}
// Relation: {"terms": [{"coeff": "1", "path": ["g", "f"]}, ...]}   (coeffs "p" or "p/q")
// Ideal:    {"generators": [Relation...], "nilpotency_bound": N, "truncation_length": L}
// Bound quiver: {"quiver": Quiver, "ideal": Ideal}   (ideal optional)
// Group:    {"generators": [{"vertex_map": ..., "arrow_map": ...}, ...], "enumeration_bound": W}
// Rep:      {"dims": {"x": 2, ...}, "mats": {"a": [["1","0"],["0","1"]], ...}}  (row-major)

Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);

QuiverMorphism morphism_from_json(const Json& j, const Quiver& source, const Quiver& target);
Json morphism_to_json(const QuiverMorphism& f);

Relation relation_from_json(const Json& j, const Quiver& q);
Json relation_to_json(const Relation& r);

IdealPresentation ideal_from_json(const Json& j, const Quiver& q);
Json ideal_to_json(const IdealPresentation& ideal);

/// {"quiver":..., "ideal":...}; a missing ideal yields the zero ideal.
IdealPresentation bound_quiver_from_json(const Json& j);
Json bound_quiver_to_json(const IdealPresentation& ideal);

ActionPresentation group_from_json(const Json& j, const Quiver& ambient, const IdealPresentation* ideal);

Representation representation_from_json(const Json& j, const Quiver& q);
Json representation_to_json(const Quiver& q, const Representation& m);

Json cover_to_json(const TruncatedCover& cov);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qcov

#endif  // QCOV_JSON_IO_HPP
