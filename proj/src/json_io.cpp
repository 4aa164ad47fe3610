#include "qcov/json_io.hpp"

#include <fstream>

namespace qcov {

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows")) {
    throw std::invalid_argument("quiver JSON must have 'vertices' and 'arrows'");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    arrows.push_back({a.at("id").get<std::string>(), a.at("from").get<std::string>(),
                      a.at("to").get<std::string>()});
  }
  return Quiver(vertices, arrows);
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  }
  j["arrows"] = arrows;
  return j;
}

QuiverMorphism morphism_from_json(const Json& j, const Quiver& source, const Quiver& target) {
  QuiverMorphism f;
  f.source = source;
  f.target = target;
  for (const auto& [k, v] : j.at("vertex_map").items()) f.vertex_map[k] = v.get<std::string>();
  for (const auto& [k, v] : j.at("arrow_map").items()) f.arrow_map[k] = v.get<std::string>();
  auto defects = morphism_defects(f);
  if (!defects.empty()) throw std::invalid_argument("morphism JSON: " + defects.front());
  return f;
}

Json morphism_to_json(const QuiverMorphism& f) {
  Json j;
  j["vertex_map"] = f.vertex_map;
  j["arrow_map"] = f.arrow_map;
  return j;
}

Relation relation_from_json(const Json& j, const Quiver& q) {
  Relation r;
  for (const auto& t : j.at("terms")) {
    Relation::Term term;
    term.coeff = Rational::parse(t.at("coeff").get<std::string>());
    Path p;
    for (const auto& s : t.at("path")) p.steps.push_back(s.get<std::string>());
    if (t.contains("base")) p.base = t.at("base").get<std::string>();
    term.path = p;
    r.terms.push_back(term);
  }
  std::string why;
  if (!relation_well_formed(q, r, &why)) throw std::invalid_argument("relation JSON: " + why);
  return r;
}

Json relation_to_json(const Relation& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"coeff", t.coeff.str()}, {"path", t.path.steps}});
  }
  return Json{{"terms", terms}};
}

IdealPresentation ideal_from_json(const Json& j, const Quiver& q) {
  std::vector<Relation> gens;
  if (j.contains("generators")) {
    for (const auto& g : j.at("generators")) gens.push_back(relation_from_json(g, q));
  }
  std::optional<int> nil;
  if (j.contains("nilpotency_bound")) nil = j.at("nilpotency_bound").get<int>();
  std::optional<int> trunc;
  if (j.contains("truncation_length")) trunc = j.at("truncation_length").get<int>();
  return IdealPresentation::make(q, gens, nil, trunc);
}

Json ideal_to_json(const IdealPresentation& ideal) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(relation_to_json(g));
  j["generators"] = gens;
  if (ideal.nilpotency_bound) j["nilpotency_bound"] = *ideal.nilpotency_bound;
  j["truncation_length"] = ideal.truncation_length;
  return j;
}

IdealPresentation bound_quiver_from_json(const Json& j) {
  if (j.contains("quiver")) {
    Quiver q = quiver_from_json(j.at("quiver"));
    if (j.contains("ideal")) return ideal_from_json(j.at("ideal"), q);
    return IdealPresentation::make(q, {});
  }
  // A bare quiver file doubles as a bound quiver with the zero ideal.
  Quiver q = quiver_from_json(j);
  return IdealPresentation::make(q, {});
}

Json bound_quiver_to_json(const IdealPresentation& ideal) {
  Json j;
  j["quiver"] = quiver_to_json(ideal.ambient);
  j["ideal"] = ideal_to_json(ideal);
  return j;
}

ActionPresentation group_from_json(const Json& j, const Quiver& ambient, const IdealPresentation* ideal) {
  ActionPresentation a;
  a.ambient = ambient;
  if (j.contains("enumeration_bound")) a.enumeration_bound = j.at("enumeration_bound").get<int>();
  for (const auto& g : j.at("generators")) {
    std::map<std::string, std::string> vmap, amap;
    for (const auto& [k, v] : g.at("vertex_map").items()) vmap[k] = v.get<std::string>();
    for (const auto& [k, v] : g.at("arrow_map").items()) amap[k] = v.get<std::string>();
    a.generators.push_back(make_automorphism(ambient, vmap, amap, ideal));
  }
  return a;
}

Representation representation_from_json(const Json& j, const Quiver& q) {
  Representation m = zero_representation(q);
  for (const auto& [k, v] : j.at("dims").items()) {
    if (!q.has_vertex(k)) throw std::invalid_argument("rep JSON: unknown vertex " + k);
    m.dims[k] = v.get<int>();
  }
  for (const auto& a : q.arrows()) {
    m.mats[a.id] = Mat::Zero(m.dim_at(a.from), m.dim_at(a.to));
  }
  if (j.contains("mats")) {
    for (const auto& [k, rows] : j.at("mats").items()) {
      if (!q.has_arrow(k)) throw std::invalid_argument("rep JSON: unknown arrow " + k);
      const Arrow& ar = q.arrow(k);
      Mat mat = Mat::Zero(m.dim_at(ar.from), m.dim_at(ar.to));
      if (static_cast<Eigen::Index>(rows.size()) != mat.rows()) {
        throw std::invalid_argument("rep JSON: matrix row count mismatch on arrow " + k);
      }
      Eigen::Index i = 0;
      for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != mat.cols()) {
          throw std::invalid_argument("rep JSON: matrix column count mismatch on arrow " + k);
        }
        Eigen::Index jj = 0;
        for (const auto& entry : row) mat(i, jj++) = Rational::parse(entry.get<std::string>());
        ++i;
      }
      m.mats[k] = mat;
    }
  }
  return m;
}

Json representation_to_json(const Quiver& q, const Representation& m) {
  Json dims = Json::object();
  for (const auto& [v, d] : m.dims) dims[v] = d;
  Json mats = Json::object();
  for (const auto& a : q.arrows()) {
    Mat mat = rep_matrix(q, m, a.id);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j).str());
      rows.push_back(row);
    }
    mats[a.id] = rows;
  }
  return Json{{"dims", dims}, {"mats", mats}};
}

Json cover_to_json(const TruncatedCover& cov) {
  Json j;
  j["cover"] = quiver_to_json(cov.cover);
  j["projection"] = morphism_to_json(cov.projection);
  j["base_class"] = cov.base_class;
  j["base_vertex"] = cov.base_vertex;
  j["radius"] = cov.radius;
  j["frontier"] = std::vector<std::string>(cov.frontier.begin(), cov.frontier.end());
  Json walks = Json::object();
  for (const auto& [id, w] : cov.class_walks) walks[id] = walk_str(w);
  j["class_walks"] = walks;
  j["ideal"] = ideal_to_json(cov.cover_ideal);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace qcov
