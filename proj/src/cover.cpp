#include "qcov/cover.hpp"

#include <algorithm>
#include <sstream>

namespace qcov {

namespace {

// Class registry: exact keys via the word solver when available, otherwise
// pairwise comparison through the homotopy engine (refusing on Undecided).
class ClassRegistry {
public:
  explicit ClassRegistry(const HomotopyEngine& engine) : engine_(engine) {
    exact_ = engine.solver().exact() && engine.quiver().is_connected();
  }

  // Returns the canonical id if the walk's class is already known.
  std::optional<std::string> find(const Walk& w) {
    if (exact_) {
      auto it = by_key_.find(key(w));
      return it == by_key_.end() ? std::nullopt : std::make_optional(it->second);
    }
    const std::string end = walk_target(engine_.quiver(), w);
    for (const auto& [id, rep] : reps_) {
      if (walk_target(engine_.quiver(), rep) != end) continue;
      switch (engine_.equivalent(w, rep)) {
        case Equivalence::Yes: return id;
        case Equivalence::No: break;
        case Equivalence::Undecided:
          throw ClassIdentificationError("cannot decide whether walks '" + walk_str(w) + "' and '" +
                                         walk_str(rep) + "' are homotopic under the configured caps");
      }
    }
    return std::nullopt;
  }

  void insert(const std::string& id, const Walk& canonical) {
    reps_.emplace_back(id, canonical);
    if (exact_) by_key_.emplace(key(canonical), id);
  }

private:
  std::string key(const Walk& w) const {
    return walk_target(engine_.quiver(), w) + "|" + engine_.solver().normal_form_str(w);
  }
  const HomotopyEngine& engine_;
  bool exact_ = false;
  std::vector<std::pair<std::string, Walk>> reps_;
  std::map<std::string, std::string> by_key_;
};

std::string class_id(const Walk& w) { return "[" + (w.trivial() ? "" : walk_str(w)) + "]"; }

}  // namespace

TruncatedCover build_universal_cover(const Quiver& q, const IdealPresentation& ideal,
                                     const std::string& base, int radius, HomotopyCaps caps) {
  if (!q.has_vertex(base)) throw std::invalid_argument("build_universal_cover: unknown base " + base);
  if (!q.is_connected()) throw std::invalid_argument("build_universal_cover: quiver is disconnected");
  if (radius < 0) throw std::invalid_argument("build_universal_cover: negative radius");

  auto engine = std::make_shared<HomotopyEngine>(q, ideal, caps);
  ClassRegistry registry(*engine);

  TruncatedCover out;
  out.base_vertex = base;
  out.radius = radius;
  out.engine = engine;

  Walk trivial;
  trivial.base = base;
  const std::string base_id = class_id(trivial);
  registry.insert(base_id, trivial);
  out.class_walks[base_id] = trivial;
  out.distance[base_id] = 0;
  out.base_class = base_id;

  std::vector<std::string> layer{base_id};
  for (int d = 0; d < radius && !layer.empty(); ++d) {
    // Deterministic order: canonical walks shortlex within the layer.
    std::sort(layer.begin(), layer.end(), [&](const std::string& a, const std::string& b) {
      return out.class_walks.at(a) < out.class_walks.at(b);
    });
    std::vector<std::string> next;
    for (const auto& vid : layer) {
      const Walk& u = out.class_walks.at(vid);
      const std::string at = walk_target(q, u);
      std::vector<WalkStep> extensions;
      for (const auto& a : q.out_arrows(at)) extensions.push_back({a, true});
      for (const auto& a : q.in_arrows(at)) extensions.push_back({a, false});
      std::sort(extensions.begin(), extensions.end());
      for (const auto& step : extensions) {
        Walk w = u;
        w.steps.push_back(step);
        w = walk_reduce(q, w);
        if (registry.find(w)) continue;
        const std::string id = class_id(w);
        registry.insert(id, w);
        out.class_walks[id] = w;
        out.distance[id] = d + 1;
        next.push_back(id);
      }
    }
    layer = std::move(next);
  }
  for (const auto& [id, dist] : out.distance) {
    if (dist == radius) out.frontier.insert(id);
  }

  // Arrows (u~, alpha) with both endpoints inside the ball.
  std::vector<std::string> vertex_ids;
  for (const auto& [id, _] : out.class_walks) vertex_ids.push_back(id);
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> arrow_proj;
  for (const auto& vid : vertex_ids) {
    const Walk& u = out.class_walks.at(vid);
    const std::string at = walk_target(q, u);
    for (const auto& a : q.out_arrows(at)) {
      Walk w = u;
      w.steps.push_back({a, true});
      w = walk_reduce(q, w);
      auto target = registry.find(w);
      if (!target) continue;  // leaves the truncation
      const std::string aid = vid + "|" + a;
      arrows.push_back({aid, vid, *target});
      arrow_proj[aid] = a;
    }
  }

  out.cover = Quiver(vertex_ids, arrows);
  out.projection.source = out.cover;
  out.projection.target = q;
  for (const auto& vid : vertex_ids) {
    out.projection.vertex_map[vid] = walk_target(q, out.class_walks.at(vid));
  }
  out.projection.arrow_map = arrow_proj;

  // Lift the base ideal's minimal and zero generators at every anchor where
  // all terms stay inside the ball.
  std::vector<Relation> lifted;
  auto tagged = IdealMembership(ideal).minimal_generators();
  for (const auto& vid : vertex_ids) {
    const std::string over = out.projection.vertex_map.at(vid);
    for (const auto& tg : tagged) {
      if (relation_source(q, tg.relation) != over) continue;
      Relation lift;
      bool complete = true;
      std::optional<std::string> common_end;
      for (const auto& term : tg.relation.terms) {
        Path lp;
        lp.base = vid;
        std::string cur = vid;
        for (const auto& stepa : term.path.steps) {
          const std::string aid = cur + "|" + stepa;
          if (!out.cover.has_arrow(aid)) { complete = false; break; }
          lp.steps.push_back(aid);
          cur = out.cover.arrow(aid).to;
        }
        if (!complete) break;
        if (common_end && *common_end != cur) {
          throw std::logic_error("cover ideal: minimal relation lifted with incoherent endpoints");
        }
        common_end = cur;
        lift.terms.push_back({term.coeff, lp});
      }
      if (complete) lifted.push_back(lift);
    }
  }
  out.cover_ideal = IdealPresentation::make(out.cover, lifted, ideal.nilpotency_bound,
                                            ideal.truncation_length);
  return out;
}

DeckElement deck_action(const TruncatedCover& cov, const Walk& v) {
  const Quiver& q = cov.engine->quiver();
  if (!walk_valid(q, v) || v.base != cov.base_vertex || walk_target(q, v) != cov.base_vertex) {
    throw std::invalid_argument("deck_action: not a closed walk at the base point");
  }
  ClassRegistry registry(*cov.engine);
  for (const auto& [id, w] : cov.class_walks) registry.insert(id, w);

  DeckElement g;
  const Walk vinv = walk_inverse(q, v);
  g.identity = cov.engine->equivalent(v, Walk{cov.base_vertex, {}}) == Equivalence::Yes;
  for (const auto& [id, u] : cov.class_walks) {
    Walk moved = walk_reduce(q, walk_concat(q, vinv, u));  // u . v^-1 read right-to-left
    auto img = registry.find(moved);
    if (!img) continue;
    g.vertex_map[id] = *img;
    if (!g.identity && *img == id) {
      throw std::logic_error("deck_action: non-identity deck element fixes vertex " + id);
    }
  }
  for (const auto& a : cov.cover.arrows()) {
    auto s = g.vertex_map.find(a.from);
    if (s == g.vertex_map.end()) continue;
    const std::string base_arrow = cov.projection.arrow_map.at(a.id);
    const std::string image_arrow = s->second + "|" + base_arrow;
    if (!cov.cover.has_arrow(image_arrow)) continue;
    // Only keep the arrow if the target is also moved coherently.
    auto t = g.vertex_map.find(a.to);
    if (t == g.vertex_map.end()) continue;
    if (cov.cover.arrow(image_arrow).to != t->second) {
      throw std::logic_error("deck_action: arrow image incoherent with vertex images");
    }
    g.arrow_map[a.id] = image_arrow;
  }
  return g;
}

SimplifiedPresentation cover_pi1(const TruncatedCover& cov) {
  return simplify(pi1_presentation(cov.cover, cov.cover_ideal, cov.base_class));
}

std::string cover_dot(const TruncatedCover& cov) {
  std::ostringstream os;
  os << "digraph cover {\n";
  for (const auto& v : cov.cover.vertices()) {
    os << "  \"" << v << "\"";
    if (cov.is_frontier(v)) os << " [style=dashed]";
    os << ";\n";
  }
  for (const auto& a : cov.cover.arrows()) {
    os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\""
       << cov.projection.arrow_map.at(a.id) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qcov
