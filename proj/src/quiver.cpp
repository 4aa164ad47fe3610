#include "qcov/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qcov {

const std::vector<std::string> Quiver::empty_{};

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("Quiver: duplicate vertex id");
  }
  vset_.insert(vertices_.begin(), vertices_.end());
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!aidx_.emplace(a.id, i).second) throw std::invalid_argument("Quiver: duplicate arrow id " + a.id);
    if (!vset_.count(a.from) || !vset_.count(a.to)) {
      throw std::invalid_argument("Quiver: arrow " + a.id + " touches undeclared vertex");
    }
    out_[a.from].push_back(a.id);
    in_[a.to].push_back(a.id);
  }
}

const Arrow& Quiver::arrow(const std::string& id) const {
  auto it = aidx_.find(id);
  if (it == aidx_.end()) throw std::invalid_argument("Quiver: no arrow " + id);
  return arrows_[it->second];
}

const std::vector<std::string>& Quiver::out_arrows(const std::string& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? empty_ : it->second;
}

const std::vector<std::string>& Quiver::in_arrows(const std::string& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? empty_ : it->second;
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<std::string> seen{vertices_.front()};
  std::deque<std::string> queue{vertices_.front()};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto visit = [&](const std::string& w) {
      if (seen.insert(w).second) queue.push_back(w);
    };
    for (const auto& a : out_arrows(v)) visit(arrow(a).to);
    for (const auto& a : in_arrows(v)) visit(arrow(a).from);
  }
  return seen.size() == vertices_.size();
}

bool Quiver::has_oriented_cycle() const {
  std::map<std::string, int> state;  // 0 unseen, 1 active, 2 done
  std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
    state[v] = 1;
    for (const auto& a : out_arrows(v)) {
      const std::string& w = arrow(a).to;
      int s = state.count(w) ? state[w] : 0;
      if (s == 1) return true;
      if (s == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (const auto& v : vertices_) {
    if (!state.count(v) && dfs(v)) return true;
  }
  return false;
}

// --- paths -----------------------------------------------------------------

bool Path::operator<(const Path& o) const {
  if (steps.size() != o.steps.size()) return steps.size() < o.steps.size();
  if (steps != o.steps) return steps < o.steps;
  return trivial() && base < o.base;
}

std::string path_source(const Quiver& q, const Path& p) {
  return p.trivial() ? p.base : q.arrow(p.steps.front()).from;
}

std::string path_target(const Quiver& q, const Path& p) {
  return p.trivial() ? p.base : q.arrow(p.steps.back()).to;
}

bool path_valid(const Quiver& q, const Path& p) {
  if (p.trivial()) return q.has_vertex(p.base);
  for (const auto& s : p.steps) {
    if (!q.has_arrow(s)) return false;
  }
  for (size_t i = 0; i + 1 < p.steps.size(); ++i) {
    if (q.arrow(p.steps[i]).to != q.arrow(p.steps[i + 1]).from) return false;
  }
  return true;
}

std::string path_str(const Path& p) {
  if (p.trivial()) return "e(" + p.base + ")";
  std::string s;
  for (size_t i = 0; i < p.steps.size(); ++i) {
    if (i) s += ",";
    s += p.steps[i];
  }
  return s;
}

// --- walks -----------------------------------------------------------------

bool Walk::operator<(const Walk& o) const {
  if (steps.size() != o.steps.size()) return steps.size() < o.steps.size();
  if (steps != o.steps) return steps < o.steps;
  return base < o.base;
}

static std::string step_start(const Quiver& q, const WalkStep& s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.forward ? a.from : a.to;
}

static std::string step_end(const Quiver& q, const WalkStep& s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.forward ? a.to : a.from;
}

std::string walk_source(const Quiver&, const Walk& w) { return w.base; }

std::string walk_target(const Quiver& q, const Walk& w) {
  return w.trivial() ? w.base : step_end(q, w.steps.back());
}

bool walk_valid(const Quiver& q, const Walk& w) {
  if (!q.has_vertex(w.base)) return false;
  std::string at = w.base;
  for (const auto& s : w.steps) {
    if (!q.has_arrow(s.arrow)) return false;
    if (step_start(q, s) != at) return false;
    at = step_end(q, s);
  }
  return true;
}

Walk walk_inverse(const Quiver& q, const Walk& w) {
  Walk r;
  r.base = walk_target(q, w);
  for (size_t i = w.steps.size(); i-- > 0;) {
    r.steps.push_back({w.steps[i].arrow, !w.steps[i].forward});
  }
  return r;
}

Walk walk_concat(const Quiver& q, const Walk& first, const Walk& then) {
  if (walk_target(q, first) != then.base) {
    throw std::invalid_argument("walk_concat: endpoints do not match");
  }
  Walk r = first;
  r.steps.insert(r.steps.end(), then.steps.begin(), then.steps.end());
  return r;
}

Walk walk_reduce(const Quiver& q, const Walk& w) {
  Walk r;
  r.base = w.base;
  for (const auto& s : w.steps) {
    if (!r.steps.empty() && r.steps.back().arrow == s.arrow && r.steps.back().forward != s.forward) {
      r.steps.pop_back();
    } else {
      r.steps.push_back(s);
    }
  }
  (void)q;
  return r;
}

bool walk_reduced(const Walk& w) {
  for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
    if (w.steps[i].arrow == w.steps[i + 1].arrow && w.steps[i].forward != w.steps[i + 1].forward) return false;
  }
  return true;
}

Walk path_to_walk(const Path& p, const std::string& base) {
  Walk w;
  w.base = base;
  for (const auto& s : p.steps) w.steps.push_back({s, true});
  return w;
}

std::string walk_str(const Walk& w) {
  if (w.trivial()) return "[]";
  std::string s;
  for (size_t i = 0; i < w.steps.size(); ++i) {
    if (i) s += ",";
    if (!w.steps[i].forward) s += "-";
    s += w.steps[i].arrow;
  }
  return s;
}

Walk parse_walk(const Quiver& q, const std::string& s, const std::string& base) {
  Walk w;
  w.base = base;
  if (s.empty() || s == "[]") return w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("parse_walk: empty step in '" + s + "'");
    WalkStep step;
    step.forward = tok[0] != '-';
    step.arrow = step.forward ? tok : tok.substr(1);
    w.steps.push_back(step);
  }
  if (!walk_valid(q, w)) throw std::invalid_argument("parse_walk: invalid walk '" + s + "' from " + base);
  return w;
}

// --- morphisms ---------------------------------------------------------------

std::string QuiverMorphism::v(const std::string& x) const {
  auto it = vertex_map.find(x);
  if (it == vertex_map.end()) throw std::invalid_argument("morphism: vertex " + x + " unmapped");
  return it->second;
}

std::string QuiverMorphism::a(const std::string& x) const {
  auto it = arrow_map.find(x);
  if (it == arrow_map.end()) throw std::invalid_argument("morphism: arrow " + x + " unmapped");
  return it->second;
}

std::vector<std::string> morphism_defects(const QuiverMorphism& f) {
  std::vector<std::string> bad;
  for (const auto& v : f.source.vertices()) {
    auto it = f.vertex_map.find(v);
    if (it == f.vertex_map.end()) {
      bad.push_back("vertex " + v + " unmapped");
    } else if (!f.target.has_vertex(it->second)) {
      bad.push_back("vertex " + v + " maps outside target");
    }
  }
  for (const auto& a : f.source.arrows()) {
    auto it = f.arrow_map.find(a.id);
    if (it == f.arrow_map.end()) {
      bad.push_back("arrow " + a.id + " unmapped");
      continue;
    }
    if (!f.target.has_arrow(it->second)) {
      bad.push_back("arrow " + a.id + " maps outside target");
      continue;
    }
    const Arrow& img = f.target.arrow(it->second);
    auto fv = [&](const std::string& x) {
      auto v = f.vertex_map.find(x);
      return v == f.vertex_map.end() ? std::string() : v->second;
    };
    if (fv(a.from) != img.from || fv(a.to) != img.to) {
      bad.push_back("arrow " + a.id + " breaks incidence");
    }
  }
  return bad;
}

Path map_path(const QuiverMorphism& f, const Path& p) {
  Path r;
  if (p.trivial()) {
    r.base = f.v(p.base);
    return r;
  }
  for (const auto& s : p.steps) r.steps.push_back(f.a(s));
  return r;
}

Walk map_walk(const QuiverMorphism& f, const Walk& w) {
  Walk r;
  r.base = f.v(w.base);
  for (const auto& s : w.steps) r.steps.push_back({f.a(s.arrow), s.forward});
  return r;
}

QuiverMorphism identity_morphism(const Quiver& q) {
  QuiverMorphism f;
  f.source = q;
  f.target = q;
  for (const auto& v : q.vertices()) f.vertex_map[v] = v;
  for (const auto& a : q.arrows()) f.arrow_map[a.id] = a.id;
  return f;
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
  QuiverMorphism h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [x, y] : f.vertex_map) h.vertex_map[x] = g.v(y);
  for (const auto& [x, y] : f.arrow_map) h.arrow_map[x] = g.a(y);
  return h;
}

CoveringReport is_quiver_covering(const QuiverMorphism& f) {
  if (!morphism_defects(f).empty()) {
    throw std::invalid_argument("is_quiver_covering: malformed morphism");
  }
  CoveringReport rep;
  rep.ok = true;
  auto star_bijective = [&](const std::vector<std::string>& src_star, const std::vector<std::string>& dst_star) {
    if (src_star.size() != dst_star.size()) return false;
    std::set<std::string> images;
    for (const auto& a : src_star) images.insert(f.arrow_map.at(a));
    return images == std::set<std::string>(dst_star.begin(), dst_star.end());
  };
  for (const auto& x : f.source.vertices()) {
    const std::string fx = f.vertex_map.at(x);
    if (!star_bijective(f.source.out_arrows(x), f.target.out_arrows(fx))) {
      rep.ok = false;
      rep.violations.emplace_back(x, "out");
    }
    if (!star_bijective(f.source.in_arrows(x), f.target.in_arrows(fx))) {
      rep.ok = false;
      rep.violations.emplace_back(x, "in");
    }
  }
  std::set<std::string> vimg, aimg;
  for (const auto& [_, y] : f.vertex_map) vimg.insert(y);
  for (const auto& [_, y] : f.arrow_map) aimg.insert(y);
  rep.surjective_on_vertices = vimg.size() == f.target.vertices().size();
  rep.surjective_on_arrows = aimg.size() == f.target.arrows().size();
  return rep;
}

Path lift_path(const QuiverMorphism& f, const Path& p, const std::string& anchor, AnchorEnd end) {
  if (!f.source.has_vertex(anchor)) throw std::invalid_argument("lift_path: unknown anchor " + anchor);
  const std::string need = end == AnchorEnd::Start ? path_source(f.target, p) : path_target(f.target, p);
  if (f.v(anchor) != need) {
    throw std::invalid_argument("lift_path: anchor " + anchor + " does not lie over the required endpoint");
  }
  Path lift;
  lift.base = anchor;
  if (p.trivial()) return lift;
  auto pick = [&](const std::vector<std::string>& star, const std::string& image) -> const std::string& {
    for (const auto& a : star) {
      if (f.arrow_map.at(a) == image) return a;
    }
    throw std::invalid_argument("lift_path: no arrow over " + image + " in the star (not a covering?)");
  };
  if (end == AnchorEnd::Start) {
    std::string at = anchor;
    for (const auto& s : p.steps) {
      const std::string& a = pick(f.source.out_arrows(at), s);
      lift.steps.push_back(a);
      at = f.source.arrow(a).to;
    }
  } else {
    std::string at = anchor;
    std::vector<std::string> rev;
    for (size_t i = p.steps.size(); i-- > 0;) {
      const std::string& a = pick(f.source.in_arrows(at), p.steps[i]);
      rev.push_back(a);
      at = f.source.arrow(a).from;
    }
    lift.steps.assign(rev.rbegin(), rev.rend());
    lift.base = at;
  }
  return lift;
}

Walk lift_walk(const QuiverMorphism& f, const Walk& w, const std::string& anchor, AnchorEnd end) {
  if (!f.source.has_vertex(anchor)) throw std::invalid_argument("lift_walk: unknown anchor " + anchor);
  const std::string need = end == AnchorEnd::Start ? w.base : walk_target(f.target, w);
  if (f.v(anchor) != need) {
    throw std::invalid_argument("lift_walk: anchor " + anchor + " does not lie over the required endpoint");
  }
  auto pick = [&](const std::vector<std::string>& star, const std::string& image) -> const std::string& {
    for (const auto& a : star) {
      if (f.arrow_map.at(a) == image) return a;
    }
    throw std::invalid_argument("lift_walk: no arrow over " + image + " in the star (not a covering?)");
  };
  Walk lift;
  if (end == AnchorEnd::Start) {
    lift.base = anchor;
    std::string at = anchor;
    for (const auto& s : w.steps) {
      const auto& star = s.forward ? f.source.out_arrows(at) : f.source.in_arrows(at);
      const std::string& a = pick(star, s.arrow);
      lift.steps.push_back({a, s.forward});
      const Arrow& arr = f.source.arrow(a);
      at = s.forward ? arr.to : arr.from;
    }
  } else {
    std::string at = anchor;
    std::vector<WalkStep> rev;
    for (size_t i = w.steps.size(); i-- > 0;) {
      const WalkStep& s = w.steps[i];
      const auto& star = s.forward ? f.source.in_arrows(at) : f.source.out_arrows(at);
      const std::string& a = pick(star, s.arrow);
      rev.push_back({a, s.forward});
      const Arrow& arr = f.source.arrow(a);
      at = s.forward ? arr.from : arr.to;
    }
    lift.steps.assign(rev.rbegin(), rev.rend());
    lift.base = at;
  }
  return lift;
}

// --- spanning tree -----------------------------------------------------------

Walk SpanningTree::walk_from_root(const Quiver& q, const std::string& v) const {
  std::vector<WalkStep> rev;
  std::string at = v;
  while (at != root) {
    auto it = parent.find(at);
    if (it == parent.end()) throw std::invalid_argument("spanning tree: vertex " + v + " not in tree");
    const Arrow& a = q.arrow(it->second);
    const bool forward_into = a.to == at;  // arrow traversed toward `at`
    rev.push_back({a.id, forward_into});
    at = forward_into ? a.from : a.to;
  }
  Walk w;
  w.base = root;
  w.steps.assign(rev.rbegin(), rev.rend());
  return w;
}

SpanningTree spanning_tree(const Quiver& q, const std::string& base) {
  if (!q.has_vertex(base)) throw std::invalid_argument("spanning_tree: unknown base " + base);
  SpanningTree t;
  t.root = base;
  std::set<std::string> seen{base};
  std::deque<std::string> queue{base};
  std::set<std::string> used;
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    // Merge out- and in-stars in lexicographic arrow order.
    std::vector<std::string> star = q.out_arrows(v);
    const auto& ins = q.in_arrows(v);
    star.insert(star.end(), ins.begin(), ins.end());
    std::sort(star.begin(), star.end());
    star.erase(std::unique(star.begin(), star.end()), star.end());
    for (const auto& aid : star) {
      const Arrow& a = q.arrow(aid);
      const std::string other = a.from == v ? a.to : a.from;
      if (seen.count(other)) continue;
      seen.insert(other);
      used.insert(aid);
      t.tree_arrows.insert(aid);
      t.parent[other] = aid;
      queue.push_back(other);
    }
  }
  if (seen.size() != q.vertices().size()) {
    throw std::invalid_argument("spanning_tree: quiver is disconnected");
  }
  for (const auto& a : q.arrows()) {
    if (!t.tree_arrows.count(a.id)) t.non_tree_arrows.push_back(a.id);
  }
  return t;
}

// --- enumeration -------------------------------------------------------------

std::vector<Path> enumerate_paths_from(const Quiver& q, const std::string& from, int max_len) {
  std::vector<Path> out;
  Path trivial;
  trivial.base = from;
  out.push_back(trivial);
  std::vector<Path> layer{trivial};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      const std::string at = path_target(q, p);
      for (const auto& a : q.out_arrows(at)) {
        Path np = p;
        np.steps.push_back(a);
        next.push_back(np);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, const std::string& from, const std::string& to, int max_len) {
  std::vector<Path> out;
  for (auto& p : enumerate_paths_from(q, from, max_len)) {
    if (path_target(q, p) == to) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Walk> enumerate_walks_from(const Quiver& q, const std::string& from, int max_len) {
  std::vector<Walk> out;
  Walk trivial;
  trivial.base = from;
  out.push_back(trivial);
  std::vector<Walk> layer{trivial};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Walk> next;
    for (const auto& w : layer) {
      const std::string at = walk_target(q, w);
      for (const auto& a : q.out_arrows(at)) {
        Walk nw = w;
        nw.steps.push_back({a, true});
        next.push_back(nw);
      }
      for (const auto& a : q.in_arrows(at)) {
        Walk nw = w;
        nw.steps.push_back({a, false});
        next.push_back(nw);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

std::string quiver_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& v : q.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows()) {
    os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << a.id << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qcov
