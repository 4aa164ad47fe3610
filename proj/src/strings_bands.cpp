#include "qcov/strings_bands.hpp"

#include <algorithm>
#include <set>

namespace qcov {

StringAlgebraReport is_string_presentation(const IdealPresentation& ideal) {
  const Quiver& q = ideal.ambient;
  StringAlgebraReport rep;
  for (const auto& g : ideal.generators) {
    if (g.size() != 1) {
      rep.witness = "generator " + relation_str(g) + " is not monomial";
      return rep;
    }
  }
  for (const auto& v : q.vertices()) {
    if (q.out_arrows(v).size() > 2) {
      rep.witness = "more than two arrows start at " + v;
      return rep;
    }
    if (q.in_arrows(v).size() > 2) {
      rep.witness = "more than two arrows end at " + v;
      return rep;
    }
  }
  IdealMembership mem(ideal);
  for (const auto& a : q.arrows()) {
    int left_free = 0, right_free = 0;  // compositions b*a and a*c
    for (const auto& b : q.out_arrows(a.to)) {
      Path p;
      p.steps = {a.id, b};
      if (!mem.contains_path(p)) ++left_free;
    }
    for (const auto& c : q.in_arrows(a.from)) {
      Path p;
      p.steps = {c, a.id};
      if (!mem.contains_path(p)) ++right_free;
    }
    if (left_free > 1) {
      rep.witness = "arrow " + a.id + " has two relation-free left compositions";
      return rep;
    }
    if (right_free > 1) {
      rep.witness = "arrow " + a.id + " has two relation-free right compositions";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

namespace {

// Every contiguous directed run of the walk, in both orientations, must
// avoid the ideal. Runs of inverse steps reversed are forward paths.
bool runs_avoid_ideal(const IdealMembership& mem, const Quiver& q, const Walk& w) {
  const int L = mem.ideal().truncation_length;
  size_t i = 0;
  while (i < w.steps.size()) {
    size_t j = i;
    while (j < w.steps.size() && w.steps[j].forward == w.steps[i].forward) ++j;
    // Run [i, j): check every contiguous subpath.
    std::vector<std::string> arrows;
    for (size_t k = i; k < j; ++k) arrows.push_back(w.steps[k].arrow);
    if (!w.steps[i].forward) std::reverse(arrows.begin(), arrows.end());
    for (size_t s = 0; s < arrows.size(); ++s) {
      for (size_t e = s; e < arrows.size(); ++e) {
        if (static_cast<int>(e - s) + 1 > L) break;
        Path p;
        p.steps.assign(arrows.begin() + static_cast<long>(s), arrows.begin() + static_cast<long>(e) + 1);
        if (mem.contains_path(p)) return false;
      }
    }
    i = j;
  }
  (void)q;
  return true;
}

Walk least_of_walk_pair(const Quiver& q, const Walk& w) {
  Walk inv = walk_inverse(q, w);
  return inv < w ? inv : w;
}

Walk rotate_closed(const Quiver& q, const Walk& w, size_t r) {
  Walk out;
  out.steps.insert(out.steps.end(), w.steps.begin() + static_cast<long>(r), w.steps.end());
  out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.begin() + static_cast<long>(r));
  const WalkStep& first = out.steps.front();
  const Arrow& a = q.arrow(first.arrow);
  out.base = first.forward ? a.from : a.to;
  return out;
}

bool cyclically_reduced(const Walk& w) {
  if (!walk_reduced(w)) return false;
  if (w.steps.size() >= 2) {
    const auto& f = w.steps.front();
    const auto& b = w.steps.back();
    if (f.arrow == b.arrow && f.forward != b.forward) return false;
  }
  return true;
}

// Smallest period of the cyclic step sequence; the walk is primitive iff the
// period equals its length.
size_t cyclic_period(const Walk& w) {
  const size_t n = w.steps.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = 0; i + p < n && ok; ++i) {
      ok = w.steps[i] == w.steps[i + p];
    }
    if (ok) return p;
  }
  return n;
}

Walk repeat_walk(const Quiver& q, const Walk& w, int times) {
  Walk out = w;
  for (int t = 1; t < times; ++t) out = walk_concat(q, out, w);
  return out;
}

}  // namespace

bool is_valid_string(const IdealMembership& mem, const Walk& w) {
  if (!walk_reduced(w)) return false;
  return runs_avoid_ideal(mem, mem.ideal().ambient, w);
}

std::optional<StringWord> make_string(const IdealPresentation& ideal, const Walk& w) {
  IdealMembership mem(ideal);
  if (!walk_valid(ideal.ambient, w) || !is_valid_string(mem, w)) return std::nullopt;
  StringWord s;
  s.walk = least_of_walk_pair(ideal.ambient, w);
  s.canonical = walk_str(s.walk) + (w.trivial() ? "@" + w.base : "");
  return s;
}

std::vector<StringWord> enumerate_strings(const IdealPresentation& ideal, int max_len) {
  const Quiver& q = ideal.ambient;
  IdealMembership mem(ideal);
  std::set<std::string> seen;
  std::vector<StringWord> out;
  auto emit = [&](const Walk& w) {
    StringWord s;
    s.walk = least_of_walk_pair(q, w);
    s.canonical = walk_str(s.walk) + (w.trivial() ? "@" + w.base : "");
    if (seen.insert(s.canonical).second) out.push_back(s);
  };
  for (const auto& v : q.vertices()) {
    Walk trivial;
    trivial.base = v;
    emit(trivial);
  }
  // DFS over valid strings; validity is prefix-monotone.
  std::vector<Walk> layer;
  for (const auto& v : q.vertices()) {
    Walk w;
    w.base = v;
    layer.push_back(w);
  }
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Walk> next;
    for (const auto& w : layer) {
      const std::string at = walk_target(q, w);
      std::vector<WalkStep> steps;
      for (const auto& a : q.out_arrows(at)) steps.push_back({a, true});
      for (const auto& a : q.in_arrows(at)) steps.push_back({a, false});
      std::sort(steps.begin(), steps.end());
      for (const auto& st : steps) {
        Walk nw = w;
        nw.steps.push_back(st);
        if (!walk_reduced(nw)) continue;
        if (!runs_avoid_ideal(mem, q, nw)) continue;
        emit(nw);
        next.push_back(nw);
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BandWord> make_band(const IdealPresentation& ideal, const Walk& w) {
  const Quiver& q = ideal.ambient;
  if (!walk_valid(q, w) || w.trivial()) return std::nullopt;
  if (walk_target(q, w) != w.base) return std::nullopt;
  if (!cyclically_reduced(w)) return std::nullopt;
  if (cyclic_period(w) != w.steps.size()) return std::nullopt;  // proper power
  IdealMembership mem(ideal);
  // Every rotation must be a string, and powers must stay strings so that
  // relations cannot hide across the seam.
  const int maxrel = std::max(2, ideal.nilpotency_bound.value_or(ideal.max_generator_length()));
  const int reps = std::max(2, (maxrel + static_cast<int>(w.steps.size()) - 1) /
                                   static_cast<int>(w.steps.size()) + 1);
  for (size_t r = 0; r < w.steps.size(); ++r) {
    Walk rot = rotate_closed(q, w, r);
    if (!is_valid_string(mem, rot)) return std::nullopt;
    if (!is_valid_string(mem, repeat_walk(q, rot, reps))) return std::nullopt;
  }
  // Canonical form: least over rotations of the walk and its inverse.
  Walk best = rotate_closed(q, w, 0);
  const Walk inv = walk_inverse(q, w);
  for (size_t r = 0; r < w.steps.size(); ++r) {
    Walk cand = rotate_closed(q, w, r);
    if (cand < best) best = cand;
    Walk c2 = rotate_closed(q, inv, r);
    if (c2 < best) best = c2;
  }
  BandWord b;
  b.walk = best;
  b.canonical = walk_str(best);
  return b;
}

std::vector<BandWord> enumerate_bands(const IdealPresentation& ideal, int max_len) {
  const Quiver& q = ideal.ambient;
  IdealMembership mem(ideal);
  std::set<std::string> seen;
  std::vector<BandWord> out;
  // Closed strings up to max_len, canonicalized.
  std::vector<Walk> layer;
  for (const auto& v : q.vertices()) {
    Walk w;
    w.base = v;
    layer.push_back(w);
  }
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Walk> next;
    for (const auto& w : layer) {
      const std::string at = walk_target(q, w);
      std::vector<WalkStep> steps;
      for (const auto& a : q.out_arrows(at)) steps.push_back({a, true});
      for (const auto& a : q.in_arrows(at)) steps.push_back({a, false});
      std::sort(steps.begin(), steps.end());
      for (const auto& st : steps) {
        Walk nw = w;
        nw.steps.push_back(st);
        if (!walk_reduced(nw)) continue;
        if (!runs_avoid_ideal(mem, q, nw)) continue;
        if (walk_target(q, nw) == nw.base) {
          auto band = make_band(ideal, nw);
          if (band && seen.insert(band->canonical).second) out.push_back(*band);
        }
        next.push_back(nw);
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Visits of a walk: positions 0..len, with vertex of each position. For a
// closed (band) walk the last position is identified with the first.
struct Visits {
  std::vector<std::string> vertex;  // per position
};

Visits walk_visits(const Quiver& q, const Walk& w) {
  Visits v;
  v.vertex.push_back(w.base);
  std::string at = w.base;
  for (const auto& s : w.steps) {
    const Arrow& a = q.arrow(s.arrow);
    at = s.forward ? a.to : a.from;
    v.vertex.push_back(at);
  }
  return v;
}

}  // namespace

Representation string_module(const Quiver& q, const StringWord& s) {
  const Walk& w = s.walk;
  Visits vis = walk_visits(q, w);
  const size_t npos = vis.vertex.size();
  Representation m;
  std::vector<int> slot(npos);  // index of each position within its vertex block
  for (const auto& v : q.vertices()) m.dims[v] = 0;
  for (size_t p = 0; p < npos; ++p) slot[p] = m.dims[vis.vertex[p]]++;
  for (const auto& a : q.arrows()) m.mats[a.id] = Mat::Zero(m.dim_at(a.from), m.dim_at(a.to));
  for (size_t i = 0; i < w.steps.size(); ++i) {
    const WalkStep& st = w.steps[i];
    const size_t from_pos = st.forward ? i : i + 1;  // position at the arrow's source
    const size_t to_pos = st.forward ? i + 1 : i;    // position at the arrow's target
    // Contravariant: M_a maps the target slot to the source slot.
    m.mats[st.arrow](slot[from_pos], slot[to_pos]) = Rational(1);
  }
  return m;
}

Mat jordan_block(int n, const Rational& lambda) {
  Mat j = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i + 1, i) = Rational(1);
  }
  return j;
}

Representation band_module(const Quiver& q, const BandWord& b, int n, const Rational& lambda) {
  if (n <= 0) throw std::invalid_argument("band_module: n must be positive");
  if (lambda.is_zero()) throw std::invalid_argument("band_module: lambda must be nonzero");
  const Walk& w = b.walk;
  const size_t len = w.steps.size();
  Visits vis = walk_visits(q, w);
  Representation m;
  for (const auto& v : q.vertices()) m.dims[v] = 0;
  std::vector<int> slot(len);  // positions 0..len-1 (position len == position 0)
  for (size_t p = 0; p < len; ++p) {
    slot[p] = m.dims[vis.vertex[p]];
    m.dims[vis.vertex[p]] += n;
  }
  for (const auto& a : q.arrows()) m.mats[a.id] = Mat::Zero(m.dim_at(a.from), m.dim_at(a.to));

  // Lexicographically least forward step carries the Jordan block.
  int special = -1;
  for (size_t i = 0; i < len; ++i) {
    if (!w.steps[i].forward) continue;
    if (special < 0 || w.steps[i].arrow < w.steps[static_cast<size_t>(special)].arrow) {
      special = static_cast<int>(i);
    }
  }
  if (special < 0) special = 0;  // all-inverse bands: put it on the first step

  Mat jn = jordan_block(n, lambda);
  Mat id = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = Rational(1);

  for (size_t i = 0; i < len; ++i) {
    const WalkStep& st = w.steps[i];
    const size_t next = (i + 1) % len;
    const size_t from_pos = st.forward ? i : next;  // position at the arrow's source
    const size_t to_pos = st.forward ? next : i;
    const Mat& block = static_cast<int>(i) == special ? jn : id;
    Mat& target = m.mats[st.arrow];
    const int r0 = slot[from_pos], c0 = slot[to_pos];
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) target(r0 + r, c0 + c) = block(r, c);
    }
  }
  return m;
}

LineCheck check_line(const Quiver& q, const Line& line, int path_probe_len) {
  LineCheck lc;
  if (line.vertices.empty()) {
    lc.why = "empty line";
    return lc;
  }
  std::set<std::string> members(line.vertices.begin(), line.vertices.end());
  if (members.size() != line.vertices.size()) {
    lc.why = "repeated vertex";
    return lc;
  }
  // Full subquiver must be exactly the linear chain.
  std::vector<std::string> internal;
  for (const auto& a : q.arrows()) {
    if (members.count(a.from) && members.count(a.to)) internal.push_back(a.id);
  }
  if (internal.size() + 1 != line.vertices.size()) {
    lc.why = "full subquiver is not a chain (arrow count)";
    return lc;
  }
  std::map<std::string, int> pos;
  for (size_t i = 0; i < line.vertices.size(); ++i) pos[line.vertices[i]] = static_cast<int>(i);
  for (const auto& aid : internal) {
    const Arrow& a = q.arrow(aid);
    if (std::abs(pos.at(a.from) - pos.at(a.to)) != 1) {
      lc.why = "arrow " + aid + " skips along the line";
      return lc;
    }
  }
  // Convexity at the probe length: paths between members stay inside.
  for (const auto& x : line.vertices) {
    for (const auto& p : enumerate_paths_from(q, x, path_probe_len)) {
      if (!members.count(path_target(q, p))) continue;
      std::string at = x;
      for (const auto& st : p.steps) {
        at = q.arrow(st).to;
        if (!members.count(at)) {
          lc.why = "path " + path_str(p) + " leaves the line";
          return lc;
        }
      }
    }
  }
  lc.ok = true;
  return lc;
}

std::optional<Line> line_from_vertices(const Quiver& q, const std::vector<std::string>& vertices,
                                       int path_probe_len, std::string* why) {
  Line line;
  line.vertices = vertices;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    std::string joining;
    for (const auto& a : q.arrows()) {
      const bool joins = (a.from == vertices[i] && a.to == vertices[i + 1]) ||
                         (a.from == vertices[i + 1] && a.to == vertices[i]);
      if (joins) {
        if (!joining.empty()) {
          if (why) *why = "parallel arrows between consecutive line vertices";
          return std::nullopt;
        }
        joining = a.id;
      }
    }
    if (joining.empty()) {
      if (why) *why = "no arrow between consecutive line vertices";
      return std::nullopt;
    }
    line.arrows.push_back(joining);
  }
  LineCheck lc = check_line(q, line, path_probe_len);
  if (!lc.ok) {
    if (why) *why = lc.why;
    return std::nullopt;
  }
  return line;
}

Representation line_module(const Quiver& q, const Line& line) {
  Representation m;
  for (const auto& v : q.vertices()) m.dims[v] = 0;
  for (const auto& v : line.vertices) m.dims[v] = 1;
  for (const auto& a : q.arrows()) m.mats[a.id] = Mat::Zero(m.dim_at(a.from), m.dim_at(a.to));
  for (const auto& aid : line.arrows) {
    m.mats[aid] = Mat::Zero(1, 1);
    m.mats[aid](0, 0) = Rational(1);
  }
  return m;
}

namespace {

// An element stabilizes the line when it maps member vertices to member
// vertices by a consistent index shift wherever it is defined.
LineStabilizer stabilizer_from_maps(
    const Line& line,
    const std::vector<std::pair<std::string, std::map<std::string, std::string>>>& elements) {
  LineStabilizer st;
  std::map<std::string, int> pos;
  for (size_t i = 0; i < line.vertices.size(); ++i) pos[line.vertices[i]] = static_cast<int>(i);
  for (const auto& [word, vmap] : elements) {
    bool identity = true;
    for (const auto& [x, y] : vmap) {
      if (x != y) { identity = false; break; }
    }
    if (identity) continue;
    bool maps_in = true, consistent = true;
    std::optional<int> shift;
    for (const auto& [v, p] : pos) {
      auto it = vmap.find(v);
      if (it == vmap.end()) continue;
      auto jt = pos.find(it->second);
      if (jt == pos.end()) {
        maps_in = false;
        break;
      }
      const int d = jt->second - p;
      if (shift && *shift != d) consistent = false;
      shift = d;
    }
    if (!maps_in || !consistent || !shift || *shift == 0) continue;
    const int period = std::abs(*shift);
    if (st.trivial || period < st.period) {
      st.trivial = false;
      st.period = period;
      st.witness = word;
      st.shift_vertex_map = vmap;
    }
  }
  return st;
}

}  // namespace

LineStabilizer line_stabilizer(const Quiver& q, const Line& line, const ActionPresentation& action) {
  (void)q;
  Ball ball = enumerate_ball(action);
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> elements;
  for (const auto& e : ball.elements) elements.emplace_back(e.word, e.vmap);
  return stabilizer_from_maps(line, elements);
}

LineStabilizer line_stabilizer(const Quiver& q, const Line& line,
                               const std::vector<std::pair<std::string, DeckElement>>& ball) {
  (void)q;
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> elements;
  for (const auto& [word, g] : ball) elements.emplace_back(word, g.vertex_map);
  return stabilizer_from_maps(line, elements);
}

}  // namespace qcov
