#include "qcov/rep_type.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qcov {

std::string to_string(RepType t) {
  switch (t) {
    case RepType::Finite: return "finite";
    case RepType::Tame: return "tame";
    case RepType::WildCertified: return "wild_certified";
    case RepType::InfiniteType: return "infinite_type";
    case RepType::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Undirected multigraph view: degree counts loops twice.
struct UGraph {
  std::map<std::string, int> degree;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;  // v -> (other, arrow)
  int loops = 0;
  int edges = 0;
};

UGraph undirected_view(const Quiver& q) {
  UGraph g;
  for (const auto& v : q.vertices()) g.degree[v] = 0;
  for (const auto& a : q.arrows()) {
    ++g.edges;
    if (a.from == a.to) {
      g.degree[a.from] += 2;
      ++g.loops;
      g.adj[a.from].push_back({a.to, a.id});
    } else {
      g.degree[a.from] += 1;
      g.degree[a.to] += 1;
      g.adj[a.from].push_back({a.to, a.id});
      g.adj[a.to].push_back({a.from, a.id});
    }
  }
  return g;
}

// Any undirected cycle: a loop, a parallel pair, or a proper cycle found by
// DFS. Returns (vertices, arrows).
std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> find_cycle(const Quiver& q) {
  for (const auto& a : q.arrows()) {
    if (a.from == a.to) return std::make_pair(std::vector<std::string>{a.from}, std::vector<std::string>{a.id});
  }
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> between;
  for (const auto& a : q.arrows()) {
    auto key = a.from < a.to ? std::make_pair(a.from, a.to) : std::make_pair(a.to, a.from);
    between[key].push_back(a.id);
    if (between[key].size() == 2) {
      return std::make_pair(std::vector<std::string>{key.first, key.second}, between[key]);
    }
  }
  // Simple undirected cycle by DFS with parent edges.
  UGraph g = undirected_view(q);
  std::map<std::string, std::pair<std::string, std::string>> parent;  // v -> (prev vertex, arrow)
  std::set<std::string> seen;
  for (const auto& root : q.vertices()) {
    if (seen.count(root)) continue;
    std::vector<std::string> stack{root};
    seen.insert(root);
    std::map<std::string, std::string> via;  // arrow used to enter vertex
    while (!stack.empty()) {
      std::string v = stack.back();
      stack.pop_back();
      for (const auto& [w, aid] : g.adj[v]) {
        if (aid == via[v]) continue;  // do not reuse the entering edge
        if (!seen.count(w)) {
          seen.insert(w);
          parent[w] = {v, aid};
          via[w] = aid;
          stack.push_back(w);
        } else {
          // Cycle: w .. v via parents, closed by aid.
          std::vector<std::string> pv{v};
          std::vector<std::string> pa{aid};
          std::string cur = v;
          while (cur != w) {
            auto [pvx, pax] = parent.at(cur);
            pa.push_back(pax);
            cur = pvx;
            pv.push_back(cur);
          }
          return std::make_pair(pv, pa);
        }
      }
    }
  }
  return std::nullopt;
}

// Arms of a tree around a branch vertex: lengths of the simple paths from
// the branch to the leaves, one per incident edge.
std::vector<std::vector<std::string>> tree_arms(const Quiver& q, const std::string& center) {
  UGraph g = undirected_view(q);
  std::vector<std::vector<std::string>> arms;
  for (const auto& [first, aid] : g.adj[center]) {
    (void)aid;
    std::vector<std::string> arm{first};
    std::string prev = center, cur = first;
    while (true) {
      std::string next;
      for (const auto& [w, _] : g.adj[cur]) {
        if (w != prev) { next = w; break; }
      }
      if (next.empty() || g.degree[cur] != 2) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return arms;
}

}  // namespace

TypeVerdict classify_path_algebra(const Quiver& q) {
  if (!q.is_connected()) throw std::invalid_argument("classify_path_algebra: quiver must be connected");
  TypeVerdict out;
  const int V = static_cast<int>(q.vertices().size());
  const int E = static_cast<int>(q.arrows().size());
  UGraph g = undirected_view(q);

  auto wild_with_cycle = [&]() {
    auto cyc = find_cycle(q);
    out.verdict = RepType::WildCertified;
    if (cyc) {
      const int n = static_cast<int>(cyc->first.size());
      out.certificate = "properly contains Euclidean A~" + std::to_string(n == 1 ? 0 : n - 1) +
                        " (cycle)";
      for (size_t i = 0; i < cyc->first.size(); ++i) out.embedding_vertices["v" + std::to_string(i)] = cyc->first[i];
      for (size_t i = 0; i < cyc->second.size(); ++i) out.embedding_arrows["e" + std::to_string(i)] = cyc->second[i];
    } else {
      out.certificate = "edge count exceeds vertex count";
    }
    return out;
  };

  if (E >= V + 1) return wild_with_cycle();

  if (E == V) {
    // One cycle; the graph is the cycle itself iff every degree is 2.
    bool pure = true;
    for (const auto& [v, d] : g.degree) {
      if (d != 2) pure = false;
    }
    if (pure) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean A~" + std::to_string(V == 1 && g.loops == 1 ? 0 : V - 1);
      return out;
    }
    return wild_with_cycle();
  }

  // Tree: E == V - 1.
  std::vector<std::string> branch3, branch_big;
  int maxdeg = 0;
  for (const auto& [v, d] : g.degree) {
    maxdeg = std::max(maxdeg, d);
    if (d == 3) branch3.push_back(v);
    if (d >= 4) branch_big.push_back(v);
  }
  if (maxdeg <= 2) {
    out.verdict = RepType::Finite;
    out.certificate = "Dynkin A" + std::to_string(V);
    return out;
  }
  if (!branch_big.empty()) {
    const std::string c = branch_big.front();
    if (V == 5 && g.degree[c] == 4) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean D~4";
      return out;
    }
    out.verdict = RepType::WildCertified;
    out.certificate = "properly contains Euclidean D~4 (star at " + c + ")";
    out.embedding_vertices["center"] = c;
    int i = 0;
    for (const auto& [w, aid] : g.adj[c]) {
      if (i >= 4) break;
      out.embedding_vertices["leaf" + std::to_string(i)] = w;
      out.embedding_arrows["e" + std::to_string(i)] = aid;
      ++i;
    }
    return out;
  }
  if (branch3.size() == 1) {
    const std::string c = branch3.front();
    auto arms = tree_arms(q, c);
    const size_t a = arms[0].size(), b = arms[1].size(), cl = arms[2].size();
    auto fill_embedding = [&](size_t na, size_t nb, size_t nc) {
      out.embedding_vertices["center"] = c;
      for (size_t i = 0; i < na; ++i) out.embedding_vertices["a" + std::to_string(i)] = arms[0][i];
      for (size_t i = 0; i < nb; ++i) out.embedding_vertices["b" + std::to_string(i)] = arms[1][i];
      for (size_t i = 0; i < nc; ++i) out.embedding_vertices["c" + std::to_string(i)] = arms[2][i];
    };
    if (a == 1 && b == 1) {
      out.verdict = RepType::Finite;
      out.certificate = "Dynkin D" + std::to_string(V);
      return out;
    }
    if (a == 1 && b == 2 && cl <= 4) {
      out.verdict = RepType::Finite;
      out.certificate = "Dynkin E" + std::to_string(4 + cl);
      return out;
    }
    if (a == 2 && b == 2 && cl == 2) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean E~6";
      return out;
    }
    if (a == 1 && b == 3 && cl == 3) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean E~7";
      return out;
    }
    if (a == 1 && b == 2 && cl == 5) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean E~8";
      return out;
    }
    out.verdict = RepType::WildCertified;
    if (a >= 2) {
      out.certificate = "properly contains Euclidean E~6 (arms 2,2,2 at " + c + ")";
      fill_embedding(2, 2, 2);
    } else if (b >= 3) {
      out.certificate = "properly contains Euclidean E~7 (arms 1,3,3 at " + c + ")";
      fill_embedding(1, 3, 3);
    } else {
      out.certificate = "properly contains Euclidean E~8 (arms 1,2,5 at " + c + ")";
      fill_embedding(1, 2, 5);
    }
    return out;
  }
  // Two or more degree-3 vertices.
  // D~n exactly when there are two branch vertices whose four off-path arms
  // are single leaves and the whole tree is that double fork.
  if (branch3.size() == 2) {
    auto arms0 = tree_arms(q, branch3[0]);
    auto arms1 = tree_arms(q, branch3[1]);
    const bool fork0 = arms0[0].size() == 1 && arms0[1].size() == 1;
    const bool fork1 = arms1[0].size() == 1 && arms1[1].size() == 1;
    if (fork0 && fork1) {
      out.verdict = RepType::Tame;
      out.certificate = "Euclidean D~" + std::to_string(V - 1);
      return out;
    }
  }
  out.verdict = RepType::WildCertified;
  out.certificate = "properly contains Euclidean D~ (double fork between " + branch3[0] + " and " + branch3[1] + ")";
  out.embedding_vertices["fork0"] = branch3[0];
  out.embedding_vertices["fork1"] = branch3[1];
  return out;
}

// --- wild patterns -------------------------------------------------------------

const std::vector<Quiver>& wild_patterns() {
  static const std::vector<Quiver> patterns = [] {
    std::vector<Quiver> p;
    p.push_back(Quiver({"1", "2"}, {{"al", "1", "1"}, {"be", "1", "1"}, {"ga", "1", "2"}}));
    p.push_back(Quiver({"1", "2"}, {{"al", "1", "1"}, {"b1", "1", "2"}, {"b2", "1", "2"}}));
    p.push_back(Quiver({"1", "2", "3"}, {{"b1", "1", "2"}, {"b2", "1", "2"}, {"al", "3", "2"}}));
    p.push_back(Quiver({"1", "2", "3"},
                       {{"al", "1", "1"}, {"et", "2", "2"}, {"be", "1", "2"}, {"ga", "2", "1"}, {"rh", "3", "1"}}));
    p.push_back(Quiver({"1", "2", "3"},
                       {{"al", "1", "1"}, {"be", "1", "2"}, {"ga", "2", "1"}, {"de", "2", "3"}, {"rh", "1", "3"}}));
    p.push_back(Quiver({"1", "2", "3"},
                       {{"al", "1", "1"}, {"rh", "2", "2"}, {"be", "1", "2"}, {"ga", "3", "1"}, {"de", "3", "2"}}));
    return p;
  }();
  return patterns;
}

Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.id, a.to, a.from});
  return Quiver(q.vertices(), arrows);
}

bool validate_embedding(const Quiver& pattern, const Quiver& host,
                        const std::map<std::string, std::string>& vmap,
                        const std::map<std::string, std::string>& amap) {
  std::set<std::string> vused, aused;
  for (const auto& v : pattern.vertices()) {
    auto it = vmap.find(v);
    if (it == vmap.end() || !host.has_vertex(it->second) || !vused.insert(it->second).second) return false;
  }
  for (const auto& a : pattern.arrows()) {
    auto it = amap.find(a.id);
    if (it == amap.end() || !host.has_arrow(it->second) || !aused.insert(it->second).second) return false;
    const Arrow& img = host.arrow(it->second);
    if (img.from != vmap.at(a.from) || img.to != vmap.at(a.to)) return false;
  }
  return true;
}

namespace {

std::optional<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>>
find_subquiver_embedding(const Quiver& pattern, const Quiver& host) {
  const auto& pverts = pattern.vertices();
  std::map<std::string, std::string> vmap, amap;
  std::set<std::string> vused, aused;

  std::function<bool(size_t)> arrows_rec;
  const auto& parrows = pattern.arrows();
  arrows_rec = [&](size_t j) -> bool {
    if (j == parrows.size()) return true;
    const Arrow& pa = parrows[j];
    const std::string hf = vmap.at(pa.from), ht = vmap.at(pa.to);
    for (const auto& cand : host.out_arrows(hf)) {
      if (host.arrow(cand).to != ht || aused.count(cand)) continue;
      amap[pa.id] = cand;
      aused.insert(cand);
      if (arrows_rec(j + 1)) return true;
      aused.erase(cand);
      amap.erase(pa.id);
    }
    return false;
  };

  std::function<bool(size_t)> verts_rec = [&](size_t i) -> bool {
    if (i == pverts.size()) return arrows_rec(0);
    for (const auto& hv : host.vertices()) {
      if (vused.count(hv)) continue;
      vmap[pverts[i]] = hv;
      vused.insert(hv);
      if (verts_rec(i + 1)) return true;
      vused.erase(hv);
      vmap.erase(pverts[i]);
    }
    return false;
  };
  if (verts_rec(0)) return std::make_pair(vmap, amap);
  return std::nullopt;
}

}  // namespace

TypeVerdict detect_wild_patterns(const Quiver& q) {
  TypeVerdict out;
  const auto& patterns = wild_patterns();
  for (size_t i = 0; i < patterns.size(); ++i) {
    for (int dual = 0; dual < 2; ++dual) {
      const Quiver pat = dual ? opposite_quiver(patterns[i]) : patterns[i];
      auto emb = find_subquiver_embedding(pat, q);
      if (emb) {
        out.verdict = RepType::WildCertified;
        out.certificate = std::string("contains wild pattern ") + std::to_string(i + 1) +
                          (dual ? " (dual)" : "");
        out.embedding_vertices = emb->first;
        out.embedding_arrows = emb->second;
        return out;
      }
    }
  }
  out.verdict = RepType::Inconclusive;
  out.certificate = "none of the six patterns embeds";
  return out;
}

TypeVerdict two_in_two_out_criterion(const Quiver& q) {
  TypeVerdict out;
  if (q.vertices().empty()) {
    out.verdict = RepType::Inconclusive;
    out.certificate = "empty quiver";
    return out;
  }
  for (const auto& v : q.vertices()) {
    if (q.out_arrows(v).size() < 2 || q.in_arrows(v).size() < 2) {
      out.verdict = RepType::Inconclusive;
      out.certificate = "vertex " + v + " has fewer than two arrows in or out";
      return out;
    }
  }
  out.verdict = RepType::InfiniteType;
  out.certificate =
      "every vertex has >= 2 arrows in and out; the rad^2 universal cover contains "
      "infinite alternating source/sink lines, so the algebra is not locally "
      "representation-finite";
  return out;
}

IdealPresentation rad_square_ideal(const Quiver& q) {
  std::vector<Relation> gens;
  for (const auto& v : q.vertices()) {
    for (const auto& p : enumerate_paths_from(q, v, 2)) {
      if (p.length() != 2) continue;
      Relation r;
      r.terms.push_back({Rational(1), p});
      gens.push_back(r);
    }
  }
  return IdealPresentation::make(q, gens, 2, 2);
}

std::optional<TreeCertificate> e7tt_tree_certificate(const Quiver& q, int radius,
                                                     const IdealPresentation* ideal) {
  IdealPresentation id = ideal ? *ideal : rad_square_ideal(q);
  IdealMembership mem(id);
  const std::string base = q.vertices().front();
  TruncatedCover cov = build_universal_cover(q, id, base, radius);
  const Quiver& t = cov.cover;

  // Undirected adjacency of the cover.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;
  for (const auto& a : t.arrows()) {
    adj[a.from].push_back({a.to, a.id});
    adj[a.to].push_back({a.from, a.id});
  }
  for (auto& [_, nb] : adj) std::sort(nb.begin(), nb.end());

  // Directed-composability check: every directed path inside the chosen
  // subtree must avoid the ideal (projected to the base).
  auto edges_ok = [&](const std::vector<std::string>& verts, const std::set<std::string>& arrows) {
    // Enumerate directed paths within the subtree up to its edge count.
    for (const auto& start : verts) {
      std::function<bool(const std::string&, std::vector<std::string>&)> walk =
          [&](const std::string& at, std::vector<std::string>& acc) -> bool {
        if (acc.size() >= 2) {
          Path p;
          for (const auto& aid : acc) p.steps.push_back(cov.projection.arrow_map.at(aid));
          if (mem.contains_path(p)) return false;
        }
        if (acc.size() >= arrows.size()) return true;
        for (const auto& aid : t.out_arrows(at)) {
          if (!arrows.count(aid)) continue;
          acc.push_back(aid);
          bool ok = walk(t.arrow(aid).to, acc);
          acc.pop_back();
          if (!ok) return false;
        }
        return true;
      };
      std::vector<std::string> acc;
      for (const auto& aid : t.out_arrows(start)) {
        if (!arrows.count(aid)) continue;
        acc.push_back(aid);
        if (!walk(t.arrow(aid).to, acc)) return false;
        acc.pop_back();
      }
    }
    return true;
  };

  // Adding an edge must not create a directed length-2 path (inside the
  // subtree) that lies in the ideal; pairs are checked at their shared
  // vertex as the subtree grows.
  std::set<std::string> chosen;
  auto composable_ok = [&](const std::string& aid) {
    const Arrow& na = t.arrow(aid);
    for (const auto& other : chosen) {
      const Arrow& oa = t.arrow(other);
      auto check = [&](const std::string& first, const std::string& second) {
        Path p;
        p.steps = {cov.projection.arrow_map.at(first), cov.projection.arrow_map.at(second)};
        return !mem.contains_path(p);
      };
      if (na.to == oa.from && !check(aid, other)) return false;
      if (oa.to == na.from && !check(other, aid)) return false;
    }
    return true;
  };

  // Grow a simple path from `from` of the given length, backtracking over
  // both the route and the constraint; `next` continues the outer search.
  std::function<bool(const std::string&, int, std::set<std::string>&, std::vector<std::string>&,
                     const std::function<bool()>&)>
      grow = [&](const std::string& from, int len, std::set<std::string>& used,
                 std::vector<std::string>& acc_v, const std::function<bool()>& next) -> bool {
    if (len == 0) return next();
    for (const auto& [w, aid] : adj[from]) {
      if (used.count(w) || chosen.count(aid) || !composable_ok(aid)) continue;
      used.insert(w);
      acc_v.push_back(w);
      chosen.insert(aid);
      if (grow(w, len - 1, used, acc_v, next)) return true;
      chosen.erase(aid);
      acc_v.pop_back();
      used.erase(w);
    }
    return false;
  };

  // Anchor the T(2,4,5) branch vertex (chain position 4, arms 3 & 4 plus a
  // pendant leaf). Try neighbor triples in order.
  std::optional<TreeCertificate> found;
  for (const auto& center : t.vertices()) {
    auto& nb = adj[center];
    if (nb.size() < 3) continue;
    for (size_t il = 0; il < nb.size() && !found; ++il) {
      for (size_t ir = 0; ir < nb.size() && !found; ++ir) {
        for (size_t ib = 0; ib < nb.size() && !found; ++ib) {
          if (il == ir || il == ib || ir == ib) continue;
          std::set<std::string> used{center, nb[il].first, nb[ir].first, nb[ib].first};
          if (used.size() != 4) continue;
          chosen.clear();
          bool seed_ok = true;
          for (const auto& aid : {nb[il].second, nb[ir].second, nb[ib].second}) {
            if (chosen.count(aid) || !composable_ok(aid)) { seed_ok = false; break; }
            chosen.insert(aid);
          }
          if (!seed_ok || chosen.size() != 3) continue;
          std::vector<std::string> left{nb[il].first}, right{nb[ir].first};
          auto finish = [&]() -> bool {
            std::vector<std::string> chain(left.rbegin(), left.rend());
            chain.push_back(center);
            chain.insert(chain.end(), right.begin(), right.end());
            std::vector<std::string> all = chain;
            all.push_back(nb[ib].first);
            if (!edges_ok(all, chosen)) return false;
            TreeCertificate cert;
            cert.chain = chain;
            cert.branch = nb[ib].first;
            // Displayed orientation: every subtree vertex is a source or sink.
            bool alternating = true;
            for (const auto& v : all) {
              int ins = 0, outs = 0;
              for (const auto& aid : t.out_arrows(v)) {
                if (chosen.count(aid)) ++outs;
              }
              for (const auto& aid : t.in_arrows(v)) {
                if (chosen.count(aid)) ++ins;
              }
              if (ins > 0 && outs > 0) alternating = false;
            }
            cert.displayed_orientation = alternating;
            found = cert;
            return true;
          };
          auto grow_right = [&]() -> bool { return grow(right.front(), 3, used, right, finish); };
          grow(left.front(), 2, used, left, grow_right);
        }
      }
    }
    if (found) break;
  }
  return found;
}

}  // namespace qcov
