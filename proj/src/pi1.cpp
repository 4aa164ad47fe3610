#include "qcov/pi1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qcov {

Word word_reduce(Word w) {
  Word r;
  for (int g : w) {
    if (!r.empty() && r.back() == -g) {
      r.pop_back();
    } else {
      r.push_back(g);
    }
  }
  return r;
}

Word word_inverse(const Word& w) {
  Word r;
  for (size_t i = w.size(); i-- > 0;) r.push_back(-w[i]);
  return r;
}

Word word_concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return word_reduce(std::move(a));
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    int g = w[i];
    s += names[static_cast<size_t>(std::abs(g)) - 1];
    if (g < 0) s += "^-1";
  }
  return s;
}

std::string to_string(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::Trivial: return "trivial";
    case GroupVerdict::Free: return "free";
    case GroupVerdict::InfiniteCyclic: return "infinite_cyclic";
    case GroupVerdict::Unresolved: return "unresolved";
  }
  return "?";
}

GroupPresentation graph_pi1(const Quiver& q, const std::string& base, SpanningTree* tree_out) {
  SpanningTree t = spanning_tree(q, base);
  GroupPresentation p;
  p.generators = t.non_tree_arrows;
  if (tree_out) *tree_out = t;
  return p;
}

Word word_of_walk(const SpanningTree& tree, const GroupPresentation& p, const Walk& w) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = static_cast<int>(i) + 1;
  Word out;
  for (const auto& s : w.steps) {
    if (tree.tree_arrows.count(s.arrow)) continue;
    auto it = index.find(s.arrow);
    if (it == index.end()) throw std::invalid_argument("word_of_walk: arrow " + s.arrow + " is not a generator");
    out.push_back(s.forward ? it->second : -it->second);
  }
  return word_reduce(std::move(out));
}

namespace {

Word cyclic_reduce(Word w) {
  w = word_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

// Canonical representative of a relator's conjugacy class up to rotation and
// inversion; used only for deduplication.
Word cyclic_canonical(const Word& w0) {
  Word w = cyclic_reduce(w0);
  if (w.empty()) return w;
  Word best;
  auto consider = [&](const Word& v) {
    for (size_t r = 0; r < v.size(); ++r) {
      Word rot(v.begin() + static_cast<long>(r), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(r));
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(w);
  consider(word_inverse(w));
  return best;
}

void dedupe_relators(std::vector<Word>& rels) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : rels) {
    Word red = cyclic_reduce(r);
    if (red.empty()) continue;
    if (seen.insert(cyclic_canonical(red)).second) out.push_back(red);
  }
  rels = std::move(out);
}

void substitute(Word& w, int gen, const Word& replacement) {
  Word out;
  for (int g : w) {
    if (g == gen) {
      out.insert(out.end(), replacement.begin(), replacement.end());
    } else if (g == -gen) {
      Word inv = word_inverse(replacement);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(g);
    }
  }
  w = word_reduce(std::move(out));
}

void shift_indices_above(Word& w, int gone) {
  for (int& g : w) {
    int a = std::abs(g);
    if (a > gone) g = g > 0 ? g - 1 : g + 1;
  }
}

}  // namespace

GroupPresentation pi1_presentation(const Quiver& q, const IdealPresentation& ideal,
                                   const std::string& base, SpanningTree* tree_out) {
  SpanningTree tree;
  GroupPresentation p = graph_pi1(q, base, &tree);
  if (tree_out) *tree_out = tree;
  IdealMembership mem(ideal);
  for (const auto& tg : mem.minimal_generators()) {
    if (tg.tag != RelationClass::Minimal) continue;
    const auto& terms = tg.relation.terms;
    std::vector<Word> words;
    for (const auto& t : terms) {
      words.push_back(word_of_walk(tree, p, path_to_walk(t.path, path_source(q, t.path))));
    }
    // One relator per ordered pair of paths; the tree conjugator collapses.
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = 0; j < words.size(); ++j) {
        if (i == j) continue;
        p.relators.push_back(word_concat(words[j], word_inverse(words[i])));
      }
    }
  }
  dedupe_relators(p.relators);
  return p;
}

std::vector<BigInt> abelian_invariants(const GroupPresentation& p) {
  const Eigen::Index g = static_cast<Eigen::Index>(p.generators.size());
  if (g == 0) return {};
  IntMat m = IntMat::Zero(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(p.relators.size())), g);
  for (size_t r = 0; r < p.relators.size(); ++r) {
    for (int gi : p.relators[r]) {
      m(static_cast<Eigen::Index>(r), std::abs(gi) - 1) += gi > 0 ? 1 : -1;
    }
  }
  auto diag = smith_normal_form(m);
  std::vector<BigInt> inv;
  int rank = 0;
  for (const auto& d : diag) {
    if (d > 1) inv.push_back(d);
    if (d != 0) ++rank;
  }
  std::sort(inv.begin(), inv.end());
  for (Eigen::Index i = rank; i < g; ++i) inv.push_back(0);
  return inv;
}

SimplifiedPresentation simplify(const GroupPresentation& p0) {
  SimplifiedPresentation out;
  std::vector<std::string> gens = p0.generators;
  std::vector<Word> rels = p0.relators;
  dedupe_relators(rels);
  std::vector<Word> subst;  // original index -> word over current gens
  for (size_t i = 0; i < p0.generators.size(); ++i) subst.push_back({static_cast<int>(i) + 1});

  bool progress = true;
  while (progress) {
    progress = false;
    // Eligible generator: occurs exactly once (counting both signs) in some
    // relator. Pick the lexicographically least name; for it, the shortest
    // relator (first by index on ties).
    int pick_gen = -1;
    size_t pick_rel = 0;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      const int g = static_cast<int>(gi) + 1;
      size_t best_rel = rels.size();
      for (size_t ri = 0; ri < rels.size(); ++ri) {
        int count = 0;
        for (int x : rels[ri]) {
          if (std::abs(x) == g) ++count;
        }
        if (count == 1 && (best_rel == rels.size() || rels[ri].size() < rels[best_rel].size())) {
          best_rel = ri;
        }
      }
      if (best_rel == rels.size()) continue;
      if (pick_gen < 0 || gens[gi] < gens[static_cast<size_t>(pick_gen) - 1]) {
        pick_gen = g;
        pick_rel = best_rel;
      }
    }
    if (pick_gen < 0) break;

    // r = A g^eps B  =>  g = (A^-1 B^-1)^eps-adjusted.
    const Word r = rels[pick_rel];
    size_t pos = 0;
    while (std::abs(r[pos]) != pick_gen) ++pos;
    Word a(r.begin(), r.begin() + static_cast<long>(pos));
    Word b(r.begin() + static_cast<long>(pos) + 1, r.end());
    Word w;  // replacement for pick_gen
    if (r[pos] > 0) {
      w = word_concat(word_inverse(a), word_inverse(b));
    } else {
      w = word_concat(b, a);
    }
    rels.erase(rels.begin() + static_cast<long>(pick_rel));
    for (auto& rel : rels) substitute(rel, pick_gen, w);
    for (auto& s : subst) substitute(s, pick_gen, w);
    for (auto& rel : rels) shift_indices_above(rel, pick_gen);
    for (auto& s : subst) shift_indices_above(s, pick_gen);
    gens.erase(gens.begin() + (pick_gen - 1));
    dedupe_relators(rels);
    progress = true;
  }

  out.presentation.generators = gens;
  out.presentation.relators = rels;
  out.original_to_final = subst;
  out.abelian_invariants = abelian_invariants(out.presentation);
  if (gens.empty()) {
    out.verdict = GroupVerdict::Trivial;
    out.free_rank = 0;
  } else if (rels.empty()) {
    out.free_rank = static_cast<int>(gens.size());
    out.verdict = out.free_rank == 1 ? GroupVerdict::InfiniteCyclic : GroupVerdict::Free;
  } else {
    out.verdict = GroupVerdict::Unresolved;
    // Klein bottle recognition: <u, v | u^2 v^-+2> up to rotation and
    // inversion (u^2 = v^2 is symmetric in the generators).
    if (gens.size() == 2 && rels.size() == 1 && rels[0].size() == 4) {
      for (int sign : {1, -1}) {
        Word pattern{1, 1, -2 * sign, -2 * sign};
        if (cyclic_canonical(rels[0]) == cyclic_canonical(pattern)) {
          out.klein = true;
          out.klein_v_sign = sign;
          break;
        }
      }
    }
  }
  return out;
}

SimplyConnectedReport simply_connected_criterion(const Quiver& q, const IdealPresentation& ideal) {
  SimplyConnectedReport rep;
  if (!ideal.nilpotency_bound) {
    rep.detail = "ideal presentation is not admissible (no nilpotency bound)";
    return rep;
  }
  if (q.has_oriented_cycle()) {
    rep.detail = "quiver has an oriented cycle";
    return rep;
  }
  if (q.vertices().empty()) {
    rep.detail = "empty quiver";
    return rep;
  }
  auto simp = simplify(pi1_presentation(q, ideal, q.vertices().front()));
  if (simp.verdict != GroupVerdict::Trivial) {
    rep.detail = "fundamental group verdict: " + to_string(simp.verdict);
    return rep;
  }
  for (const auto& a : q.arrows()) {
    auto paths = enumerate_paths(q, a.from, a.to, ideal.truncation_length);
    int nontrivial = 0;
    for (const auto& p : paths) {
      if (!p.trivial()) ++nontrivial;
    }
    if (nontrivial != 1) {
      rep.detail = "arrow " + a.id + " is not the unique path " + a.from + " -> " + a.to;
      return rep;
    }
  }
  rep.ok = true;
  rep.detail = "no oriented cycles, trivial fundamental group, arrows are unique paths";
  return rep;
}

WordSolver::WordSolver(const Quiver& q, const IdealPresentation& ideal, const std::string& base)
    : quiver_(q) {
  pres_ = pi1_presentation(q, ideal, base, &tree_);
  simp_ = simplify(pres_);
  exact_ = simp_.verdict != GroupVerdict::Unresolved || simp_.klein;
}

Word WordSolver::walk_word(const Walk& w) const { return word_of_walk(tree_, pres_, w); }

namespace {

// Normal form in the Klein bottle group Z x| Z with u = (0,1), v = (1,1):
// (m,n)(m',n') = (m + (-1)^n m', n + n'). Exact because the assignment is an
// isomorphism onto <x, y | x y x^-1 y>.
Word klein_normal_form(const Word& w, int v_sign) {
  long m = 0, n = 0;
  auto mul = [&](long m2, long n2) {
    m += (n % 2 == 0 ? m2 : -m2);
    n += n2;
  };
  for (int g : w) {
    const bool is_u = std::abs(g) == 1;
    int e = g > 0 ? 1 : -1;
    if (!is_u && v_sign < 0) e = -e;  // relator u^2 v^2: v plays as its inverse
    if (is_u) {
      mul(0, e);
    } else if (e > 0) {
      mul(1, 1);
    } else {
      mul(1, -1);
    }
  }
  return Word{static_cast<int>(m), static_cast<int>(n)};
}

}  // namespace

Word WordSolver::normal_form(const Walk& w) const {
  Word orig = walk_word(w);
  Word out;
  for (int g : orig) {
    const Word& s = simp_.original_to_final[static_cast<size_t>(std::abs(g)) - 1];
    Word piece = g > 0 ? s : word_inverse(s);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  Word reduced = word_reduce(std::move(out));
  if (simp_.klein) return klein_normal_form(reduced, simp_.klein_v_sign);
  return reduced;
}

std::string WordSolver::normal_form_str(const Walk& w) const {
  Word nf = normal_form(w);
  if (simp_.klein) {
    return "K(" + std::to_string(nf[0]) + "," + std::to_string(nf[1]) + ")";
  }
  return word_str(nf, simp_.presentation.generators);
}

}  // namespace qcov
