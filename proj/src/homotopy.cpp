#include "qcov/homotopy.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace qcov {

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Yes: return "yes";
    case Equivalence::No: return "no";
    case Equivalence::Undecided: return "undecided";
  }
  return "?";
}

HomotopyEngine::HomotopyEngine(const Quiver& q, const IdealPresentation& ideal, HomotopyCaps caps)
    : quiver_(q), ideal_(ideal), caps_(caps) {
  for (const auto& tg : IdealMembership(ideal_).minimal_generators()) {
    if (tg.tag == RelationClass::Minimal) minimal_.push_back(tg.relation);
  }
  if (!q.vertices().empty()) {
    solver_ = std::make_shared<WordSolver>(q, ideal_, q.vertices().front());
  }
}

int HomotopyEngine::derived_extra_length() const {
  if (caps_.extra_length >= 0) return caps_.extra_length;
  int longest = 0;
  for (const auto& r : minimal_) {
    for (const auto& t : r.terms) longest = std::max(longest, static_cast<int>(t.path.length()));
  }
  return 2 * longest + 2;
}

namespace {

std::string vertex_at(const Quiver& q, const Walk& w, size_t pos) {
  if (pos == 0) return w.base;
  const WalkStep& s = w.steps[pos - 1];
  const Arrow& a = q.arrow(s.arrow);
  return s.forward ? a.to : a.from;
}

bool forward_run_matches(const Walk& w, size_t pos, const Path& p) {
  if (pos + p.length() > w.steps.size()) return false;
  for (size_t i = 0; i < p.length(); ++i) {
    const WalkStep& s = w.steps[pos + i];
    if (!s.forward || s.arrow != p.steps[i]) return false;
  }
  return true;
}

bool inverse_run_matches(const Walk& w, size_t pos, const Path& p) {
  // p traversed backwards: steps reversed, all inverted.
  if (pos + p.length() > w.steps.size()) return false;
  const size_t n = p.length();
  for (size_t i = 0; i < n; ++i) {
    const WalkStep& s = w.steps[pos + i];
    if (s.forward || s.arrow != p.steps[n - 1 - i]) return false;
  }
  return true;
}

Walk splice(const Walk& w, size_t pos, size_t count, const std::vector<WalkStep>& repl) {
  Walk r;
  r.base = w.base;
  r.steps.assign(w.steps.begin(), w.steps.begin() + static_cast<long>(pos));
  r.steps.insert(r.steps.end(), repl.begin(), repl.end());
  r.steps.insert(r.steps.end(), w.steps.begin() + static_cast<long>(pos + count), w.steps.end());
  return r;
}

std::vector<WalkStep> forward_steps(const Path& p) {
  std::vector<WalkStep> s;
  for (const auto& a : p.steps) s.push_back({a, true});
  return s;
}

std::vector<WalkStep> inverse_steps(const Path& p) {
  std::vector<WalkStep> s;
  for (size_t i = p.length(); i-- > 0;) s.push_back({p.steps[i], false});
  return s;
}

}  // namespace

std::vector<Walk> HomotopyEngine::neighbors(const Walk& w, int length_cap, bool* pruned) const {
  std::vector<Walk> out;
  const int len = static_cast<int>(w.length());
  // E1 deletions.
  for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
    if (w.steps[i].arrow == w.steps[i + 1].arrow && w.steps[i].forward != w.steps[i + 1].forward) {
      out.push_back(splice(w, i, 2, {}));
    }
  }
  // E1 insertions.
  if (len + 2 <= length_cap) {
    for (size_t pos = 0; pos <= w.steps.size(); ++pos) {
      const std::string v = vertex_at(quiver_, w, pos);
      for (const auto& a : quiver_.out_arrows(v)) {
        out.push_back(splice(w, pos, 0, {{a, true}, {a, false}}));
      }
      for (const auto& a : quiver_.in_arrows(v)) {
        out.push_back(splice(w, pos, 0, {{a, false}, {a, true}}));
      }
    }
  } else if (pruned) {
    *pruned = true;  // conservative: suppressed insertions count as pruning
  }
  // E2 rewrites, forward and inverted occurrences.
  for (const auto& rel : minimal_) {
    for (size_t i = 0; i < rel.terms.size(); ++i) {
      for (size_t j = 0; j < rel.terms.size(); ++j) {
        if (i == j) continue;
        const Path& pi = rel.terms[i].path;
        const Path& pj = rel.terms[j].path;
        const int nlen = len - static_cast<int>(pi.length()) + static_cast<int>(pj.length());
        const bool fits = nlen <= length_cap;
        for (size_t pos = 0; pos + pi.length() <= w.steps.size(); ++pos) {
          if (forward_run_matches(w, pos, pi)) {
            if (fits) out.push_back(splice(w, pos, pi.length(), forward_steps(pj)));
            else if (pruned) *pruned = true;
          }
          if (inverse_run_matches(w, pos, pi)) {
            if (fits) out.push_back(splice(w, pos, pi.length(), inverse_steps(pj)));
            else if (pruned) *pruned = true;
          }
        }
      }
    }
  }
  return out;
}

Equivalence HomotopyEngine::equivalent_by_search(const Walk& w1, const Walk& w2) const {
  if (w1.base != w2.base || walk_target(quiver_, w1) != walk_target(quiver_, w2)) {
    throw std::invalid_argument("walks_equivalent: walks do not share endpoints");
  }
  Walk r1 = walk_reduce(quiver_, w1), r2 = walk_reduce(quiver_, w2);
  if (r1 == r2) return Equivalence::Yes;
  const int cap = static_cast<int>(std::max(r1.length(), r2.length())) + derived_extra_length();

  auto key = [](const Walk& w) { return walk_str(w); };
  std::map<std::string, int> side;  // 1 or 2
  std::deque<Walk> q1{r1}, q2{r2};
  side[key(r1)] = 1;
  side[key(r2)] = 2;
  bool pruned = false;
  size_t seen1 = 1, seen2 = 1;
  while (!q1.empty() || !q2.empty()) {
    const bool pick1 = !q1.empty() && (q2.empty() || q1.size() <= q2.size());
    auto& queue = pick1 ? q1 : q2;
    const int me = pick1 ? 1 : 2;
    size_t& seen = pick1 ? seen1 : seen2;
    Walk w = queue.front();
    queue.pop_front();
    for (const auto& n : neighbors(w, cap, &pruned)) {
      auto [it, fresh] = side.try_emplace(key(n), me);
      if (!fresh) {
        if (it->second != me) return Equivalence::Yes;
        continue;
      }
      if (++seen > caps_.class_size) return Equivalence::Undecided;
      queue.push_back(n);
    }
  }
  return pruned ? Equivalence::Undecided : Equivalence::No;
}

Equivalence HomotopyEngine::equivalent(const Walk& w1, const Walk& w2) const {
  if (w1.base != w2.base || walk_target(quiver_, w1) != walk_target(quiver_, w2)) {
    throw std::invalid_argument("walks_equivalent: walks do not share endpoints");
  }
  Walk r1 = walk_reduce(quiver_, w1), r2 = walk_reduce(quiver_, w2);
  if (r1 == r2) return Equivalence::Yes;
  if (solver_ && solver_->exact() && quiver_.is_connected()) {
    // Same start and end; homotopic iff the group images agree.
    Word a = solver_->normal_form(r1);
    Word b = solver_->normal_form(r2);
    return a == b ? Equivalence::Yes : Equivalence::No;
  }
  return equivalent_by_search(w1, w2);
}

}  // namespace qcov
