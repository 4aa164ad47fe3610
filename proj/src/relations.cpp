#include "qcov/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcov {

std::string relation_source(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw std::invalid_argument("relation has no terms");
  return path_source(q, r.terms.front().path);
}

std::string relation_target(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw std::invalid_argument("relation has no terms");
  return path_target(q, r.terms.front().path);
}

Relation relation_normalize(const Quiver& q, const Relation& r) {
  (void)q;
  std::map<Path, Rational> acc;
  for (const auto& t : r.terms) acc[t.path] += t.coeff;
  Relation out;
  for (const auto& [p, c] : acc) {
    if (!c.is_zero()) out.terms.push_back({c, p});
  }
  return out;
}

bool relation_well_formed(const Quiver& q, const Relation& r, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (r.terms.empty()) return fail("relation has no terms");
  std::string src, dst;
  std::set<std::string> seen;
  for (const auto& t : r.terms) {
    if (t.coeff.is_zero()) return fail("zero coefficient");
    if (!path_valid(q, t.path)) return fail("invalid path " + path_str(t.path));
    if (t.path.length() < 1) return fail("length-0 path in relation");
    if (!seen.insert(path_str(t.path)).second) return fail("duplicate path " + path_str(t.path));
    const std::string s = path_source(q, t.path), d = path_target(q, t.path);
    if (src.empty()) {
      src = s;
      dst = d;
    } else if (s != src || d != dst) {
      return fail("paths not parallel");
    }
  }
  return true;
}

std::string relation_str(const Relation& r) {
  std::string s;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    if (i) s += " + ";
    s += "(" + r.terms[i].coeff.str() + ")*" + path_str(r.terms[i].path);
  }
  return s;
}

Relation map_relation(const QuiverMorphism& f, const Relation& r) {
  Relation out;
  for (const auto& t : r.terms) out.terms.push_back({t.coeff, map_path(f, t.path)});
  return relation_normalize(f.target, out);
}

int IdealPresentation::max_generator_length() const {
  int m = 0;
  for (const auto& g : generators) {
    for (const auto& t : g.terms) m = std::max(m, static_cast<int>(t.path.length()));
  }
  return m;
}

int IdealPresentation::default_truncation(const std::vector<Relation>& gens, std::optional<int> nilpotency) {
  int maxlen = 0;
  for (const auto& g : gens) {
    for (const auto& t : g.terms) maxlen = std::max(maxlen, static_cast<int>(t.path.length()));
  }
  int l = std::max(2 * maxlen, nilpotency.value_or(0));
  return std::max(l, 2);
}

IdealPresentation IdealPresentation::make(Quiver q, std::vector<Relation> gens,
                                          std::optional<int> nilpotency,
                                          std::optional<int> truncation) {
  IdealPresentation ideal;
  ideal.ambient = std::move(q);
  ideal.generators.reserve(gens.size());
  for (auto& g : gens) {
    std::string why;
    if (!relation_well_formed(ideal.ambient, g, &why)) {
      throw std::invalid_argument("ideal generator ill-formed: " + why);
    }
    ideal.generators.push_back(relation_normalize(ideal.ambient, g));
  }
  ideal.nilpotency_bound = nilpotency;
  ideal.truncation_length = truncation.value_or(default_truncation(ideal.generators, nilpotency));
  if (nilpotency && ideal.truncation_length < *nilpotency) {
    throw std::invalid_argument("truncation_length below nilpotency_bound");
  }
  return ideal;
}

std::string to_string(RelationClass c) {
  switch (c) {
    case RelationClass::Zero: return "zero";
    case RelationClass::Minimal: return "minimal";
    case RelationClass::Decomposable: return "decomposable";
    case RelationClass::NotInIdeal: return "not_in_ideal";
  }
  return "?";
}

IdealMembership::IdealMembership(const IdealPresentation& ideal) : ideal_(ideal) {}

const IdealMembership::Space& IdealMembership::space(const std::string& x, const std::string& y) const {
  auto key = std::make_pair(x, y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  const Quiver& q = ideal_.ambient;
  const int L = ideal_.truncation_length;
  Space s;
  s.basis = enumerate_paths(q, x, y, L);
  // Trivial paths are not part of the arrow ideal's (x, y)-space when x == y,
  // but keeping them in the basis is harmless and simplifies hom-dim counts:
  // the span rows below never touch the trivial coordinate.
  for (size_t i = 0; i < s.basis.size(); ++i) s.index[s.basis[i]] = i;

  std::vector<Vec> rows;
  auto add_row = [&](const std::map<size_t, Rational>& entries) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(s.basis.size()));
    for (const auto& [i, c] : entries) v(static_cast<Eigen::Index>(i)) = c;
    rows.push_back(std::move(v));
  };

  // Rows u * rho * v for prefix v: x -> s(rho), suffix u: t(rho) -> y; a
  // product is included only when every one of its terms fits under L.
  for (const auto& g : ideal_.generators) {
    const std::string gs = relation_source(q, g);
    const std::string gt = relation_target(q, g);
    int gmax = 0;
    for (const auto& t : g.terms) gmax = std::max(gmax, static_cast<int>(t.path.length()));
    if (gmax > L) continue;  // no product of this generator fits under L
    for (const auto& pre : enumerate_paths(q, x, gs, L - gmax)) {
      const int rest = L - gmax - static_cast<int>(pre.length());
      for (const auto& suf : enumerate_paths(q, gt, y, rest)) {
        std::map<size_t, Rational> entries;
        for (const auto& t : g.terms) {
          Path full;
          full.base = x;
          full.steps = pre.steps;
          full.steps.insert(full.steps.end(), t.path.steps.begin(), t.path.steps.end());
          full.steps.insert(full.steps.end(), suf.steps.begin(), suf.steps.end());
          auto bit = s.index.find(full);
          if (bit == s.index.end()) throw std::logic_error("membership: product path missing from basis");
          entries[bit->second] += t.coeff;
        }
        for (auto eit = entries.begin(); eit != entries.end();) {
          eit = eit->second.is_zero() ? entries.erase(eit) : std::next(eit);
        }
        if (!entries.empty()) add_row(entries);
      }
    }
  }
  // Long paths are ideal elements under a nilpotency bound.
  if (ideal_.nilpotency_bound) {
    const int n = *ideal_.nilpotency_bound;
    for (size_t i = 0; i < s.basis.size(); ++i) {
      if (static_cast<int>(s.basis[i].length()) >= n) add_row({{i, Rational(1)}});
    }
  }

  Mat span(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(s.basis.size()));
  for (size_t i = 0; i < rows.size(); ++i) span.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  Rref r = rref(span);
  s.span_rref = r.m.topRows(r.rank());
  s.pivots = r.pivot_cols;
  return cache_.emplace(key, std::move(s)).first->second;
}

Vec IdealMembership::coords(const Space& s, const Relation& r) const {
  Vec v = Vec::Zero(static_cast<Eigen::Index>(s.basis.size()));
  for (const auto& t : r.terms) {
    auto it = s.index.find(t.path);
    if (it == s.index.end()) {
      throw std::invalid_argument("membership: path " + path_str(t.path) +
                                  " exceeds truncation length " + std::to_string(ideal_.truncation_length));
    }
    v(static_cast<Eigen::Index>(it->second)) += t.coeff;
  }
  return v;
}

bool IdealMembership::contains(const Relation& candidate) const {
  Relation r = relation_normalize(ideal_.ambient, candidate);
  if (r.terms.empty()) return true;  // the zero combination
  const std::string x = relation_source(ideal_.ambient, r);
  const std::string y = relation_target(ideal_.ambient, r);
  const Space& s = space(x, y);
  Vec v = coords(s, r);
  // Reduce v against the RREF rows; in the span iff it reduces to zero.
  for (size_t i = 0; i < s.pivots.size(); ++i) {
    const Eigen::Index pc = s.pivots[i];
    if (!v(pc).is_zero()) {
      v -= v(pc) * s.span_rref.row(static_cast<Eigen::Index>(i)).transpose();
    }
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

bool IdealMembership::contains_path(const Path& p) const {
  Relation r;
  r.terms.push_back({Rational(1), p});
  return contains(r);
}

int IdealMembership::quotient_hom_dim(const std::string& x, const std::string& y) const {
  const Space& s = space(x, y);
  return static_cast<int>(s.basis.size() - s.pivots.size());
}

RelationClass IdealMembership::classify(const Relation& r0, int subset_cap) const {
  Relation r = relation_normalize(ideal_.ambient, r0);
  std::string why;
  if (!relation_well_formed(ideal_.ambient, r, &why)) {
    throw std::invalid_argument("classify_relation: " + why);
  }
  const size_t n = r.size();
  if (static_cast<int>(n) > subset_cap) {
    throw std::length_error("classify_relation: " + std::to_string(n) +
                            " terms exceed the subset cap of " + std::to_string(subset_cap));
  }
  if (!contains(r)) return RelationClass::NotInIdeal;
  if (n == 1) return RelationClass::Zero;
  for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); ++mask) {
    Relation part;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (uint64_t(1) << i)) part.terms.push_back(r.terms[i]);
    }
    if (contains(part)) return RelationClass::Decomposable;
  }
  return RelationClass::Minimal;
}

std::vector<TaggedRelation> IdealMembership::minimal_generators(int subset_cap) const {
  std::vector<TaggedRelation> out;
  for (const auto& g0 : ideal_.generators) {
    Relation g = relation_normalize(ideal_.ambient, g0);
    if (g.terms.empty()) continue;
    // Peel smallest-in-ideal pieces; a smallest one has no proper sub-sum in
    // the ideal, so it is zero or minimal.
    Relation rest = g;
    while (!rest.terms.empty()) {
      const size_t n = rest.size();
      if (static_cast<int>(n) > subset_cap) {
        throw std::length_error("minimal_generators: generator splits past the subset cap");
      }
      bool peeled = false;
      // Subsets ordered by size, then lexicographically on index sets.
      std::vector<uint64_t> masks;
      for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) masks.push_back(mask);
      std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
      });
      for (uint64_t mask : masks) {
        Relation part, remain;
        for (size_t i = 0; i < n; ++i) {
          ((mask >> i) & 1 ? part : remain).terms.push_back(rest.terms[i]);
        }
        if (!contains(part)) continue;
        TaggedRelation tr;
        tr.relation = part;
        tr.tag = part.size() == 1 ? RelationClass::Zero : RelationClass::Minimal;
        out.push_back(tr);
        rest = remain;
        peeled = true;
        break;
      }
      if (!peeled) {
        throw std::logic_error("minimal_generators: generator in ideal admits no in-ideal subset");
      }
    }
  }
  return out;
}

bool membership(const IdealPresentation& ideal, const Relation& candidate) {
  return IdealMembership(ideal).contains(candidate);
}

RelationClass classify_relation(const IdealPresentation& ideal, const Relation& r, int subset_cap) {
  return IdealMembership(ideal).classify(r, subset_cap);
}

std::vector<TaggedRelation> minimal_generators(const IdealPresentation& ideal, int subset_cap) {
  return IdealMembership(ideal).minimal_generators(subset_cap);
}

}  // namespace qcov
