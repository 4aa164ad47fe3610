#include "qcov/covering.hpp"
#include "qcov/group_action.hpp"
#include "qcov/json_io.hpp"
#include "qcov/pi1.hpp"
#include "qcov/rep_type.hpp"
#include "qcov/reps.hpp"
#include "qcov/strings_bands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qcov;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRefusal = 2;

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

struct RunReport {
  Json j;
  explicit RunReport(const std::string& subcommand) {
    j["subcommand"] = subcommand;
    j["inputs"] = Json::object();
    j["warnings"] = Json::array();
  }
  void input(const std::string& flag, const std::string& path) {
    j["inputs"][flag] = Json{{"path", path}, {"fnv1a", file_hash(path)}};
  }
  void warn(const std::string& w) { j["warnings"].push_back(w); }
};

void finish(RunReport& rep, const std::string& out_path, uint64_t seed) {
  rep.j["seed"] = seed;
  if (!out_path.empty()) write_json_file(out_path, rep.j);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"covering theory for quivers with relations"};
  app.require_subcommand(1);

  std::string quiver_path, src_path, dst_path, map_path, group_path, out_path, dot_path;
  std::vector<std::string> rep_paths;
  std::string window_csv, band_word, lambda_str = "1", base;
  int radius = 3, max_len = 4, nval = 1;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the run report as JSON");
    cmd->add_option("--seed", seed, "seed for randomized searches")->capture_default_str();
  };

  auto* c_qcov = app.add_subcommand("check-quiver-covering", "arrow-star bijections of a quiver morphism");
  c_qcov->add_option("--src", src_path)->required();
  c_qcov->add_option("--dst", dst_path)->required();
  c_qcov->add_option("--map", map_path)->required();
  add_common(c_qcov);

  auto* c_rcov = app.add_subcommand("check-relcovering", "covering of quivers with relations");
  c_rcov->add_option("--src", src_path)->required();
  c_rcov->add_option("--dst", dst_path)->required();
  c_rcov->add_option("--map", map_path)->required();
  add_common(c_rcov);

  auto* c_qdim = app.add_subcommand("quotient-dims", "hom-dimension bijection of the induced covering functor");
  c_qdim->add_option("--src", src_path)->required();
  c_qdim->add_option("--dst", dst_path)->required();
  c_qdim->add_option("--map", map_path)->required();
  c_qdim->add_option("--window", window_csv, "comma-separated source vertices (default: all)");
  add_common(c_qdim);

  auto* c_gal = app.add_subcommand("check-galois", "Galois covering recognition");
  c_gal->add_option("--src", src_path)->required();
  c_gal->add_option("--dst", dst_path)->required();
  c_gal->add_option("--map", map_path)->required();
  c_gal->add_option("--group", group_path, "group JSON; omitted: search all subgroups of Aut(Q,I)");
  add_common(c_gal);

  auto* c_orbit = app.add_subcommand("orbit", "orbit quiver with induced ideal");
  c_orbit->add_option("--quiver", quiver_path)->required();
  c_orbit->add_option("--group", group_path)->required();
  c_orbit->add_option("--dot", dot_path);
  add_common(c_orbit);

  auto* c_pi1 = app.add_subcommand("pi1", "fundamental group presentation and verdict");
  c_pi1->add_option("--quiver", quiver_path)->required();
  c_pi1->add_option("--base", base);
  add_common(c_pi1);

  auto* c_sc = app.add_subcommand("simply-connected", "simple-connectedness criterion");
  c_sc->add_option("--quiver", quiver_path)->required();
  add_common(c_sc);

  auto* c_cover = app.add_subcommand("cover", "truncated universal cover");
  c_cover->add_option("--quiver", quiver_path)->required();
  c_cover->add_option("--radius", radius)->capture_default_str();
  c_cover->add_option("--base", base);
  c_cover->add_option("--dot", dot_path);
  add_common(c_cover);

  auto* c_push = app.add_subcommand("pushdown", "push a cover representation down a covering");
  c_push->add_option("--src", src_path)->required();
  c_push->add_option("--dst", dst_path)->required();
  c_push->add_option("--map", map_path)->required();
  c_push->add_option("--rep", rep_paths)->required();
  add_common(c_push);

  auto* c_pull = app.add_subcommand("pullup", "pull a base representation up to a window");
  c_pull->add_option("--src", src_path)->required();
  c_pull->add_option("--dst", dst_path)->required();
  c_pull->add_option("--map", map_path)->required();
  c_pull->add_option("--rep", rep_paths)->required();
  c_pull->add_option("--window", window_csv)->required();
  add_common(c_pull);

  auto* c_rep = app.add_subcommand("rep", "representation checks");
  std::string rep_mode;
  c_rep->add_option("mode", rep_mode, "check|hom|iso|indec")->required();
  c_rep->add_option("--quiver", quiver_path)->required();
  c_rep->add_option("--rep", rep_paths)->required();
  add_common(c_rep);

  auto* c_strings = app.add_subcommand("strings", "enumerate strings");
  c_strings->add_option("--quiver", quiver_path)->required();
  c_strings->add_option("--max-len", max_len)->capture_default_str();
  add_common(c_strings);

  auto* c_bands = app.add_subcommand("bands", "enumerate bands");
  c_bands->add_option("--quiver", quiver_path)->required();
  c_bands->add_option("--max-len", max_len)->capture_default_str();
  add_common(c_bands);

  auto* c_bandmod = app.add_subcommand("bandmod", "band module J_n(lambda)");
  c_bandmod->add_option("--quiver", quiver_path)->required();
  c_bandmod->add_option("--band", band_word)->required();
  c_bandmod->add_option("--n", nval)->capture_default_str();
  c_bandmod->add_option("--lambda", lambda_str)->capture_default_str();
  add_common(c_bandmod);

  auto* c_rt = app.add_subcommand("reptype", "representation type heuristics");
  c_rt->add_option("--quiver", quiver_path)->required();
  c_rt->add_option("--radius", radius)->capture_default_str();
  add_common(c_rt);

  CLI11_PARSE(app, argc, argv);

  auto load_bound = [&](const std::string& path) { return bound_quiver_from_json(load_json_file(path)); };

  if (c_qcov->parsed()) {
    RunReport rep("check-quiver-covering");
    rep.input("src", src_path);
    rep.input("dst", dst_path);
    rep.input("map", map_path);
    auto src = load_bound(src_path);
    auto dst = load_bound(dst_path);
    auto f = morphism_from_json(load_json_file(map_path), src.ambient, dst.ambient);
    auto r = is_quiver_covering(f);
    std::cout << "quiver covering: " << (r.ok ? "true" : "false") << "\n";
    for (const auto& [v, dir] : r.violations) {
      std::cout << "  violation: vertex " << v << ", " << dir << "-star\n";
    }
    std::cout << "surjective on vertices: " << (r.surjective_on_vertices ? "true" : "false")
              << ", on arrows: " << (r.surjective_on_arrows ? "true" : "false") << "\n";
    rep.j["verdict"] = r.ok;
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_rcov->parsed()) {
    RunReport rep("check-relcovering");
    rep.input("src", src_path);
    rep.input("dst", dst_path);
    rep.input("map", map_path);
    BoundQuiverMorphism m{
        morphism_from_json(load_json_file(map_path), load_bound(src_path).ambient, load_bound(dst_path).ambient),
        load_bound(src_path), load_bound(dst_path)};
    rep.j["truncation_length"] = m.source_ideal.truncation_length;
    auto r = is_relation_covering(m);
    std::cout << "relation covering: " << (r.ok ? "true" : "false") << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    rep.j["verdict"] = r.ok;
    rep.j["failures"] = r.failures;
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_qdim->parsed()) {
    RunReport rep("quotient-dims");
    rep.input("src", src_path);
    rep.input("dst", dst_path);
    rep.input("map", map_path);
    BoundQuiverMorphism m{
        morphism_from_json(load_json_file(map_path), load_bound(src_path).ambient, load_bound(dst_path).ambient),
        load_bound(src_path), load_bound(dst_path)};
    std::vector<std::string> window = window_csv.empty()
                                          ? m.f.source.vertices()
                                          : split_commas(window_csv);
    auto r = verify_quotient_covering_dims(m, window);
    std::cout << "quotient dimension bijection: " << (r.ok ? "true" : "false")
              << " (truncation L=" << m.source_ideal.truncation_length
              << ", incomplete pairs: " << r.incomplete << ")\n";
    for (const auto& e : r.source_anchored) {
      std::cout << "  hom(" << e.anchor << ", fibre " << e.other << "): sum=" << e.fibre_sum
                << " base=" << e.base_dim << (e.complete ? "" : " [window incomplete]")
                << (e.complete && !e.match ? " MISMATCH" : "") << "\n";
    }
    rep.j["verdict"] = r.ok;
    rep.j["incomplete"] = r.incomplete;
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_gal->parsed()) {
    RunReport rep("check-galois");
    rep.input("src", src_path);
    rep.input("dst", dst_path);
    rep.input("map", map_path);
    auto src = load_bound(src_path);
    auto dst = load_bound(dst_path);
    BoundQuiverMorphism m{morphism_from_json(load_json_file(map_path), src.ambient, dst.ambient), src, dst};
    if (!group_path.empty()) {
      rep.input("group", group_path);
      auto action = group_from_json(load_json_file(group_path), src.ambient, &src);
      auto r = is_galois_covering(m, action);
      std::cout << "galois covering: " << (r.ok ? "true" : "false") << " (" << r.detail << ")\n";
      rep.j["verdict"] = r.ok;
      rep.j["detail"] = r.detail;
    } else {
      bool complete = true;
      auto all = enumerate_automorphisms(src.ambient, src, 1000000, &complete);
      if (!complete) {
        std::cout << "inconclusive: automorphism enumeration hit the node cap\n";
        finish(rep, out_path, seed);
        return kExitRefusal;
      }
      bool any = false;
      std::string which;
      for (const auto& sub : subgroups_of(all)) {
        ActionPresentation action;
        action.ambient = src.ambient;
        action.enumeration_bound = static_cast<int>(sub.size()) + 1;
        for (const auto& e : sub) {
          if (e.is_identity()) continue;
          BoundQuiverAutomorphism g;
          g.ambient = src.ambient;
          g.element = e;
          action.generators.push_back(g);
        }
        auto r = is_galois_covering(m, action);
        if (r.ok) {
          any = true;
          which = "subgroup of order " + std::to_string(sub.size());
          break;
        }
      }
      std::cout << "galois covering: " << (any ? "true (" + which + ")" : "false") << "\n";
      std::cout << "  Aut(Q,I) order " << all.size() << ", all subgroups examined\n";
      rep.j["verdict"] = any;
      rep.j["aut_order"] = all.size();
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_orbit->parsed()) {
    RunReport rep("orbit");
    rep.input("quiver", quiver_path);
    rep.input("group", group_path);
    auto bq = load_bound(quiver_path);
    auto action = group_from_json(load_json_file(group_path), bq.ambient, &bq);
    auto r = orbit_quiver(action, bq);
    Json j;
    j["quiver"] = quiver_to_json(r.quotient);
    j["ideal"] = ideal_to_json(r.induced_ideal);
    j["projection"] = morphism_to_json(r.projection);
    std::cout << j.dump(2) << "\n";
    rep.j["orbit"] = j;
    if (!dot_path.empty()) {
      std::ofstream d(dot_path);
      d << quiver_dot(r.quotient, "orbit");
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_pi1->parsed()) {
    RunReport rep("pi1");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    const std::string b = base.empty() ? bq.ambient.vertices().front() : base;
    auto pres = pi1_presentation(bq.ambient, bq, b);
    auto simp = simplify(pres);
    std::cout << "generators:";
    for (const auto& g : pres.generators) std::cout << " " << g;
    std::cout << "\nrelators:";
    for (const auto& r : pres.relators) std::cout << " " << word_str(r, pres.generators);
    std::cout << "\nverdict: " << to_string(simp.verdict);
    if (simp.verdict == GroupVerdict::Free) std::cout << " (rank " << simp.free_rank << ")";
    if (simp.verdict == GroupVerdict::InfiniteCyclic) {
      std::cout << ", generator [" << simp.presentation.generators.front() << "]";
    }
    std::cout << "\nabelianization:";
    for (const auto& d : simp.abelian_invariants) std::cout << " " << d.str();
    if (simp.abelian_invariants.empty()) std::cout << " trivial";
    std::cout << "\n";
    rep.j["verdict"] = to_string(simp.verdict);
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_sc->parsed()) {
    RunReport rep("simply-connected");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    auto r = simply_connected_criterion(bq.ambient, bq);
    std::cout << "simply connected (criterion): " << (r.ok ? "true" : "false") << " — " << r.detail << "\n";
    rep.j["verdict"] = r.ok;
    rep.j["detail"] = r.detail;
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_cover->parsed()) {
    RunReport rep("cover");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    const std::string b = base.empty() ? bq.ambient.vertices().front() : base;
    auto cov = build_universal_cover(bq.ambient, bq, b, radius);
    Json j = cover_to_json(cov);
    std::cout << j.dump(2) << "\n";
    rep.j["cover"] = j;
    rep.j["radius"] = radius;
    if (!dot_path.empty()) {
      std::ofstream d(dot_path);
      d << cover_dot(cov);
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_push->parsed() || c_pull->parsed()) {
    const bool push = c_push->parsed();
    RunReport rep(push ? "pushdown" : "pullup");
    rep.input("src", src_path);
    rep.input("dst", dst_path);
    rep.input("map", map_path);
    rep.input("rep", rep_paths.front());
    auto src = load_bound(src_path);
    auto dst = load_bound(dst_path);
    auto f = morphism_from_json(load_json_file(map_path), src.ambient, dst.ambient);
    if (push) {
      auto m = representation_from_json(load_json_file(rep_paths.front()), src.ambient);
      auto r = push_down(f, m);
      for (const auto& w : r.warnings) rep.warn(w);
      Json j = representation_to_json(dst.ambient, r.rep);
      std::cout << j.dump(2) << "\n";
      rep.j["rep"] = j;
    } else {
      auto v = representation_from_json(load_json_file(rep_paths.front()), dst.ambient);
      auto r = pull_up(f, v, split_commas(window_csv));
      for (const auto& w : r.warnings) rep.warn(w);
      rep.warn("pull-up computed on an explicit window; the full pull-up need not be finitely generated");
      Json j = representation_to_json(src.ambient, r.rep);
      std::cout << j.dump(2) << "\n";
      rep.j["rep"] = j;
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_rep->parsed()) {
    RunReport rep("rep-" + rep_mode);
    rep.input("quiver", quiver_path);
    for (const auto& p : rep_paths) rep.input("rep", p);
    auto bq = load_bound(quiver_path);
    auto m = representation_from_json(load_json_file(rep_paths.at(0)), bq.ambient);
    if (rep_mode == "check") {
      auto r = check_rep(bq, m);
      std::cout << "well-formed representation: " << (r.ok ? "true" : "false")
                << (r.ok ? "" : " — " + r.violation) << "\n";
      rep.j["verdict"] = r.ok;
    } else if (rep_mode == "hom") {
      auto n = representation_from_json(load_json_file(rep_paths.at(1)), bq.ambient);
      std::cout << "dim Hom = " << hom_dim(bq.ambient, m, n) << "\n";
    } else if (rep_mode == "iso") {
      auto n = representation_from_json(load_json_file(rep_paths.at(1)), bq.ambient);
      auto r = are_isomorphic(bq.ambient, m, n, seed);
      std::cout << "isomorphic: " << (r.isomorphic ? "true" : "false") << " (" << r.detail
                << ", seed " << seed << ")\n";
      rep.j["verdict"] = r.isomorphic;
    } else if (rep_mode == "indec") {
      auto r = is_indecomposable(bq.ambient, m, seed);
      std::cout << "indecomposable: " << to_string(r.verdict) << " (" << r.detail << ", seed "
                << seed << ")\n";
      rep.j["verdict"] = to_string(r.verdict);
      if (r.verdict == Indecomposability::Unresolved) {
        finish(rep, out_path, seed);
        return kExitRefusal;
      }
    } else {
      std::cerr << "unknown rep mode: " << rep_mode << "\n";
      return kExitInput;
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_strings->parsed() || c_bands->parsed()) {
    const bool strings = c_strings->parsed();
    RunReport rep(strings ? "strings" : "bands");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    auto sa = is_string_presentation(bq);
    if (!sa.ok) rep.warn("not a string presentation: " + sa.witness);
    std::cout << (sa.ok ? "string presentation: true"
                        : "string presentation: false (" + sa.witness + ")")
              << "\n";
    if (strings) {
      auto list = enumerate_strings(bq, max_len);
      std::cout << "strings (max length " << max_len << "): " << list.size() << "\n";
      Json arr = Json::array();
      for (const auto& s : list) {
        std::cout << "  " << s.canonical << "\n";
        arr.push_back(s.canonical);
      }
      rep.j["strings"] = arr;
    } else {
      auto list = enumerate_bands(bq, max_len);
      std::cout << "bands (max length " << max_len << "): " << list.size() << "\n";
      Json arr = Json::array();
      for (const auto& b : list) {
        std::cout << "  " << b.canonical << "\n";
        arr.push_back(b.canonical);
      }
      rep.j["bands"] = arr;
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_bandmod->parsed()) {
    RunReport rep("bandmod");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    Walk w;
    // The band word starts at whichever vertex makes it a valid walk.
    bool ok = false;
    for (const auto& v : bq.ambient.vertices()) {
      try {
        w = parse_walk(bq.ambient, band_word, v);
        ok = true;
        break;
      } catch (const std::invalid_argument&) {
      }
    }
    if (!ok) {
      std::cerr << "band word does not parse as a walk: " << band_word << "\n";
      return kExitInput;
    }
    auto band = make_band(bq, w);
    if (!band) {
      std::cerr << "not a band: " << band_word << "\n";
      return kExitInput;
    }
    auto mod = band_module(bq.ambient, *band, nval, Rational::parse(lambda_str));
    Json j = representation_to_json(bq.ambient, mod);
    std::cout << j.dump(2) << "\n";
    rep.j["band"] = band->canonical;
    rep.j["rep"] = j;
    finish(rep, out_path, seed);
    return kExitOk;
  }

  if (c_rt->parsed()) {
    RunReport rep("reptype");
    rep.input("quiver", quiver_path);
    auto bq = load_bound(quiver_path);
    const Quiver& q = bq.ambient;
    if (bq.generators.empty()) {
      auto cls = classify_path_algebra(q);
      std::cout << "path algebra classification: " << to_string(cls.verdict) << " — "
                << cls.certificate << "\n";
      rep.j["classification"] = to_string(cls.verdict);
    }
    auto wild = detect_wild_patterns(q);
    std::cout << "wild patterns: " << to_string(wild.verdict) << " — " << wild.certificate << "\n";
    auto two = two_in_two_out_criterion(q);
    std::cout << "two-in-two-out: " << to_string(two.verdict) << " — " << two.certificate << "\n";
    if (two.verdict == RepType::InfiniteType) {
      auto cert = e7tt_tree_certificate(q, radius);
      if (cert) {
        std::cout << "E7~~ tree in the rad^2 cover: found (chain";
        for (const auto& v : cert->chain) std::cout << " " << v;
        std::cout << "; branch " << cert->branch << ")\n";
      } else {
        std::cout << "E7~~ tree in the rad^2 cover: none at radius " << radius << "\n";
      }
    }
    finish(rep, out_path, seed);
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const qcov::ClassIdentificationError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
