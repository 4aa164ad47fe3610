#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string cli() {
  const char* p = std::getenv("QCOV_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string data(const std::string& name) {
  const char* p = std::getenv("QCOV_FIXTURES");
  REQUIRE(p != nullptr);
  return std::string(p) + "/" + name;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = cli() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("pi1 subcommand: Riedtmann I2 is infinite cyclic on [al]") {
  auto r = run("pi1 --quiver " + data("riedtmann_I2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("infinite_cyclic") != std::string::npos);
  CHECK(r.out.find("generator [al]") != std::string::npos);
}

TEST_CASE("pi1 subcommand: Riedtmann I1 is trivial") {
  auto r = run("pi1 --quiver " + data("riedtmann_I1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: trivial") != std::string::npos);
}

TEST_CASE("cover subcommand: A2 cover is A2 again") {
  auto r = run("cover --quiver " + data("a2.json") + " --radius 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"[]\"") != std::string::npos);
  CHECK(r.out.find("e1") != std::string::npos);
}

TEST_CASE("check-relcovering and check-galois on the covering fixture") {
  std::string args = " --src " + data("example15_src.json") + " --dst " + data("example15_dst.json") +
                     " --map " + data("example15_map.json");
  auto r1 = run("check-quiver-covering" + args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("quiver covering: true") != std::string::npos);

  auto r2 = run("check-relcovering" + args);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("relation covering: true") != std::string::npos);

  // No subgroup of Aut(Q, I) exhibits it as Galois.
  auto r3 = run("check-galois" + args);
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("galois covering: false") != std::string::npos);
}

TEST_CASE("orbit subcommand: flip quotient has three vertices, doubled arrows") {
  auto r = run("orbit --quiver " + data("skewgentle6.json") + " --group " + data("flip.json"));
  CHECK(r.exit_code == 0);
  // Quotient vertex list holds exactly the lexicographic orbit reps.
  CHECK(r.out.find("\"vertices\": [\n      \"d0\",\n      \"d1\",\n      \"d2\"\n    ]") !=
        std::string::npos);
  // Two arrow orbits per column step survive, named by their least members.
  CHECK(r.out.find("\"id\": \"al_d01\"") != std::string::npos);
  CHECK(r.out.find("\"id\": \"be_d0u1\"") != std::string::npos);
  CHECK(r.out.find("\"id\": \"al_u01\"") == std::string::npos);
}

TEST_CASE("strings, bands and bandmod on the Kronecker quiver") {
  auto r1 = run("strings --quiver " + data("kronecker.json") + " --max-len 2");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("string presentation: true") != std::string::npos);
  CHECK(r1.out.find("a,-b") != std::string::npos);

  auto r2 = run("bands --quiver " + data("kronecker.json") + " --max-len 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("bands (max length 2): 1") != std::string::npos);
  CHECK(r2.out.find("a,-b") != std::string::npos);

  auto r3 = run("bandmod --quiver " + data("kronecker.json") + " --band a,-b --n 2 --lambda 3");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("\"3\"") != std::string::npos);  // the Jordan diagonal
}

TEST_CASE("rep subcommands") {
  auto r1 = run("rep check --quiver " + data("kronecker.json") + " --rep " + data("kron_V10.json"));
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("well-formed representation: true") != std::string::npos);

  auto r2 = run("rep iso --quiver " + data("kronecker.json") + " --rep " + data("kron_V10.json") +
                " --rep " + data("kron_V10.json"));
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("isomorphic: true") != std::string::npos);

  auto r3 = run("rep indec --quiver " + data("kronecker.json") + " --rep " + data("kron_V10.json"));
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("indecomposable: yes") != std::string::npos);
}

TEST_CASE("reptype subcommand") {
  auto r = run("reptype --quiver " + data("kronecker.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tame") != std::string::npos);
}

TEST_CASE("simply-connected subcommand") {
  auto r = run("simply-connected --quiver " + data("a2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("simply connected (criterion): true") != std::string::npos);
}

TEST_CASE("malformed input exits with code 1 and a diagnostic") {
  auto r = run("pi1 --quiver /nonexistent.json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("input error") != std::string::npos);

  auto r2 = run("pi1 --quiver " + data("malformed.json"));
  CHECK(r2.exit_code == 1);
  CHECK(r2.out.find("parse error") != std::string::npos);
}

TEST_CASE("pushdown and pullup subcommands over the A2 u A2 fold") {
  std::string cover_args = " --src " + data("fold_src.json") + " --dst " + data("fold_dst.json") +
                           " --map " + data("fold_map.json");
  auto r1 = run("pushdown" + cover_args + " --rep " + data("fold_rep.json"));
  CHECK(r1.exit_code == 0);
  // One summand is supported on the p-copy: the pushed matrix keeps the 5.
  CHECK(r1.out.find("\"5\"") != std::string::npos);
  CHECK(r1.out.find("\"v1\": 1") != std::string::npos);

  auto r2 = run("pullup" + cover_args + " --rep " + data("fold_base_rep.json") +
                " --window p1,p2,q1,q2");
  CHECK(r2.exit_code == 0);
  // Both copies receive the base module.
  CHECK(r2.out.find("\"p1\": 1") != std::string::npos);
  CHECK(r2.out.find("\"q1\": 1") != std::string::npos);
  CHECK(r2.out.find("\"7\"") != std::string::npos);
}

TEST_CASE("byte determinism: identical runs produce identical stdout") {
  const std::string cmd = "cover --quiver " + data("riedtmann_I2.json") + " --radius 3";
  auto r1 = run(cmd);
  auto r2 = run(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);

  auto s1 = run("strings --quiver " + data("kronecker.json") + " --max-len 4");
  auto s2 = run("strings --quiver " + data("kronecker.json") + " --max-len 4");
  CHECK(s1.out == s2.out);
}

#include "qcov/json_io.hpp"

#include "fixtures.hpp"

TEST_CASE("JSON round trips preserve quivers, ideals, morphisms, representations") {
  using namespace qcov;
  auto ideal = fixtures::riedtmann_I2();
  Json bq = bound_quiver_to_json(ideal);
  auto back = bound_quiver_from_json(bq);
  CHECK(back.ambient.vertices() == ideal.ambient.vertices());
  CHECK(back.ambient.arrows().size() == ideal.ambient.arrows().size());
  CHECK(back.generators.size() == ideal.generators.size());
  CHECK(back.truncation_length == ideal.truncation_length);
  CHECK(bound_quiver_to_json(back) == bq);

  QuiverMorphism f = fixtures::example15_map();
  Json mj = morphism_to_json(f);
  auto f2 = morphism_from_json(mj, f.source, f.target);
  CHECK(f2.vertex_map == f.vertex_map);
  CHECK(f2.arrow_map == f.arrow_map);

  Representation m;
  m.dims = {{"1", 2}, {"2", 1}};
  m.mats["al"] = Mat::Zero(2, 2);
  m.mats["al"](0, 1) = Rational(1, 3);
  m.mats["be"] = Mat::Zero(1, 2);
  m.mats["ga"] = Mat::Zero(2, 1);
  m.mats["ga"](0, 0) = Rational(-7);
  Json rj = representation_to_json(ideal.ambient, m);
  auto m2 = representation_from_json(rj, ideal.ambient);
  CHECK(m2.dims == m.dims);
  CHECK(m2.mats.at("al")(0, 1) == Rational(1, 3));
  CHECK(m2.mats.at("ga")(0, 0) == Rational(-7));
  CHECK(representation_to_json(ideal.ambient, m2) == rj);
}
