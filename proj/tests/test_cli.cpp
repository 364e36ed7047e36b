#include "premod/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "premod/classify.hpp"

using namespace premod;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& payload) {
  std::string path = std::string("/tmp/premod_test_") + name;
  std::ofstream f(path, std::ios::binary);
  f << payload;
  return path;
}

}  // namespace

TEST_CASE("census subcommand lists the eight groups") {
  auto r = run({"census", "5", "60"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Z5\t5\nD8\t8\nQ8\t8\nD14\t14\nZ5:Z4\t20\nZ7:Z3\t21\nS4\t24\nA5\t60\n");
}

TEST_CASE("group-info subcommand") {
  auto r = run({"group-info", "Q8"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 8, 5 classes, degrees (1,1,1,1,2)") != std::string::npos);
  auto bad = run({"group-info", "E8"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("validate subcommand: clean, violating, and malformed inputs") {
  PremodularDatum D = rep_s4_branch_datum();
  std::string clean = write_temp("clean.json", canonical_dump(to_json(D, true)));
  auto r = run({"validate", clean});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("clean") != std::string::npos);

  // without S the CLI synthesizes it and says so
  json no_s = to_json(D, false);
  std::string synth = write_temp("nos.json", canonical_dump(no_s));
  r = run({"validate", synth});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("synthesized via balancing") != std::string::npos);

  json broken = to_json(D, true);
  broken["S"][3][3] = to_json(CyclotomicNumber(7));
  std::string bad = write_temp("bad.json", canonical_dump(broken));
  r = run({"validate", bad});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("[balancing] (3,3)") != std::string::npos);

  std::string malformed = write_temp("malformed.json", "{oops");
  r = run({"validate", malformed});
  CHECK(r.exit_code == 2);

  r = run({"validate", "/tmp/premod_no_such_file.json"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("validate reports the theta-condition tag for bad twists") {
  // semion ring with a non-root-of-unity-consistent S entry pattern:
  // a symmetric datum whose twist breaks the integrality at an object
  FusionRing F = fib_ring();
  DimensionVector dims = fp_dimensions(F);
  std::vector<RootOfUnity> T{RootOfUnity(0, 1), RootOfUnity(1, 7)};
  PremodularDatum D = make_datum(F, dims, T);
  std::string path = write_temp("fib7.json", canonical_dump(to_json(D, true)));
  auto r = run({"validate", path});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("theta-condition") != std::string::npos);
}

TEST_CASE("solve subcommand finds the near-group ring") {
  // with self-dual labels and these dimensions the ring is already unique
  auto bare = run({"solve", "--rank", "5", "--dims", "1,1,2,1,1"});
  CHECK(bare.exit_code == 0);
  CHECK(bare.out.find("found 1 fusion ring(s)") != std::string::npos);
  auto r = run({"solve", "--rank", "5", "--dims", "1,1,2,1,1", "--constraint", "1,2,2=1",
                "--constraint", "1,3,4=1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("found 1 fusion ring(s)") != std::string::npos);
  // parse the emitted ring back and compare with the expected skeleton
  auto pos = r.out.find("ring 1: ");
  REQUIRE(pos != std::string::npos);
  json j = json::parse(r.out.substr(pos + 8));
  FusionRing R = ring_from_json(j);
  CHECK(rings_isomorphic(R, make_near_group(klein_table(), 0)).has_value());
}

TEST_CASE("solve rejects malformed input") {
  CHECK(run({"solve", "--rank", "3", "--dims", "1,1"}).exit_code == 2);
  CHECK(run({"solve", "--rank", "2", "--dims", "1,1", "--constraint", "nope"}).exit_code == 2);
}

TEST_CASE("classify subcommand writes a byte-stable report") {
  std::string out1 = "/tmp/premod_test_report1.json";
  std::string out2 = "/tmp/premod_test_report2.json";
  auto r1 = run({"classify", "--out", out1});
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("summary: 8 symmetric, 4 properly premodular, 4 modular") !=
        std::string::npos);
  auto r2 = run({"classify", "--out", out2});
  CHECK(r2.exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK_FALSE(s1.str().empty());
  // the default format is the canonical JSON shipped as the golden report
  std::ifstream golden(data_dir() + "/golden_report.json", std::ios::binary);
  std::stringstream gs;
  gs << golden.rdbuf();
  CHECK(s1.str() == gs.str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("classify text format renders one line per node") {
  auto r = run({"classify", "--format", "text"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[Prop 3.7] -- ELIMINATED") != std::string::npos);
  CHECK(r.out.find("[Prop 3.9(ii)] -- REALIZED") != std::string::npos);
}

TEST_CASE("serialization round-trips are bit-exact") {
  std::vector<CyclotomicNumber> values{
      CyclotomicNumber(Rational(-7, 3)), CyclotomicNumber::sqrt5(),
      CyclotomicNumber::golden_ratio() / CyclotomicNumber(4),
      CyclotomicNumber::zeta(12, 7) + CyclotomicNumber::sqrt3() * Rational(2, 5),
      CyclotomicNumber::sqrt_of_integer(Integer(10))};
  for (const auto& x : values) {
    json j = to_json(x);
    CHECK(cyclo_from_json(j) == x);
    CHECK(canonical_dump(to_json(cyclo_from_json(j))) == canonical_dump(j));
  }
  for (auto r : {RootOfUnity(0, 1), RootOfUnity(3, 8), RootOfUnity(9, 22)}) {
    CHECK(root_from_json(to_json(r)) == r);
  }
  PremodularDatum D = psu2_8_datum();
  json j = to_json(D, true);
  PremodularDatum back = datum_from_json(j);
  CHECK(back.ring == D.ring);
  CHECK(back.dims == D.dims);
  CHECK(back.twists == D.twists);
  CHECK(back.S == D.S);
  CHECK(canonical_dump(to_json(back, true)) == canonical_dump(j));
  IntPolynomial p({Integer(-1), Integer(0), Integer(5), Integer(1)});
  CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("solve reports search-space exhaustion as an operational error") {
  auto r = run({"solve", "--rank", "5", "--dims", "1,1,2,3,3", "--node-budget", "5"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("node budget") != std::string::npos);
}
