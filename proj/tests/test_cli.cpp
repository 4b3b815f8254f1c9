#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nilform/cli.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/io.hpp"

using namespace nilform;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "nilform_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write(const std::string& name, const Json& j) {
  const std::string p = tmp(name);
  io::write_file(p, j);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("pell") {
  auto r = run({"pell", "--disc", "20"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json{{"x", 18}, {"y", 4}});
  r = run({"pell", "--disc", "5", "--plain"});
  CHECK(r.out == "x=3 y=1\n");
  r = run({"pell", "--disc", "16"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "BadDiscriminant");
  CHECK(run({"pell"}).code == 2);
  CHECK(run({"pell", "--disc", "x"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("construct z4 and round trip through certify") {
  const std::string out = tmp("z4.json");
  auto r = run({"construct", "--recipe", "z4", "-o", out});
  REQUIRE(r.code == 0);
  const Json summary = Json::parse(r.out);
  CHECK(summary["signature"] == Json{2, 4});
  CHECK(summary["classify"] == 5);
  const std::string first = slurp(out);
  const Json bundle = Json::parse(first);
  CHECK(bundle["matrix"] == Json{{"0", "0", "0", "-1", "0", "0"},
                                 {"1", "0", "0", "-1", "0", "0"},
                                 {"0", "1", "0", "4", "0", "0"},
                                 {"0", "0", "1", "4", "0", "0"},
                                 {"0", "0", "0", "0", "-1/2", "-1/2"},
                                 {"0", "0", "0", "0", "-1/2", "-5/2"}});
  CHECK(bundle["lambda_minpoly"] == Json{"1", "1", "-4", "-4", "1"});

  // determinism
  REQUIRE(run({"construct", "--recipe", "z4", "-o", out}).code == 0);
  CHECK(slurp(out) == first);

  const auto a = write("z4_algebra.json", bundle["algebra"]);
  const auto m = write("z4_map.json", bundle["matrix"]);
  r = run({"certify", "--algebra", a, "--map", m});
  REQUIRE(r.code == 0);
  Json bare = bundle["certificate"];
  bare["assumptions"] = Json::array();
  CHECK(r.out == io::dump(bare));
  r = run({"certify", "--algebra", a, "--map", m, "--field", "quartic_z4"});
  CHECK(r.out == io::dump(bundle["certificate"]));
  CHECK(io::dump(io::to_json(io::certificate_from_json(Json::parse(r.out)))) == r.out);
  CHECK(io::dump(io::to_json(io::algebra_from_json(bundle["algebra"]))) == io::dump(bundle["algebra"]));

  r = run({"classify42", "--algebra", a});
  CHECK(Json::parse(r.out)["k"] == 5);
  CHECK(Json::parse(r.out)["discriminant"] == "5/4");
  r = run({"pfaffian", "--algebra", a});
  CHECK(Json::parse(r.out)["form"] == Json{{"a", "-1/4"}, {"b", "-1"}, {"c", "1/4"}});
}

TEST_CASE("certify verdicts and errors") {
  const auto h = write("heis.json", io::to_json(heisenberg()));
  const auto id = write("id3.json", io::to_json(RationalMatrix::identity(3)));
  auto r = run({"certify", "--algebra", h, "--map", id});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["hyperbolic"] == false);
  CHECK(Json::parse(r.out)["signature"].is_null());

  const auto bad = write("bad_map.json", io::to_json(RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}})));
  r = run({"certify", "--algebra", h, "--map", bad});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "NotAutomorphism");

  {
    std::ofstream f(tmp("broken.json"));
    f << "{\"dim\": 3, \"brackets\": [";
  }
  CHECK(run({"certify", "--algebra", tmp("broken.json"), "--map", id}).code == 2);
  const auto unordered = write("unordered.json", Json{{"field", "Q"}, {"dim", 3}, {"brackets", {{1, 0, 2, "1"}}}});
  CHECK(run({"certify", "--algebra", unordered, "--map", id}).code == 2);
  CHECK(run({"certify", "--algebra", tmp("missing.json"), "--map", id}).code == 2);
}

TEST_CASE("construct count") {
  auto r = run({"construct", "--recipe", "count", "--k", "5", "--l", "2"});
  REQUIRE(r.code == 0);
  const Json b = Json::parse(r.out);
  CHECK(b["classify"] == 5);
  CHECK(b["certificate"]["signature"] == Json{2, 4});
  CHECK(b["labels"].size() == 6);

  r = run({"construct", "--recipe", "count", "--k", "4", "--l", "2"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "BadParameters");
  CHECK(run({"construct", "--recipe", "nope"}).code == 2);
}

TEST_CASE("construct csig, last, laur") {
  auto r = run({"construct", "--recipe", "csig", "--lambda", "-1,0,3,0", "--class", "3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["certificate"]["algebra_type"] == Json{4, 2, 4});
  CHECK(Json::parse(r.out)["certificate"]["minimal_signature"] == true);
  r = run({"construct", "--recipe", "csig", "--lambda", "0,1,0,0"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "ConstraintFailed");

  r = run({"construct", "--recipe", "last", "--field", "cubic_z3", "--lambda", "[\"-1\",\"1\",\"1\"]", "--class", "3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["certificate"]["algebra_type"] == Json{3, 3, 3});

  r = run({"construct", "--recipe", "laur", "--field", "sqrt:2", "--lambda", "1,1", "--grading", "2,1"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["certificate"]["signature"] == Json{3, 3});
  r = run({"construct", "--recipe", "laur", "--field", "sqrt:2", "--lambda", "0,1", "--grading", "2,1"});
  CHECK(Json::parse(r.err)["error"] == "NotPisot");
  r = run({"construct", "--recipe", "laur", "--field", "sqrt:2", "--lambda", "1,1", "--grading", "1,2"});
  CHECK(Json::parse(r.err)["error"] == "NotGraded");
}

TEST_CASE("pisot search") {
  auto r = run({"pisot", "--field", "sqrt:2", "--height", "2"});
  REQUIRE(r.code == 0);
  bool found = false;
  for (const auto& u : Json::parse(r.out))
    if (u["element"] == Json{"1", "1"}) {
      found = true;
      CHECK(u["minpoly"] == Json{"-1", "-2", "1"});
      CHECK(u["moduli"].size() == 2);
    }
  CHECK(found);
  CHECK(Json::parse(run({"pisot", "--field", "sqrt:2", "--height", "0"}).out) == Json::array());

  const auto datum = write("quartic.json", io::to_json(fixtures::quartic_z4_spec()));
  r = run({"pisot", "--field", datum, "--height", "1", "--pisot-cone"});
  REQUIRE(r.code == 0);
  found = false;
  for (const auto& u : Json::parse(r.out)) found = found || u["element"] == Json{"0", "1", "0", "0"};
  CHECK(found);

  // theta fails the extra constraint, -1 + 3 theta^2 does not
  const auto cons = write("csig.json", Json::array({{{"coeffs", {1, 0, 2, 0}}, {"rel", "<1"}}}));
  r = run({"pisot", "--field", datum, "--height", "1", "--pisot-cone", "--constraints", cons});
  REQUIRE(r.code == 0);
  for (const auto& u : Json::parse(r.out)) CHECK(u["element"] != Json{"0", "1", "0", "0"});
  const auto bad = write("bad_cons.json", Json::array({{{"coeffs", {1, 0}}, {"rel", "<1"}}}));
  CHECK(run({"pisot", "--field", datum, "--height", "1", "--constraints", bad}).code == 1);
}

TEST_CASE("dualize and verify-field") {
  const auto n5 = write("n5.json", io::to_json(n_k_algebra(5)));
  auto r = run({"dualize", "--algebra", n5});
  REQUIRE(r.code == 0);
  CHECK(io::algebra_from_json(Json::parse(r.out)) == h_k_algebra(5));

  const auto datum = write("cubic.json", io::to_json(fixtures::cubic_z3_spec()));
  r = run({"verify-field", "--field", datum});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["table"] == Json{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});

  Json broken = io::to_json(fixtures::cubic_z3_spec());
  broken["automorphisms"][1] = Json{"0", "2"};
  r = run({"verify-field", "--field", write("broken_cubic.json", broken)});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "AutomorphismFailsMinPoly");
}
