#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "qfock/cli.hpp"
#include "qfock/serialize.hpp"

using namespace qfock;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ring elements and characters round-trip") {
  RingElem x = parse_ring_elem("(q^2+1)/(q*p-1)");
  CHECK(ring_from_json(to_json(x)) == x);
  CharPoly c{{{1, 0}, 1}, {{0, 1}, 2}};
  CHECK(to_json(c).dump() == R"({"0,1":"2","1,0":"1"})");
  CHECK(charpoly_from_json(to_json(c)) == c);
  GradedChar g{{0, c}, {2, {{{}, 1}}}};
  CHECK(graded_from_json(Json::parse(to_json(g).dump())) == g);
  CHECK(parse_exponent_key("").empty());
}

TEST_CASE("polynomials and wedge vectors round-trip") {
  PolyVector f = macdonald_phi(CompositionLabel::min({1, 0}));
  CHECK(poly_from_json(Json::parse(to_json(f).dump())) == f);
  WedgeVec v = straighten(Word{3, 5, 4}, 2);
  CHECK(wedge_from_json(Json::parse(to_json(v).dump())) == v);
}

TEST_CASE("reports round-trip") {
  RelationReport r = verify_relations(ActionContext::eval(2, {0, 2}), colour_words(2, 2));
  CHECK(relation_report_from_json(Json::parse(to_json(r).dump())) == r);
  DecompReport d = psi_k_check(2, 0, 1);
  CHECK(decomp_report_from_json(Json::parse(to_json(d).dump())) == d);
  Json j = to_json(d);
  CHECK(j["status"] == "MATCH");
  CHECK(j["entries"][0]["strip"] == Json::array({1, 1}));
}

TEST_CASE("cli subcommands and exit codes") {
  CHECK(run({"decompose", "--n", "2", "--M", "0", "--degree", "1"}).code == kExitOk);
  Run d = run({"decompose", "--n", "2", "--M", "0", "--degree", "2", "--format", "json"});
  CHECK(d.code == kExitOk);
  Json j = Json::parse(d.out);
  CHECK(j["status"] == "MATCH");
  CHECK(j["quotientDim"].get<int>() > 0);
  CHECK(run({"verify", "--action", "eval", "--n", "2", "--a", "0,2"}).out.find("PASS\n") != std::string::npos);
  CHECK(run({"verify", "--action", "u1-fock", "--n", "2", "--M", "0", "--degree", "1"}).code == kExitOk);
  CHECK(run({"verify", "--action", "u0-n", "--n", "2", "--M", "0", "--l", "1", "--p", "1"}).code == kExitOk);
  Run c = run({"characters", "--n", "2", "--k", "1", "--cutoff", "0", "--format", "json"});
  CHECK(Json::parse(c.out)["character"]["0"] == Json::parse(R"({"0,1":"1","1,0":"1"})"));
  CHECK(run({"characters", "--n", "2", "--k", "0", "--cutoff", "2", "--compare"}).code == kExitOk);
  CHECK(run({"strip-module", "--n", "2", "--strip", "1,1", "--a0", "0", "--character", "--dim"}).code == kExitOk);
  CHECK(run({"sl2", "--strip", "1,1", "--solve"}).out.find("W_2(1)") != std::string::npos);
  CHECK(run({"straighten", "--n", "2", "--word", "3,5,4"}).code == kExitOk);
  CHECK(run({"macdonald", "--N", "2", "--lambda", "0,1", "--sigma", "list", "--p1"}).code == kExitOk);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"sl2", "--strip", "3"}).code == kExitUsage);
  CHECK(run({"verify", "--action", "eval", "--n", "2"}).code == kExitUsage);
  CHECK(run({"characters", "--n", "2", "--k", "2", "--cutoff", "0"}).code == kExitUsage);
  CHECK(run({"decompose", "--n", "2", "--degree", "1", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::string> a{"decompose", "--n", "3", "--M", "0", "--degree", "1", "--format", "json"};
  CHECK(run(a).out == run(a).out);
  std::vector<std::string> m{"macdonald", "--lambda", "1,0,0", "--sigma", "list", "--format", "json"};
  CHECK(run(m).out == run(m).out);
}

TEST_CASE("macdonald memo cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qfock_cache_test";
  fs::remove_all(dir);
  ::setenv("QFOCK_CACHE_DIR", dir.c_str(), 1);
  CompositionLabel l = CompositionLabel::min({1, 0, -1});
  PolyVector a = cached_macdonald(l, true);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  PolyVector b = cached_macdonald(l, true);
  CHECK(a == b);
  CHECK(a == macdonald_phi_p1(l));
  // a corrupt entry is recomputed
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{";
  CHECK(cached_macdonald(l, true) == a);
  ::unsetenv("QFOCK_CACHE_DIR");
  fs::remove_all(dir);
}
