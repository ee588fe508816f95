#include <doctest.h>

#include <sstream>

#include "wordmap/cli.hpp"
#include "wordmap/error.hpp"
#include "wordmap/serialize.hpp"

using namespace wordmap;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wordmap");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("argument helpers") {
    CHECK(parse_dc("1,-2,3,4") == DCParams{1, -2, 3, 4});
    CHECK_THROWS_AS(parse_dc("1,2,3"), Error);
    CHECK_THROWS_AS(parse_dc("1,2,x,4"), Error);
    const auto g = parse_grid("-1:1,2,0:3,-2:-1");
    CHECK(g[0].lo == -1);
    CHECK(g[0].hi == 1);
    CHECK(g[1].lo == 2);
    CHECK(g[1].hi == 2);
    CHECK(g[3].hi == -1);
    CHECK_THROWS_AS(parse_grid("1:2,1"), Error);
    CHECK(grid_seed(0, {1, 1, 2, 3}) == grid_seed(0, {1, 1, 2, 3}));
    CHECK(grid_seed(0, {1, 1, 2, 3}) != grid_seed(0, {1, 1, 3, 2}));
    CHECK(grid_seed(0, {1, 1, 2, 3}) != grid_seed(1, {1, 1, 2, 3}));
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"certify", "--dc", "1,1,2,3", "--seed", "7"}).code == kExitOk);
    CHECK(invoke({"certify", "--dc", "1,1,1,1"}).code == kExitTrivial);
    CHECK(invoke({"certify", "--dc", "1,2,3,1", "--max-attempts", "1", "--lambda", "1", "--mu", "2"}).code ==
          kExitInconclusive);
    CHECK(invoke({"certify", "--dc", "1,1"}).code == kExitInput);
    CHECK(invoke({"certify"}).code == kExitInput);
    CHECK(invoke({"bogus"}).code == kExitInput);
    CHECK(invoke({"verify", "--word", "x y^2 x^-3"}).code == kExitOk);
    CHECK(invoke({"witness", "--dc", "1,1,-1,-1", "--lambda", "2", "--mu", "3"}).code == kExitOk);
    CHECK(invoke({"witness", "--dc", "1,1,1,1"}).code == kExitTrivial);
    CHECK(invoke({"oracle", "--dc", "1,1,2,3", "--samples", "3"}).code == kExitOk);
    CHECK(invoke({"polys", "--word", "x", "--lambda", "0", "--mu", "1"}).code == kExitInput);
  }

  TEST_CASE("parse errors report the position") {
    const Result r = invoke({"verify", "--word", "x^"});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("position 2") != std::string::npos);
  }

  TEST_CASE("json output is deterministic") {
    const Result a = invoke({"certify", "--dc", "1,2,3,1", "--seed", "3", "--json"});
    const Result b = invoke({"certify", "--dc", "1,2,3,1", "--seed", "3", "--json"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const Certificate c = certificate_from_json(Json::parse(a.out));
    CHECK(c.certified());
    CHECK(check_certificate(c).all());

    const Result g1 = invoke({"certify", "--grid", "1:2,1,1:2,-1:1", "--json", "--threads", "1"});
    const Result g4 = invoke({"certify", "--grid", "1:2,1,1:2,-1:1", "--json", "--threads", "4"});
    CHECK(g1.out == g4.out);
    const Json j = Json::parse(g1.out);
    CHECK(j["results"].size() == 12);
    CHECK(j["rejected"] == 0);
    CHECK(j["summary"]["Inconclusive"] == 0);
  }

  TEST_CASE("polys for the commutator") {
    const Result r = invoke({"polys", "--word", "[x,y]", "--json"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    const TPoly tr = tpoly_from_json(j["trace"]);
    CHECK(tr == trace_poly(assoc_polys(parse_word("[x,y]"))));
    CHECK(tr.degree() == 2);
    CHECK(tr.coeff(0) == LaurentPoly(2));

    const Result dc = invoke({"polys", "--dc", "1,1,2,3", "--json"});
    REQUIRE(dc.code == kExitOk);
    CHECK(tpoly_from_json(Json::parse(dc.out)["tau"]).degree() == 3);
  }
}
