#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rcurv/cli.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"

using namespace rcurv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "rcurv");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = RCURV_TEST_DATA;

}  // namespace

TEST_CASE("parse_input") {
  CliOptions o;
  o.family = "J 5 2";
  CHECK(are_isomorphic(parse_input(o), johnson(5, 2)));
  o.family = "( CP 3 x K 2 )";
  CHECK(are_isomorphic(parse_input(o), cartesian_product(cocktail_party(3), complete_graph(2))));
  CliOptions f;
  f.file = kData + "/k2.txt";
  Graph k2 = parse_input(f);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  f.family = "K 2";
  CHECK_THROWS_AS(parse_input(f), InputError);
  CHECK_THROWS_AS(parse_input(CliOptions{}), InputError);
}

TEST_CASE("classify command") {
  Run r = cli({"classify", "--family", "gosset", "--json"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["eff_bm_sharp"] == true);
  CHECK(j["kappa_min"]["num"] == 18);
  CHECK(j["diam_eff"]["num"] == 3);
  CHECK(j["diam_eff"]["den"] == 2);
  CHECK(j["prime_factors"][0]["family"] == "Gosset");
  // Byte-identical on a rerun.
  CHECK(cli({"classify", "--family", "gosset", "--json"}).out == r.out);
}

TEST_CASE("exit codes") {
  Run r = cli({"reflective", "--family", "C 5"});
  CHECK(r.code == kExitPropertyFailed);
  CHECK(r.out.find("edge") != std::string::npos);
  CHECK(cli({"reflective", "--family", "J 6 3"}).code == kExitOk);
  CHECK(cli({"info", "--family", "J 5"}).code == kExitInputError);
  CHECK(cli({"info", "--family", "Q 3", "--file", "x"}).code == kExitInputError);
  CHECK(cli({"info"}).code == kExitInputError);
  CHECK(cli({"nonsense", "--family", "Q 3"}).code == kExitInputError);
  CHECK(cli({"info", "--file", (kData + "/duplicate.txt").c_str()}).code == kExitInputError);
  CHECK(cli({"info", "--file", (kData + "/missing.txt").c_str()}).code == kExitInputError);
  CHECK(cli({"curvature", "--family", "Q 3", "--tol", "0"}).code == kExitInputError);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("every command runs") {
  for (const char* c : {"info", "curvature", "effective-diameter", "reflective", "spectrum", "factorize", "bakry-emery",
                        "classify"}) {
    CAPTURE(c);
    Run text = cli({c, "--family", "( K 2 x J 4 2 )"});
    CHECK(text.code == kExitOk);
    CHECK_FALSE(text.out.empty());
    Run json = cli({c, "--family", "( K 2 x J 4 2 )", "--json"});
    CHECK(json.code == kExitOk);
    CHECK(nlohmann::json::accept(json.out));
  }
}

TEST_CASE("command details") {
  auto j = nlohmann::json::parse(cli({"effective-diameter", "--family", "schlafli", "--json"}).out);
  CHECK(j["diam_eff"]["num"] == 4);
  CHECK(j["diam_eff"]["den"] == 3);
  CHECK(j["eff_bm_sharp"] == true);
  j = nlohmann::json::parse(cli({"factorize", "--family", "Q 3", "--json"}).out);
  CHECK(j["factors"].size() == 3);
  CHECK(j["factors"][0]["family"] == "K2");
  j = nlohmann::json::parse(cli({"curvature", "--family", "C 6", "--json"}).out);
  CHECK(j["kappa_min"]["num"] == 0);
  CHECK(j["oracle_agrees"] == true);
  CHECK(j["oracle_checked"] == 6);
  j = nlohmann::json::parse(cli({"curvature", "--family", "C 6", "--json", "--max-lp-support", "3"}).out);
  CHECK(j["oracle_checked"] == 0);
  j = nlohmann::json::parse(cli({"bakry-emery", "--family", "Q 3", "--json"}).out);
  CHECK(j["hypercube"] == true);
  CHECK(j["bound"]["equality"] == true);
  j = nlohmann::json::parse(cli({"spectrum", "--family", "J 6 2", "--json"}).out);
  CHECK(j["lichnerowicz_sharp"] == true);
  CHECK(j["theta"]["holds"] == true);
}

TEST_CASE("verify-theorems on small corpora") {
  Run r = cli({"verify-theorems", "--corpus", (kData + "/small_corpus.txt").c_str()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("C 5") != std::string::npos);
  CHECK(r.out.find("@k2.txt") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(cli({"verify-theorems", "--corpus", (kData + "/missing.txt").c_str()}).code == kExitInputError);
}
