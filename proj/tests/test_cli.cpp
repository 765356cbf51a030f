#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quadsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

using nlohmann::json;
using namespace quadsg::cli;

TEST_CASE("mu") {
  CHECK(run({"mu", "--n", "26"}).out == "13\n");
  CHECK(run({"mu", "--n", "26", "--oracle"}).out == "13\n");
  CHECK(json::parse(run({"mu", "--n", "5", "--format", "json"}).out)["mu"] == 7);
  const auto dump = run({"mu", "--n-max", "4"});
  CHECK(dump.out == "n,mu\n0,0\n1,2\n2,4\n3,3\n4,5\n");
  CHECK(run({"mu"}).code == kExitDomain);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "--n-max", "3"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "n,mu,lower,gauss,combined");
  CHECK(run({"bounds"}).out.size() > 2000 * 10);
}

TEST_CASE("semigroup") {
  const auto doc = json::parse(run({"semigroup", "--a", "3", "--b", "1", "--k", "3"}).out);
  CHECK(doc["generators"] == json::array({0, 3, 7, 12}));
  CHECK(doc["trivial"] == false);
  CHECK(json::parse(run({"semigroup", "--a", "1", "--b", "7"}).out)["trivial"] == true);

  const auto bad = run({"semigroup", "--a", "4", "--b", "2"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("gcd(a,b) must be 1") != std::string::npos);
}

TEST_CASE("apery, frobenius, genus") {
  CHECK(run({"apery", "--a", "3", "--b", "1"}).out == "0 7 14\n");
  CHECK(run({"apery", "--a", "3", "--b", "1", "--oracle"}).out == "0 7 14\n");
  CHECK(run({"frobenius", "--a", "2", "--b", "1"}).out == "3\n");
  CHECK(run({"frobenius", "--a", "3", "--b", "1", "--oracle"}).out == "11\n");
  CHECK(run({"genus", "--a", "2", "--b", "3"}).out == "3\n");
  CHECK(json::parse(run({"genus", "--a", "3", "--b", "1", "--format", "json"}).out)["genus"] == 6);
  CHECK(run({"frobenius", "--a", "6", "--b", "4"}).code == kExitDomain);
}

TEST_CASE("invariants") {
  const auto doc = json::parse(run({"invariants", "--a", "2", "--b", "1"}).out);
  CHECK(doc["frobenius"] == 3);
  CHECK(doc["genus"] == 2);
  CHECK(doc["frobenius_bounds"]["lower"].get<double>() == doctest::Approx(3.0));
  const auto sweep = run({"invariants", "--a-max", "5", "--b-max", "2"});
  CHECK(first_line(sweep.out) == "a,b,frobenius,genus,F_lo,F_hi,g_lo,g_hi");
  CHECK(run({"invariants"}).code == kExitUsage);
}

TEST_CASE("embedding") {
  const auto doc = json::parse(run({"embedding", "--a", "29", "--b", "1", "--format", "json"}).out);
  CHECK(doc["dimension"] == 9);
  CHECK(doc["indices"].back() == 11);
  const auto oracle = json::parse(run({"embedding", "--a", "29", "--b", "1", "--oracle", "--format", "json"}).out);
  CHECK(oracle["indices"] == doc["indices"]);
  const auto cert = run({"embedding", "--certify"});
  CHECK(cert.code == kExitOk);
  CHECK(cert.out.find("FAIL") == std::string::npos);
}

TEST_CASE("search") {
  const auto drop = run({"search", "mu-drop"});
  CHECK(drop.code == kExitOk);
  CHECK(first_line(drop.out) == "a,n,mu_n,mu_n_plus_a,drop");
  CHECK(std::count(drop.out.begin(), drop.out.end(), '\n') == 9);
  const auto eq = run({"search", "embedding-eq", "--format", "json", "--threads", "2"});
  const auto doc = json::parse(eq.out);
  CHECK(doc["hits"].size() == 30);
  CHECK(doc["a_max"] == 655);
  const auto raw = run({"search", "embedding-eq", "--raw"});
  CHECK(raw.err.find("0 outside") != std::string::npos);
  CHECK(run({"search", "nonsense"}).code == kExitUsage);
  CHECK(run({"search", "mu-drop", "--a-max", "3"}).code == kExitDomain);
}

TEST_CASE("g-analysis") {
  const auto doc = json::parse(run({"g-analysis", "--format", "json"}).out);
  CHECK(doc["local_max_location"].get<double>() == doctest::Approx(52.15).epsilon(0.001));
  const auto csv = run({"g-analysis", "--format", "csv", "--step", "1"});
  CHECK(first_line(csv.out) == "a,g");
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 1 + 999);
}

TEST_CASE("certify and tgrid") {
  const auto all = run({"certify", "--all"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("certify: PASS") != std::string::npos);
  CHECK(all.out.find("FAIL ") == std::string::npos);

  const auto grid = run({"tgrid", "--m-max", "3", "--n-max", "2"});
  CHECK(grid.out == "m,n,in_T\n0,0,true\n1,0,true\n2,0,true\n0,1,false\n1,1,false\n2,1,true\n");
  CHECK(run({"tgrid", "--m-max", "501"}).code == kExitDomain);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobenius", "--a", "x", "--b", "1"}).code == kExitUsage);
  CHECK(run({"frobenius", "--a", "3"}).code == kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("certify") != std::string::npos);
}
