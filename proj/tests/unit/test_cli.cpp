#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "forklab/cli.hpp"

using namespace forklab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "forklab");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("margin") {
  CHECK(run({"margin", "--w", "hAh", "--split", "1"}).out == "rho=0\tmu=0\n");
  const Run r = run({"margin", "--w", "hA", "--split", "1", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "rho=1\tmu=1\toracle_rho=1\toracle_mu=1\n");
}

TEST_CASE("catalan rows") {
  const auto l = lines(run({"catalan", "--w", "hh"}).out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "slot\tsymbol\tleft_catalan\tright_catalan\tcatalan");
  CHECK(l[1] == "1\th\t1\t1\t1");
  CHECK(l[2] == "2\th\t1\t1\t1");
}

TEST_CASE("uvp, settlement and common prefix queries") {
  CHECK(lines(run({"uvp", "--w", "hAh", "--slot", "1", "--both"}).out).at(1) == "1\t0\t0");
  CHECK(lines(run({"uvp", "--w", "hhA", "--slot", "1"}).out).at(1) == "1\t1");
  CHECK(lines(run({"settled", "--w", "hAh", "--slot", "1", "--k", "1", "--both"}).out).at(1) == "1\t1\t0\t0");
  CHECK(lines(run({"cp", "--w", "hAhA", "--k", "1"}).out).at(0) == "k\tslot_cp_violated\tuvp_cover");
}

TEST_CASE("published table cell") {
  const Run r = run({"table", "--alphas", "0.3", "--ratios", "1.0", "--ks", "100"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(1) == "1\t100\t8.00E-04");
  CHECK(run({"settle", "--alpha", "0.4", "--ph", "0.6", "--k", "100"}).out == "1.37E-01\n");
}

TEST_CASE("adversary fork round trip") {
  const std::string path = "forklab_cli_test.fork";
  const Run r = run({"adversary", "--w", "hAHAh", "--emit-fork", path, "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("canonical=ok") != std::string::npos);
  CHECK(lines(r.out).at(0) == "split\trho\tmu");
  CHECK(run({"validate", "--fork", path}).out == "valid\n");
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(run({"validate", "--fork", "-"}, text.str()).out == "valid\n");
  std::remove(path.c_str());

  // Without a file the fork goes to stdout and the rows become comments.
  const Run inline_fork = run({"adversary", "--w", "hA"});
  CHECK(lines(inline_fork.out).at(0) == "w=hA");
  CHECK(inline_fork.out.find("# split\trho\tmu") != std::string::npos);
}

TEST_CASE("validation failures") {
  const Run bad = run({"validate", "--fork", std::string(FORKLAB_TEST_DATA) + "/f4_violation.fork"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("invalid\t", 0) == 0);
  CHECK(bad.out.find("F4") != std::string::npos);
}

TEST_CASE("reduction and delay commands") {
  const auto l = lines(run({"reduce", "--w", "hh_", "--delta", "1", "--show-pi"}).out);
  REQUIRE(l.size() >= 3);
  CHECK(l[0] == "Ah");
  CHECK(run({"reduce", "--w", "h_h", "--delta", "1"}).out == "hA\n");
  CHECK(run({"settle-delta", "--check-condition", "--pa", "0.3", "--f", "1", "--eps", "0.4", "--delta", "0"}).out.rfind(
            "condition=1\t", 0) == 0);
  CHECK(run({"settle-delta", "--w", "hhhh", "--slot", "1", "--k", "1", "--delta", "1"}).out == "settled=0\n");
}

TEST_CASE("bounds and simulation") {
  const Run b = run({"bound", "--kind", "unique-catalan", "--eps", "0.4", "--k", "20"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("bound=", 0) == 0);
  CHECK(b.out.find("\tremainder=") != std::string::npos);

  const Run s = run({"simulate", "--mode", "settlement", "--alpha", "0.4", "--ph", "0.6", "--k", "100", "--samples",
                     "20000", "--seed", "1"});
  CHECK(s.code == 0);
  const auto l = lines(s.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "estimate\tstderr\thorizon_error\thits\tsamples\tcomparison");
  CHECK(l[1].find("\t20000\t1.37E-01") != std::string::npos);
  // Same seed, same output.
  CHECK(run({"simulate", "--mode", "settlement", "--alpha", "0.4", "--ph", "0.6", "--k", "100", "--samples", "20000",
             "--seed", "1"})
            .out == s.out);

  const Run rare = run({"simulate", "--mode", "settlement", "--alpha", "0.05", "--ph", "0.9", "--k", "200",
                        "--samples", "1000"});
  CHECK(lines(rare.out).at(1).rfind("insufficient samples\t", 0) == 0);
}

TEST_CASE("exit codes") {
  const Run domain = run({"margin", "--w", "hQ", "--split", "1"});
  CHECK(domain.code == 1);
  CHECK_FALSE(domain.err.empty());
  CHECK(domain.out.empty());
  CHECK(run({"settle", "--alpha", "0.7", "--ph", "0.1", "--k", "10"}).code == 1);

  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"margin", "--w", "hA"}).code == 2);
  CHECK(run({"bound", "--kind", "unique", "--eps", "0.4", "--k", "5"}).code == 2);

  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);
  CHECK(run({"--version"}).code == 0);
}
