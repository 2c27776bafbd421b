#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "bifree/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bifree::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BIFREE_DATA_DIR) + "/" + name; }

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("bnc subcommands") {
  auto r = run({"bnc", "enum", "--chi", "llll", "--format", "line"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("count=14\n", 0) == 0);
  CHECK(count_lines(r.out) == 15);

  r = run({"bnc", "check", "--chi", "rlllrrlr", "--pi", "1|2 5 7|3 4|6 8"});
  CHECK(r.out == "BNC: yes\n");
  r = run({"bnc", "intervals", "--chi", "rlrrllllrr", "--eps", "p0,p0,p0,p1,p0,p1,p1,p0,p0,p0"});
  CHECK(r.out == "{2,5}\n{6,7}\n{8,9,10}\n{4}\n{1,3}\n");
  r = run({"bnc", "order", "--chi", "rlllrrlr", "--format", "line"});
  CHECK(r.out == "order=2 3 4 7 8 6 5 1\n");
  r = run({"bnc", "classify", "--chi", "rlllrrlr", "--pi", "1|2 5 7|3 4|6 8"});
  CHECK(r.out == "{1}: outer\n{2,5,7}: outer\n{3,4}: inner\n{6,8}: inner\n");
  r = run({"bnc", "mobius", "--chi", "lll", "--pi", "1|2|3"});
  CHECK(r.out == "mu = 2\n");

  CHECK(run({"bnc", "check", "--chi", "lxl", "--pi", "1|2|3"}).code == 2);
  CHECK(run({"bnc", "classify", "--chi", "llll", "--pi", "1 3|2 4"}).code == 2);
  CHECK(run({"bnc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("moment subcommand") {
  const auto semi = data("semicircular.json");
  CHECK(run({"moment", "--spec", semi, "--word", "w x y z"}).out == "phi(w x y z) = 1\n");
  CHECK(run({"moment", "--spec", semi, "--word", "x y z w", "--format", "line"}).out == "value=0\n");
  CHECK(run({"moment", "--spec", semi, "--word", "w x y z", "--mode", "vaccine", "--seed", "3"}).out ==
        "phi(w x y z) = 1\n");
  const auto r = run({"moment", "--spec", semi, "--word", "w x", "--mode", "vaccine", "--format", "line"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--seed") != std::string::npos);

  const auto cond = data("conditional.json");
  CHECK(run({"moment", "--spec", cond, "--word", "a b", "--mode", "conditional"}).out == "theta(a b) = -1\n");
  CHECK(run({"moment", "--spec", semi, "--word", "x q"}).code == 2);
  const auto missing = run({"moment", "--spec", data("moments.json"), "--word", "x x x"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("x x x") != std::string::npos);
  CHECK(run({"moment", "--spec", semi, "--word", "x", "--mode", "nope"}).code == 2);
}

TEST_CASE("check subcommand exit codes") {
  const auto semi = data("semicircular.json");
  const auto bad = data("perturbed.json");
  CHECK(run({"check", "--spec", semi, "--method", "cumulants", "--max-len", "4"}).code == 0);
  CHECK(run({"check", "--spec", bad, "--method", "cumulants", "--max-len", "4"}).code == 1);
  CHECK(run({"check", "--spec", semi, "--method", "taur", "--pair", "p1", "--max-len", "4"}).code == 0);
  CHECK(run({"check", "--spec", bad, "--method", "taur", "--max-len", "3"}).code == 1);
  CHECK(run({"check", "--spec", semi, "--method", "liberation", "--max-len", "3"}).code == 0);

  const std::vector<std::string> vaccine{"check", "--spec", bad, "--method", "vaccine", "--trials", "100",
                                         "--seed", "7", "--format", "line"};
  const auto first = run(vaccine);
  CHECK(first.code == 1);
  CHECK(first.out.rfind("COUNTEREXAMPLE word=[", 0) == 0);
  CHECK(run(vaccine).out == first.out);
  CHECK(run({"check", "--spec", semi, "--method", "vaccine", "--trials", "30", "--seed", "7"}).code == 0);

  CHECK(run({"check", "--spec", semi, "--method", "magic"}).code == 2);
  CHECK(run({"check", "--spec", semi, "--method", "taur", "--max-len", "9"}).code == 2);
}

TEST_CASE("ubm, taur and liberate subcommands") {
  CHECK(run({"ubm", "--n", "2"}).out == "(1 - t) * exp(-t)\n");
  CHECK(run({"ubm", "--n", "2", "--t", "1", "--format", "line"}).out == "value=0\n");
  CHECK(run({"ubm", "--n", "1", "--t", "-1"}).code == 2);

  const auto t = run({"taur", "--spec", data("interval_word.json"), "--word", "z1 z2 z3 z4 z5 z6 z7 z8 z9 z10",
                      "--pair", "p1", "--format", "line"});
  CHECK(t.code == 0);
  CHECK(count_lines(t.out) == 8);
  CHECK(t.out.find("-2 · [z1 z2 z3 z4 z5 z6 z7 z8 z9 z10] ⊗ []\n") != std::string::npos);
  CHECK(t.out.find("value=0\n") != std::string::npos);

  const auto l = run({"liberate", "--spec", data("semicircular.json"), "--word", "x y", "--pair", "p1"});
  CHECK(l.code == 0);
  CHECK(l.out == "c0=0, c1=0, taur=0, MATCH\n");
  CHECK(run({"liberate", "--spec", data("semicircular.json"), "--word", "x y", "--pair", "p9"}).code == 2);
}
