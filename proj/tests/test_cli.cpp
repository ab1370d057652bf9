#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "convpoly/cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "convpoly");
  std::ostringstream out, err;
  const int code = convpoly::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::string spaced(std::string s) {
  for (auto& c : s)
    if (c == '\t') c = ' ';
  return s;
}

}  // namespace

TEST_CASE("triangle subcommand") {
  const Run a = run({"triangle", "--family", "stirling2", "-N", "5", "--format", "tsv"});
  CHECK(a.code == 0);
  CHECK(spaced(last_line(a.out)) == "1 15 25 10 1");
  const Run b = run({"triangle", "--f", "1,1,1,1,1", "-N", "5"});
  CHECK(b.out == a.out);
  CHECK(run({"triangle", "--family", "stirling2", "-N", "0"}).code == 2);
  CHECK(run({"triangle", "--family", "nope", "-N", "4"}).code == 2);
  CHECK(run({"triangle", "-N", "4"}).code == 2);
  CHECK(run({"triangle", "--family", "tree", "--f", "1,2", "-N", "4"}).code == 2);
  const Run j = run({"--format", "json", "triangle", "--family", "lah", "-N", "2"});
  CHECK(j.out == "{\"n_max\":2,\"rows\":[[\"1\"],[\"2\",\"1\"]]}\n");
}

TEST_CASE("iterate subcommand") {
  const Run a = run({"iterate", "--family", "exp-minus-one", "-q", "1/2", "-N", "6"});
  CHECK(a.code == 0);
  CHECK(spaced(a.out) == "0 1 1/4 1/48 0 1/3840 -7/92160\n");
  const Run b = run({"iterate", "--family", "log-geometric", "-q", "-1", "-N", "6", "--check"});
  CHECK(b.code == 0);
  CHECK(last_line(b.out) == "PASS");
  const Run c = run({"iterate", "--f", "0,1", "-q", "1/2"});
  CHECK(c.code == 2);
  CHECK(c.err.find("f_1 = 1") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const Run a = run({"verify", "convolution", "--family", "tree", "-N", "8", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("PASS", 0) == 0);
  CHECK(run({"verify", "convolution", "--family", "tree", "-N", "8", "--seed", "42"}).out == a.out);
  CHECK(run({"verify", "rothe", "-n", "6", "--seed", "7"}).code == 0);
  const Run t = run({"verify", "convolution", "--f", "0,1,1", "--tamper"});
  CHECK(t.code == 1);
  CHECK(t.out.rfind("FAIL", 0) == 0);
  const Run all = run({"verify", "all", "-N", "5"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "bogus"}).code == 2);
}

TEST_CASE("asymp subcommand") {
  const Run a = run({"--format", "json", "asymp", "--family", "tree", "-n", "10", "-x", "100"});
  CHECK(a.code == 0);
  CHECK(a.out.find("\"ratio\":0.9090909") != std::string::npos);
  const Run b = run({"asymp", "--family", "exp", "-n", "10", "-x", "50"});
  CHECK(b.code == 0);
  CHECK(b.out.find("\t1\t1\n") != std::string::npos);
  const Run c = run({"asymp", "--family", "tree", "-n", "10,20", "-x", "100,200"});
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 5);
  const Run w = run({"asymp", "--family", "tree", "-n", "10", "-x", "12"});
  CHECK(w.code == 0);
  CHECK(w.err.find("warning") != std::string::npos);
}

TEST_CASE("remaining subcommands") {
  const Run f = run({"family", "--family", "binomial", "-N", "2"});
  CHECK(f.out == "0\t1\n1\tx\n2\t1/2*x^2 - 1/2*x\n");
  const Run c = run({"compose", "--family", "exp-minus-one", "--outer", "stirling1", "-N", "4"});
  CHECK(spaced(last_line(c.out)) == "26 36 12 1");
  CHECK(run({"compose", "--family", "tree", "-N", "3"}).code == 2);
  const Run r = run({"revert", "--family", "tree", "-N", "4", "--check"});
  CHECK(r.code == 0);
  CHECK(spaced(r.out) == "0 1 -1 1/2 -1/6\nPASS\n");
  const Run e = run({"extend", "--family", "exp-minus-one", "-N", "1"});
  CHECK(e.out == "0\t1\n1\t1/2*y^2 - 1/2*y\n");
  const Run s = run({"sigma", "-N", "2"});
  CHECK(s.out == "1\t1/2\n2\t1/8*x - 1/24\n");
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
}
