#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(COXKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(COXKIT_DATA) + "/" + name; }

}  // namespace

TEST_CASE("cli: arithmetic") {
  CHECK(run("mult " + data("s3.json") + " \"s t\" s").out == "s t s\n");
  CHECK(run("inv " + data("s3.json") + " \"s t\"").out == "t s\n");
  CHECK(run("bruhat " + data("s3.json") + " s \"s t\"").out == "true\n");
  CHECK(run("interval " + data("s3.json") + " e \"s t\"").out == "e\ns\nt\ns t\n");
  CHECK(run("proj " + data("s3.json") + " \"s t s\" --J s").out == "s t\n");
  CHECK(run("proj " + data("s3.json") + " \"s t\" --J s --side left").out == "t\n");
}

TEST_CASE("cli: commute") {
  CHECK(run("commute " + data("s4.json") + " --I s1 --J s3").out == "true\n");
  const Result r = run("commute " + data("s4.json") + " --I s1 --J s2");
  CHECK(r.out.rfind("false\nwitness: ", 0) == 0);
}

TEST_CASE("cli: monoid") {
  const Result m = run("monoid matrix " + data("s3.json") + " --J s --format csv");
  CHECK(m.code == 0);
  CHECK(m.out == "e,s,t,s t,t s,s t s\n1,1,0,0,0,0\n0,0,0,0,0,0\n0,0,1,0,1,0\n0,0,0,1,0,1\n0,0,0,0,0,0\n0,0,0,0,0,0\n");
  CHECK(run("monoid mul " + data("s3.json") + " \"P[s t]\" \"P[s]\"").out == "(1)*P[s t s]\n");
  CHECK(run("monoid matrix " + data("free2.json") + " --word a").code == 2);
  CHECK(run("monoid matrix " + data("free2.json") + " --word a --ball 2").code == 0);
}

TEST_CASE("cli: graphs") {
  const Result g = run("graph " + data("s4.json") + " --k 4 --format dot");
  CHECK(g.code == 0);
  CHECK(g.out.find("--") == std::string::npos);
  std::size_t nodes = 0;
  for (std::size_t p = g.out.find("\";"); p != std::string::npos; p = g.out.find("\";", p + 1)) ++nodes;
  CHECK(nodes == 6);
  const Result a = run("labeled-graph " + data("path3.json") + " --kmax 4 --cutoff 5 --format json --threads 1");
  const Result b = run("labeled-graph " + data("path3.json") + " --kmax 4 --cutoff 5 --format json --threads 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: hecke and artin") {
  CHECK(run("hecke mul " + data("s3.json") + " s s").out == "(q)*T[e] + (q - 1)*T[s]\n");
  CHECK(run("hecke image " + data("free2.json") + " a --x q").out == "(q)*P[e] + (-q - 1)*P[a]\n");
  CHECK(run("hecke image " + data("free2.json") + " a^-1 --x q").out == "(q^-1)*P[e] + (-1 - q^-1)*P[a]\n");
  CHECK(run("artin nf " + data("raag3.json") + " \"a b^2 a\"").out == "a^2 b^2\n");
  const Result scan = run("artin scan " + data("free2.json") + " --max-syllables 2 --max-exp 2 --t 2 --x q --report json");
  CHECK(scan.code == 0);
  CHECK(scan.out.find("\"nontrivial\": 40") != std::string::npos);
  CHECK(run("artin scan " + data("free2.json") + " --t 1").code == 2);
  CHECK(run("artin nf " + data("s3.json") + " s").code == 2);
}

TEST_CASE("cli: verify and exit codes") {
  CHECK(run("verify " + data("s4.json") + " --suite all").code == 0);
  CHECK(run("verify " + data("s3.json") + " --suite lemma-pu --format json").out.find("\"ok\": true") != std::string::npos);
  CHECK(run("verify " + data("s3.json") + " --suite bogus").code == 2);
  CHECK(run("mult " + data("missing.json") + " s s").code == 2);
  CHECK(run("mult " + data("s3.json") + " s").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("monoid matrix " + data("free2.json") + " --word a --ball 6 --cap 5").code == 3);
}
