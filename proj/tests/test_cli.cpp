#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AQPATH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

int count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    n += line.rfind(prefix, 0) == 0;
  }
  return n;
}

std::string temp_path(const char* name) {
  return std::string(AQPATH_TMP) + "/" + name;
}

}  // namespace

TEST_CASE("bounds") {
  const auto r = run("bounds --n 6");
  CHECK(r.status == 0);
  CHECK(r.out == "BOUND 6 7\nTARGET 6 7\n");
  CHECK(run("bounds --n 3").status == 2);
}

TEST_CASE("construct prints a verified family") {
  const auto r = run("construct --n 4 --triple 0000,0010,0001 --trace");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out, "P ") == 4);
  CHECK(count_lines(r.out, "# trace: n=4 L8.1") == 1);
  CHECK(r.out.substr(r.out.size() - 5) == "OK 4\n");
  CHECK(run("construct --n 3 --triple 000,001,010").status == 2);
  CHECK(run("construct --n 4 --triple 0000,0000,0001").status == 2);
  CHECK(run("construct --n 4 --triple 0,1,2").status == 2);
}

TEST_CASE("construct output is accepted by verify") {
  const auto path = temp_path("family6.txt");
  {
    std::ofstream out(path);
    out << run("construct --n 6 --triple 010110,110000,001011").out;
  }
  const auto ok = run("verify --n 6 --family " + path);
  CHECK(ok.status == 0);
  CHECK(ok.out == "OK 7\n");

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string body = text.str();
  const auto p = body.find("\nP ");
  body.insert(p + 3, body.substr(p + 3, 7));  // repeat the first vertex
  {
    std::ofstream out(path);
    out << body;
  }
  const auto bad = run("verify --n 6 --family " + path);
  CHECK(bad.status == 1);
  CHECK(bad.out.rfind("VIOLATION NotSimple", 0) == 0);
  CHECK(run("verify --n 6 --family " + temp_path("missing.txt")).status == 2);
}

TEST_CASE("gen output is accepted by oracle") {
  const auto path = temp_path("aq3.txt");
  CHECK(run("gen --n 3 --out " + path).status == 0);
  const auto r = run("oracle --graph " + path + " --triple 000,011,101");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("ORACLE 000,011,101 2", 0) == 0);
  const auto c = run("oracle --n 4 --triple 0000,0111,1011");
  CHECK(c.out.rfind("ORACLE 0000,0111,1011 4", 0) == 0);
}

TEST_CASE("neighbors lists 2n-1 masks") {
  const auto r = run("neighbors --n 4 --v 0000");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out, "") == 7);
  CHECK(r.out.find("1111 c1\n") != std::string::npos);
}

TEST_CASE("pi3 exhaustive, sampled and guarded") {
  const auto r = run("pi3 --n 4");
  CHECK(r.status == 0);
  CHECK(r.out == "PI3 AQ_4 4 0000,0001,0010\n");
  const auto a = run("pi3 --n 5 --mode sampled --seed 11 --count 25 --jobs 2");
  const auto b = run("pi3 --n 5 --mode sampled --seed 11 --count 25");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("pi3 --n 5 --mode sampled --count 25").status == 2);
  CHECK(run("pi3 --n 7").status == 2);
}

TEST_CASE("witness and its printed variant") {
  const auto w = run("witness --n 4");
  CHECK(w.status == 0);
  CHECK(w.out.rfind("WITNESS 0000,0111,1011\nCOMMON 4", 0) == 0);
  CHECK(count_lines(w.out, "ADJ ") == 12);
  const auto p = run("witness --n 4 --printed-variant");
  CHECK(p.status == 1);
  CHECK(count_lines(p.out, "COMMON 1 ") == 1);
  CHECK(count_lines(p.out, "DEVIATION") == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("bounds").status == 2);
  CHECK(run("pi3 --n 4 --mode bogus").status == 2);
}

TEST_CASE("report on small cubes") {
  const auto r = run("report --nmax 4");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out, "PASS") == 4);
  CHECK(count_lines(r.out, "SKIP") == 6);
}
