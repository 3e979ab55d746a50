#include <random>
#include <sstream>

#include "aqpath/verify.hpp"
#include "doctest.h"

using namespace aqpath;

namespace {

Vertex b(const char* s) {
  Vertex v = 0;
  for (; *s; ++s) v = (v << 1) | static_cast<Vertex>(*s - '0');
  return v;
}

Path p(std::initializer_list<const char*> labels) {
  Path out;
  for (const char* s : labels) out.push_back(b(s));
  return out;
}

// The explicit four-path family for D = {0000, 0010, 0001} in AQ_4.
const Triple kD{b("0000"), b("0010"), b("0001")};
PathSet case1_family() {
  return {
      p({"0010", "0000", "0001"}),
      p({"0000", "0011", "0010", "0001"}),
      p({"0000", "0100", "0110", "0010", "0101", "0001"}),
      p({"0010", "1010", "1000", "0000", "1111", "1110", "0001"}),
  };
}

ViolationKind kind_of(const Verdict& v) {
  return std::get<Violation>(v).kind;
}

}  // namespace

TEST_CASE("check_family examples") {
  const auto g = CubeView::whole(AugmentedCube(4));
  const auto fam = case1_family();
  const auto ok = check_family(g, kD, fam);
  REQUIRE(accepted(ok));
  CHECK(std::get<Accept>(ok).count == 4);
  CHECK(render(ok) == "OK 4");

  auto overlap = fam;
  // 0011 is adjacent to both 0010 and 0001, so ψ3 stays a path.
  overlap[2] = p({"0000", "0100", "0110", "0010", "0011", "0001"});
  const auto v1 = check_family(g, kD, overlap);
  REQUIRE_FALSE(accepted(v1));
  CHECK(kind_of(v1) == ViolationKind::VertexOverlap);
  CHECK(render(v1) == "VIOLATION VertexOverlap paths=1,2 0011");

  auto missing = fam;
  missing[0] = p({"0010", "0000"});
  CHECK(kind_of(check_family(g, kD, missing)) ==
        ViolationKind::MissingTerminal);

  auto twice = fam;
  twice.push_back(p({"0000", "0010", "0001"}));
  twice[0] = p({"0010", "0000", "0001"});
  // 0010-0000 appears in the first and the extra path.
  CHECK(kind_of(check_family(g, kD, twice)) == ViolationKind::EdgeOverlap);

  CHECK(kind_of(check_family(g, {0, 0, 1}, fam)) == ViolationKind::WrongGraph);
  CHECK(accepted(check_family(g, kD, {})));
}

TEST_CASE("check_path examples") {
  const auto g = CubeView::whole(AugmentedCube(4));
  CHECK(accepted(check_path(g, p({"0000", "1000"}))));
  CHECK(accepted(check_path(g, p({"0000"}))));
  CHECK(kind_of(check_path(g, p({"0000", "1000", "0000"}))) ==
        ViolationKind::NotSimple);
  CHECK(kind_of(check_path(g, p({"0000", "0101"}))) ==
        ViolationKind::NotAPath);
  CHECK(kind_of(check_path(g, Path{})) == ViolationKind::NotAPath);
  CHECK(kind_of(check_path(g, Path{0, 16})) == ViolationKind::WrongGraph);
}

TEST_CASE("family text round trip") {
  const AugmentedCube q(4);
  std::ostringstream out;
  write_family_text(out, q, kD, case1_family(), {"L8.1 n=4"});
  const std::string text = out.str();
  CHECK(text.rfind("# trace: L8.1 n=4\nD 0000 0010 0001\nP 0010 0000 0001\n",
                   0) == 0);
  std::istringstream in(text);
  const auto fam = read_family_text(in, 4);
  CHECK(fam.terminals == kD);
  CHECK(fam.paths == case1_family());
  CHECK(fam.trace == std::vector<std::string>{"L8.1 n=4"});
  CHECK_FALSE(fam.wrong_graph);

  std::istringstream wide("D 00000 0010 0001\n");
  CHECK(read_family_text(wide, 4).wrong_graph.has_value());
  std::istringstream no_d("P 0000 0001\n");
  CHECK_THROWS_AS(read_family_text(no_d, 4), InvalidArgument);
  std::istringstream junk("D 0000 0010 0001\nQ 0000\n");
  CHECK_THROWS_AS(read_family_text(junk, 4), InvalidArgument);
}

// Mutations of accepted families, over every translate of the base family.
TEST_CASE("verifier fuzz soundness") {
  const AugmentedCube q(4);
  const auto g = CubeView::whole(q);
  std::mt19937 rng(1234);
  int tested = 0;
  for (int round = 0; round < 40; ++round) {
    const XorTranslation t{static_cast<Vertex>(rng() % 16)};
    PathSet fam = case1_family();
    for (auto& path : fam) {
      for (auto& v : path) v = t.apply(v);
    }
    Triple d{};
    for (std::size_t i = 0; i < 3; ++i) d[i] = t.apply(kD[i]);
    REQUIRE(accepted(check_family(g, d, fam)));
    const std::size_t i = rng() % fam.size();
    const Path& target = fam[i];

    // Drop a terminal: broken adjacency or a missing terminal.
    {
      auto m = fam;
      std::size_t k = 0;
      while (std::find(d.begin(), d.end(), m[i][k]) == d.end()) ++k;
      const bool inner = k > 0 && k + 1 < m[i].size();
      const bool bridged = inner && q.is_adjacent(m[i][k - 1], m[i][k + 1]);
      m[i].erase(m[i].begin() + static_cast<long>(k));
      const auto v = check_family(g, d, m);
      REQUIRE_FALSE(accepted(v));
      CHECK(kind_of(v) == (inner && !bridged ? ViolationKind::NotAPath
                                             : ViolationKind::MissingTerminal));
      ++tested;
    }
    // Swap two positions: whenever adjacency breaks it must say so.
    {
      auto m = fam;
      const std::size_t a = rng() % target.size();
      const std::size_t c = rng() % target.size();
      if (a != c) {
        std::swap(m[i][a], m[i][c]);
        if (!accepted(check_path(g, m[i]))) {
          CHECK(kind_of(check_family(g, d, m)) == ViolationKind::NotAPath);
          ++tested;
        }
      }
    }
    // Duplicate a path: shared interior or, failing that, shared edges.
    {
      auto m = fam;
      m.push_back(target);
      const bool has_interior = target.size() > 3;
      CHECK(kind_of(check_family(g, d, m)) ==
            (has_interior ? ViolationKind::VertexOverlap
                          : ViolationKind::EdgeOverlap));
      ++tested;
    }
    // Repeat a vertex.
    {
      auto m = fam;
      m[i].push_back(m[i][rng() % m[i].size()]);
      CHECK(kind_of(check_family(g, d, m)) == ViolationKind::NotSimple);
      ++tested;
    }
  }
  CHECK(tested >= 100);
}
