#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "aqpath/construct.hpp"
#include "aqpath/oracle.hpp"
#include "aqpath/verify.hpp"
#include "doctest.h"

using namespace aqpath;

namespace {

Vertex b(const char* s) {
  Vertex v = 0;
  for (; *s; ++s) v = (v << 1) | static_cast<Vertex>(*s - '0');
  return v;
}

const std::set<std::string> kLeaves = {"L8.1", "L8.2", "L8.3.1", "L8.3.2",
                                       "T1.2.1", "T1.2.2", "T1.3", "C.2"};

bool is_terminal(const Triple& d, Vertex v) {
  return std::find(d.begin(), d.end(), v) != d.end();
}

// Verifier verdict, count, orientation and trace shape.
void certify(const CubeView& g, int n, const Triple& d, const DPathFamily& f) {
  const auto v = check_family(g, d, f.paths);
  INFO(format_triple(g.cube(), d) << " " << render(v));
  REQUIRE(accepted(v));
  REQUIRE(static_cast<int>(f.paths.size()) == target_count(n));
  for (const auto& p : f.paths) {
    REQUIRE(is_terminal(d, p.front()));
    REQUIRE(is_terminal(d, p.back()));
    REQUIRE(p.front() < p.back());
  }
  REQUIRE(!f.trace.empty());
  REQUIRE(f.trace.front().dimension == n);
  for (std::size_t i = 1; i < f.trace.size(); ++i) {
    const int step = f.trace[i - 1].dimension - f.trace[i].dimension;
    const auto& parent = f.trace[i - 1].label;
    REQUIRE(((step == 2 && parent.rfind("T1.1", 0) == 0) ||
             (step == 1 && parent == "C.1")));
  }
  const auto& last = f.trace.back();
  REQUIRE((kLeaves.count(last.label) || last.fallback));
  REQUIRE(static_cast<int>(f.trace.size()) <= (n - 4 + 1) / 2 + 1);
}

struct Tally {
  int triples = 0;
  int fallbacks = 0;
};

Tally sweep_pinned(int n, bool pin) {
  const AugmentedCube cube(n);
  const auto g = CubeView::whole(cube);
  const Vertex size = Vertex{1} << n;
  Tally t;
  for (Vertex x = 0; x < (pin ? 1U : size); ++x) {
    for (Vertex y = x + 1; y < size; ++y) {
      for (Vertex z = y + 1; z < size; ++z) {
        const Triple d{x, y, z};
        const auto f = construct(n, d);
        certify(g, n, d, f);
        ++t.triples;
        t.fallbacks += f.fallback();
      }
    }
  }
  return t;
}

std::set<Vertex> interior(const Path& p, const Triple& d) {
  std::set<Vertex> out;
  for (Vertex v : p) {
    if (!is_terminal(d, v)) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("target_count") {
  CHECK(target_count(4) == 4);
  CHECK(target_count(5) == 5);
  CHECK(target_count(6) == 7);
  CHECK(target_count(7) == 8);
  CHECK(target_count(64) == 94);
  CHECK_THROWS_AS(target_count(3), InvalidArgument);
}

TEST_CASE("single quadrant of AQ_4 uses the explicit family") {
  const Triple d{b("0000"), b("0010"), b("0001")};
  const auto f = construct(4, d);
  certify(CubeView::whole(AugmentedCube(4)), 4, d, f);
  REQUIRE(f.trace.size() == 1);
  CHECK(f.trace[0].label == "L8.1");
  CHECK_FALSE(f.fallback());
  std::vector<std::set<Vertex>> inner;
  for (const auto& p : f.paths) inner.push_back(interior(p, d));
  CHECK(inner[0].empty());
  CHECK(inner[1] == std::set<Vertex>{b("0011")});
  CHECK(inner[2] == std::set<Vertex>{b("0100"), b("0110"), b("0101")});
  CHECK(inner[3] ==
        std::set<Vertex>{b("1010"), b("1000"), b("1111"), b("1110")});
  CHECK(f.paths[0] == Path{b("0001"), b("0000"), b("0010")});

  const auto g = construct_base4(d);
  CHECK(g.paths == f.paths);
}

TEST_CASE("case builders reject bad input") {
  CHECK_THROWS_AS(construct(3, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(construct(4, {0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(construct(4, {0, 1, 16}), InvalidArgument);
  CHECK_THROWS_AS(construct_base4({b("0001"), b("0000"), b("0010")}),
                  InvalidArgument);
  CHECK_THROWS_AS(construct_base4({b("0000"), b("0100"), b("0001")}),
                  InvalidArgument);
  CHECK_THROWS_AS(construct_even(5, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(construct_odd(6, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(construct_odd(3, {0, 1, 2}), InvalidArgument);
  CHECK(construct_odd(5, {0, 1, 2}).paths.size() == 5);
  CHECK(construct_even(6, {0, 1, 2}).paths.size() == 7);
}

TEST_CASE("case labels at n = 4") {
  CHECK(construct(4, {b("0000"), b("0001"), b("0100")}).trace[0].label ==
        "L8.2");
  CHECK(construct(4, {b("0000"), b("0111"), b("1000")}).trace[0].label ==
        "L8.3.1");
  CHECK(construct(4, {b("0000"), b("0001"), b("1000")}).trace[0].label ==
        "L8.3.2");
}

TEST_CASE("case labels and recursion at n = 6 and 7") {
  const auto g6 = CubeView::whole(AugmentedCube(6));
  const Triple same{b("000000"), b("001111"), b("000001")};
  const auto f = construct(6, same);
  certify(g6, 6, same, f);
  REQUIRE(f.trace.size() == 2);
  CHECK(f.trace[0].label == "T1.1.1");
  CHECK(f.trace[1].dimension == 4);
  CHECK(f.trace[1].label.rfind("L8.", 0) == 0);

  const Triple plain{b("000000"), b("000010"), b("000101")};
  CHECK(construct(6, plain).trace[0].label == "T1.1.2");

  const Triple split{b("000000"), b("000001"), b("011111")};
  const auto s = construct(6, split);
  certify(g6, 6, split, s);
  CHECK(s.trace[0].label == "T1.2.1");
  CHECK(construct(6, {b("000000"), b("000001"), b("010000")}).trace[0].label ==
        "T1.2.2");
  CHECK(construct(6, {b("000000"), b("000001"), b("100000")}).trace[0].label ==
        "T1.3");

  const auto g7 = CubeView::whole(AugmentedCube(7));
  const Triple half{b("0000000"), b("0100000"), b("0011000")};
  const auto h = construct(7, half);
  certify(g7, 7, half, h);
  CHECK(h.trace[0].label == "C.1");
  CHECK(h.trace[1].dimension == 6);
  CHECK(construct(7, {b("0000000"), b("0000001"), b("1000000")})
            .trace[0]
            .label == "C.2");
}

TEST_CASE("every triple of AQ_4 and AQ_5") {
  const auto t4 = sweep_pinned(4, false);
  CHECK(t4.triples == 560);
  CHECK(t4.fallbacks == 0);
  const auto t5 = sweep_pinned(5, false);
  CHECK(t5.triples == 4960);
  CHECK(t5.fallbacks == 0);
}

TEST_CASE("every pinned triple of AQ_6, fallbacks below 1%") {
  const auto t = sweep_pinned(6, true);
  CHECK(t.triples == 1953);
  MESSAGE("AQ_6 fallbacks: " << t.fallbacks << " of " << t.triples);
  CHECK(t.fallbacks * 100 < t.triples);
}

TEST_CASE("10000 seeded random triples of AQ_7") {
  const AugmentedCube cube(7);
  const auto g = CubeView::whole(cube);
  std::mt19937_64 rng(777);
  int fallbacks = 0;
  for (int i = 0; i < 10000;) {
    const Triple d{static_cast<Vertex>(rng() % 128),
                   static_cast<Vertex>(rng() % 128),
                   static_cast<Vertex>(rng() % 128)};
    if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) continue;
    ++i;
    const auto f = construct(7, d);
    certify(g, 7, d, f);
    fallbacks += f.fallback();
  }
  MESSAGE("AQ_7 fallbacks: " << fallbacks << " of 10000");
}

TEST_CASE("transform soundness on 300 random triples of AQ_6 and AQ_8") {
  std::mt19937_64 rng(31337);
  for (int n : {6, 8}) {
    const AugmentedCube cube(n);
    const auto g = CubeView::whole(cube);
    const Vertex size = Vertex{1} << n;
    for (int i = 0; i < 150;) {
      const Triple d{static_cast<Vertex>(rng() % size),
                     static_cast<Vertex>(rng() % size),
                     static_cast<Vertex>(rng() % size)};
      if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) continue;
      ++i;
      const auto canon = canonicalize_triple(cube, d);
      const auto direct = construct(n, d);
      const auto moved = construct(n, canon.canonical);
      CHECK(direct.paths.size() == moved.paths.size());
      PathSet back = moved.paths;
      for (auto& p : back) {
        for (auto& v : p) v = canon.pull_back(v);
      }
      CHECK(render(check_family(g, d, back)) ==
            render(check_family(g, d, direct.paths)));
    }
  }
}

TEST_CASE("construction never exceeds the oracle value") {
  const auto g = CubeView::whole(AugmentedCube(5));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40;) {
    const Triple d{static_cast<Vertex>(rng() % 32),
                   static_cast<Vertex>(rng() % 32),
                   static_cast<Vertex>(rng() % 32)};
    if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) continue;
    ++i;
    const auto r = max_dpaths(g, d);
    REQUIRE(r.exact());
    CHECK(static_cast<int>(construct(5, d).paths.size()) <= r.count);
  }
}

TEST_CASE("deterministic output and family text round trip") {
  const AugmentedCube cube(8);
  const Triple d{b("10110010"), b("01100111"), b("10110001")};
  const auto a = construct(8, d);
  const auto c = construct(8, d);
  CHECK(a.paths == c.paths);
  CHECK(a.trace_lines() == c.trace_lines());

  std::stringstream text;
  write_family_text(text, cube, d, a.paths, a.trace_lines());
  const auto back = read_family_text(text, 8);
  CHECK(back.terminals == d);
  CHECK(back.paths == a.paths);
  CHECK(back.trace == a.trace_lines());
  CHECK(render(check_family(CubeView::whole(cube), d, back.paths)) == "OK 10");
}
