#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "aqpath/cube.hpp"
#include "aqpath/flow.hpp"
#include "aqpath/graph.hpp"
#include "doctest.h"

using namespace aqpath;

namespace {

Vertex b(const char* s) {
  Vertex v = 0;
  for (; *s; ++s) v = (v << 1) | static_cast<Vertex>(*s - '0');
  return v;
}

std::set<Vertex> as_set(const std::vector<Vertex>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("make_cube sizes") {
  CHECK_THROWS_AS(AugmentedCube(0), InvalidArgument);
  const AugmentedCube q1(1), q2(2), q4(4);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edge_count() == 1);
  CHECK(q2.vertex_count() == 4);
  CHECK(q2.edge_count() == 6);
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 56);
  CHECK(CubeView::whole(q2).edge_count() == 6);
  CHECK(CubeView::whole(q4).edge_count() == 56);
}

TEST_CASE("hyper and complement neighbours") {
  const AugmentedCube q(4);
  CHECK(q.h_neighbor(b("0000"), 1) == b("1000"));
  CHECK(q.h_neighbor(b("0010"), 3) == b("0000"));
  CHECK(q.h_neighbor(b("0000"), 4) == b("0001"));
  CHECK(q.c_neighbor(b("0000"), 1) == b("1111"));
  CHECK(q.c_neighbor(b("0001"), 1) == b("1110"));
  CHECK(q.c_neighbor(b("0010"), 2) == b("0101"));
  CHECK_THROWS_AS(q.c_neighbor(0, 4), InvalidArgument);
  CHECK_THROWS_AS(q.h_neighbor(0, 0), InvalidArgument);
  CHECK_THROWS_AS(q.h_neighbor(0, 5), InvalidArgument);
}

TEST_CASE("neighbour sets") {
  const AugmentedCube q(4);
  CHECK(as_set(q.neighbors(b("0000"))) ==
        std::set<Vertex>{b("1000"), b("0100"), b("0010"), b("0001"),
                         b("1111"), b("0111"), b("0011")});
  CHECK(as_set(q.neighbors(b("0111"))) ==
        std::set<Vertex>{b("1111"), b("0011"), b("0101"), b("0110"),
                         b("1000"), b("0000"), b("0100")});
  const AugmentedCube q1(1);
  CHECK(q1.neighbors(0) == std::vector<Vertex>{1});
}

TEST_CASE("adjacency") {
  const AugmentedCube q(4);
  CHECK(q.is_adjacent(b("0000"), b("0111")));
  CHECK_FALSE(q.is_adjacent(b("1010"), b("0011")));
  CHECK_FALSE(q.is_adjacent(b("0101"), b("0101")));
  const auto* m = q.joining_mask(b("0000"), b("0111"));
  REQUIRE(m != nullptr);
  CHECK(m->label() == "c2");
}

TEST_CASE("quadrant and half") {
  const AugmentedCube q(4);
  CHECK(q.quadrant(b("0111")).label == 1);
  CHECK(q.half(b("0111")) == 0);
  CHECK(q.quadrant(b("1010")).label == 2);
  CHECK(q.half(b("1010")) == 1);
  CHECK(q.quadrant(b("0001")).label == 0);
  CHECK_THROWS_AS(AugmentedCube(1).quadrant(0), InvalidArgument);
}

TEST_CASE("translate") {
  const AugmentedCube q(4);
  CHECK(translate(b("1011"), XorTranslation{0}) == b("1011"));
  CHECK(translate(b("0000"), XorTranslation{b("0111")}) == b("0111"));
  const XorTranslation t{b("1010")};
  CHECK(q.is_adjacent(b("0000"), b("0111")) ==
        q.is_adjacent(t.apply(b("0000")), t.apply(b("0111"))));
  CHECK(t.apply(b("0000")) == b("1010"));
  CHECK(t.apply(b("0111")) == b("1101"));
}

TEST_CASE("canonicalize_triple") {
  const AugmentedCube q(4);
  SUBCASE("already canonical") {
    const Triple d{b("0000"), b("0010"), b("0001")};
    const auto c = canonicalize_triple(q, d);
    CHECK(c.transform.word == 0);
    CHECK(c.canonical == d);
    CHECK(c.pattern == TriplePattern::SameQuadrant);
  }
  SUBCASE("pair moved to half 0") {
    const Triple d{b("1000"), b("1010"), b("0001")};
    const auto c = canonicalize_triple(q, d);
    CHECK((c.transform.word & b("1000")) != 0);
    CHECK(c.pattern == TriplePattern::SplitHalves);
    CHECK(q.half(c.canonical[0]) == 0);
    CHECK(q.half(c.canonical[1]) == 0);
    CHECK(q.half(c.canonical[2]) == 1);
    for (int r = 0; r < 3; ++r) {
      CHECK(c.pull_back(c.canonical[static_cast<std::size_t>(r)]) ==
            d[static_cast<std::size_t>(c.roles[static_cast<std::size_t>(r)])]);
    }
  }
  SUBCASE("split quadrants") {
    const Triple d{b("0110"), b("0001"), b("0011")};
    const auto c = canonicalize_triple(q, d);
    CHECK(c.pattern == TriplePattern::SplitQuadrants);
    CHECK(q.quadrant(c.canonical[0]).label == 0);
    CHECK(q.quadrant(c.canonical[1]).label == 0);
    CHECK(q.quadrant(c.canonical[2]).label == 1);
  }
  CHECK_THROWS_AS(canonicalize_triple(q, {1, 1, 2}), InvalidArgument);
}

TEST_CASE("parse and format triples") {
  const AugmentedCube q(4);
  const Triple d = parse_triple(q, "0000,0111,1011");
  CHECK(d == Triple{0, 7, 11});
  CHECK(format_triple(q, d) == "0000,0111,1011");
  CHECK_THROWS_AS(parse_triple(q, "0000,0111"), InvalidArgument);
  CHECK_THROWS_AS(parse_triple(q, "0000,0111,12"), InvalidArgument);
  CHECK_THROWS_AS(parse_triple(q, "0000,0000,0001"), InvalidArgument);
}

TEST_CASE("sub-cube views") {
  const AugmentedCube q(4);
  const auto h0 = induced_half(q, 0);
  CHECK(h0.size() == 8);
  for (Vertex v : h0.vertices()) CHECK(h0.degree(v) == 5);
  const auto q00 = induced_quadrant(q, Quadrant{0});
  CHECK(q00.size() == 4);
  CHECK(q00.edge_count() == 6);
  const auto dia = CubeView::diamond(q, Quadrant{0}, Quadrant{2});
  CHECK(dia.size() == 8);
  CHECK(connectivity(dia) == 4);
  CHECK_THROWS_AS(CubeView::half(AugmentedCube(1), 0), InvalidArgument);
  CHECK_THROWS_AS(CubeView::quadrant(AugmentedCube(2), Quadrant{0}),
                  InvalidArgument);
}

TEST_CASE("graph text round trip") {
  const AugmentedCube q(3);
  std::ostringstream out;
  write_cube_text(out, q);
  const std::string text = out.str();
  CHECK(text.rfind("AQ n=3\nE 000 001\n", 0) == 0);
  std::istringstream in(text);
  auto g = read_graph_text(in);
  CHECK(g->whole_cube_dimension() == 3);
  CHECK(g->edge_count() == q.edge_count());

  std::istringstream bad("AQ n=3\nE 000 101\n");
  CHECK_THROWS_AS(read_graph_text(bad), InvalidArgument);
  std::istringstream missing("AQ n=2\nE 00 01\n");
  CHECK_THROWS_AS(read_graph_text(missing), InvalidArgument);

  std::istringstream cycle("G n=3\nE 000 001\nE 001 010\nE 010 000\n");
  auto c = read_graph_text(cycle);
  CHECK(c->size() == 3);
  CHECK(c->edge_count() == 3);
  CHECK_FALSE(c->whole_cube_dimension().has_value());
}

// ---------------------------------------------------------------------------
// Properties.

TEST_CASE("degree regularity for n = 2..8") {
  for (int n = 2; n <= 8; ++n) {
    const AugmentedCube q(n);
    for (Vertex x = 0; x < q.vertex_count(); ++x) {
      const auto nb = q.neighbors(x);
      REQUIRE(as_set(nb).size() == static_cast<std::size_t>(2 * n - 1));
    }
  }
}

TEST_CASE("mask closure and involution, exhaustive n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const AugmentedCube q(n);
    std::set<Vertex> words;
    for (const auto& m : q.masks()) words.insert(m.word);
    REQUIRE(words.size() == q.masks().size());
    for (Vertex x = 0; x < q.vertex_count(); ++x) {
      for (Vertex y = 0; y < q.vertex_count(); ++y) {
        REQUIRE(q.is_adjacent(x, y) == (words.count(x ^ y) == 1));
      }
      for (int d = 1; d <= n; ++d) {
        REQUIRE(q.h_neighbor(q.h_neighbor(x, d), d) == x);
      }
      for (int d = 1; d < n; ++d) {
        REQUIRE(q.c_neighbor(q.c_neighbor(x, d), d) == x);
      }
    }
  }
}

TEST_CASE("translation automorphism, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const AugmentedCube q(n);
    const Vertex count = static_cast<Vertex>(q.vertex_count());
    for (Vertex v = 0; v < count; ++v) {
      for (Vertex x = 0; x < count; ++x) {
        for (Vertex y = 0; y < count; ++y) {
          REQUIRE(q.is_adjacent(x, y) == q.is_adjacent(x ^ v, y ^ v));
        }
      }
    }
  }
}

TEST_CASE("translation automorphism, 500 seeded samples for n = 6..20") {
  std::mt19937 rng(20261019);
  for (int i = 0; i < 500; ++i) {
    const int n = 6 + static_cast<int>(rng() % 15);
    const AugmentedCube q(n);
    const Vertex mask = static_cast<Vertex>(q.vertex_count() - 1);
    const Vertex v = rng() & mask, x = rng() & mask;
    const auto& m = q.masks()[rng() % q.masks().size()];
    const Vertex y = (rng() % 2) ? (x ^ m.word) : (rng() & mask);
    REQUIRE(q.is_adjacent(x, y) == q.is_adjacent(x ^ v, y ^ v));
  }
}

TEST_CASE("matching structure between quadrants") {
  for (int n = 3; n <= 7; ++n) {
    const AugmentedCube q(n);
    // Sibling quadrants within a half use Hyper(2); halves are joined by
    // Hyper(1) between same-suffix quadrants and Complement(1) diagonally.
    struct Expect {
      Vertex word;
      unsigned from, to;
    };
    const std::vector<Expect> cases = {
        {q.hyper_mask(2), 0, 1},      {q.hyper_mask(2), 2, 3},
        {q.hyper_mask(1), 0, 2},      {q.hyper_mask(1), 1, 3},
        {q.complement_mask(1), 0, 3}, {q.complement_mask(1), 1, 2},
    };
    for (const auto& e : cases) {
      std::set<Vertex> image;
      for (Vertex x = 0; x < q.vertex_count(); ++x) {
        if (q.quadrant(x).label != e.from) continue;
        const Vertex y = x ^ e.word;
        REQUIRE(q.quadrant(y).label == e.to);
        image.insert(y);
      }
      CHECK(image.size() == (q.vertex_count() >> 2));
    }
  }
}
