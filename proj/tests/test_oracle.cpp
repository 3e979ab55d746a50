#include <random>
#include <set>

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

ExplicitGraph cycle(int len) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < len; ++i) {
    vs.push_back(static_cast<Vertex>(i));
    es.emplace_back(i, (i + 1) % len);
  }
  return ExplicitGraph(4, vs, es);
}

// Connected graph: a random spanning tree plus extra random edges.
ExplicitGraph random_connected(std::mt19937& rng, int size, double extra) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < size; ++i) vs.push_back(static_cast<Vertex>(i));
  for (int i = 1; i < size; ++i) {
    es.emplace_back(static_cast<Vertex>(rng() % static_cast<unsigned>(i)), i);
  }
  std::bernoulli_distribution coin(extra);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (coin(rng)) es.emplace_back(i, j);
    }
  }
  return ExplicitGraph(4, vs, es);
}

void check_witness(const Graph& g, const Triple& d, const OracleResult& r) {
  REQUIRE(r.family.size() == static_cast<std::size_t>(r.count));
  const auto v = check_family(g, d, r.family);
  INFO(render(v));
  CHECK(accepted(v));
}

}  // namespace

TEST_CASE("max_dpaths small examples") {
  const auto c5 = cycle(5);
  const Triple d5{0, 1, 3};
  const auto r5 = max_dpaths(c5, d5);
  CHECK(r5.exact());
  CHECK(r5.count == 1);
  check_witness(c5, d5, r5);
  CHECK(brute_small(c5, d5) == 1);

  const auto k4 = CubeView::whole(AugmentedCube(2));
  for (const Triple& d : {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{1, 2, 3}}) {
    const auto r = max_dpaths(k4, d);
    CHECK(r.count == 2);
    check_witness(k4, d, r);
    CHECK(brute_small(k4, d) == 2);
  }
  CHECK_THROWS_AS(max_dpaths(k4, {0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(max_dpaths(k4, {0, 1, 7}), InvalidArgument);
}

TEST_CASE("oracle agrees with brute force on every AQ_3 triple") {
  const auto g = CubeView::whole(AugmentedCube(3));
  std::set<int> values;
  for (Vertex x = 0; x < 8; ++x) {
    for (Vertex y = x + 1; y < 8; ++y) {
      for (Vertex z = y + 1; z < 8; ++z) {
        const Triple d{x, y, z};
        const auto r = max_dpaths(g, d);
        REQUIRE(r.exact());
        REQUIRE(r.count == brute_small(g, d));
        check_witness(g, d, r);
        values.insert(r.count);
      }
    }
  }
  CHECK(*values.begin() == 2);
}

TEST_CASE("oracle agrees with brute force on 200 random connected graphs") {
  std::mt19937 rng(8675309);
  for (int t = 0; t < 200; ++t) {
    const int size = 5 + static_cast<int>(rng() % 8);
    const auto g = random_connected(rng, size, 0.15 + 0.35 * (t % 4) / 3.0);
    std::array<Vertex, 3> d{};
    std::vector<Vertex> pool(g.vertices());
    std::shuffle(pool.begin(), pool.end(), rng);
    d = {pool[0], pool[1], pool[2]};
    const auto r = max_dpaths(g, d);
    REQUIRE(r.exact());
    INFO("graph " << t);
    REQUIRE(r.count == brute_small(g, d));
    check_witness(g, d, r);
  }
}

TEST_CASE("brute_small size guard") {
  const auto g = CubeView::whole(AugmentedCube(4));
  CHECK_THROWS_AS(brute_small(g, {0, 1, 2}), ResourceLimit);
}

TEST_CASE("pi3 of AQ_4 is 4") {
  const auto g = CubeView::whole(AugmentedCube(4));
  Pi3Options opt;
  const auto r = pi3_exact(g, opt);
  CHECK(r.triples == 105);
  CHECK(r.status == OracleStatus::Exact);
  CHECK(r.value == 4);
  CHECK(r.argmin[0] == 0);
  CHECK(max_dpaths(g, r.argmin).count == 4);
}

TEST_CASE("pi3 guards and sampling") {
  const auto g7 = CubeView::whole(AugmentedCube(7));
  CHECK_THROWS_AS(pi3_exact(g7, {}), ResourceLimit);
  Pi3Options sampled;
  sampled.mode = Pi3Options::Mode::Sampled;
  sampled.seed = 5;
  sampled.count = 20;
  const auto g4 = CubeView::whole(AugmentedCube(4));
  const auto a = pi3_triples(g4, sampled);
  CHECK(a == pi3_triples(g4, sampled));
  CHECK(pi3_exact(g4, sampled).value >= 4);
}

TEST_CASE("common neighbours") {
  const auto g = CubeView::whole(AugmentedCube(4));
  CHECK(common_neighbors(g, {b("0000"), b("0111")}) ==
        std::vector<Vertex>{b("0011"), b("0100"), b("1000"), b("1111")});
  for (int n = 3; n <= 6; ++n) {
    const auto view = CubeView::whole(AugmentedCube(n));
    const auto pairs = max_common(view, 2);
    CHECK(pairs.value <= 4);
    if (n >= 4) {
      CHECK(pairs.value == 4);
      CHECK(max_common(view, 3).value == 4);
    }
  }
}

TEST_CASE("bound arithmetic") {
  CHECK(lemma4_bound(7, 4) == 4);
  CHECK(lemma6_bound(4) == 4);
  CHECK(lemma6_bound(6) == 7);
  CHECK(lemma6_bound(7) == 8);
  CHECK_THROWS_AS(lemma4_bound(0, 0), InvalidArgument);
  CHECK_THROWS_AS(lemma4_bound(3, 4), InvalidArgument);
  CHECK_THROWS_AS(lemma6_bound(3), InvalidArgument);
}

TEST_CASE("witness triple") {
  const auto w4 = witness_triple(4);
  CHECK(w4.d == Triple{b("0000"), b("0111"), b("1011")});
  CHECK(w4.holds);
  CHECK(w4.certificate.size() == 12);
  CHECK(std::set<Vertex>(w4.common.begin(), w4.common.end()) ==
        std::set<Vertex>{b("0011"), b("1111"), b("1000"), b("0100")});

  const auto printed = witness_triple(4, true);
  CHECK(printed.d[2] == b("1010"));
  CHECK_FALSE(printed.holds);
  CHECK(printed.common == std::vector<Vertex>{b("1000")});

  const auto w5 = witness_triple(5);
  CHECK(w5.d == Triple{b("00000"), b("01111"), b("10111")});
  CHECK(w5.holds);
  CHECK(w5.common.size() == 4);
  CHECK_THROWS_AS(witness_triple(3), InvalidArgument);
}

TEST_CASE("witness tightness at n = 4 and 5") {
  for (int n = 4; n <= 5; ++n) {
    const auto g = CubeView::whole(AugmentedCube(n));
    const auto w = witness_triple(n);
    const auto r = max_dpaths(g, w.d);
    CHECK(r.exact());
    CHECK(r.count == n);
    check_witness(g, w.d, r);
  }
}
