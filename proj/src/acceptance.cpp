#include "aqpath/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "aqpath/construct.hpp"
#include "aqpath/flow.hpp"
#include "aqpath/graph.hpp"
#include "aqpath/oracle.hpp"
#include "aqpath/parallel.hpp"
#include "aqpath/verify.hpp"

namespace aqpath {

namespace {

struct Check {
  std::ostringstream detail;
  std::string failure;  // first failed expectation

  void fail(const std::string& why) {
    if (failure.empty()) failure = why;
  }
};

const char* kTitles[kCriterionCount] = {
    "exact base value",
    "constructive even case",
    "constructive odd case",
    "witness tightness",
    "common-neighbour bounds",
    "connectivity",
    "bound arithmetic",
    "oracle self-consistency",
    "witness correction regression",
    "property suites",
};

int needed_dimension(int id) {
  switch (id) {
    case 1: return 4;
    case 3: return 5;
    case 6: return 5;
    case 9: return 4;
    case 10: return 6;
    case 7: return 4;
    case 8: return 3;
    default: return 6;
  }
}

struct Sweep {
  std::size_t triples = 0;
  std::size_t violations = 0;
  std::size_t fallbacks = 0;
  std::string first_bad;
};

// Constructs and certifies each triple; ordering of the work is irrelevant.
Sweep certify(int n, const std::vector<Triple>& triples, int jobs) {
  const AugmentedCube cube(n);
  const auto whole = CubeView::whole(cube);
  const int want = target_count(n);
  std::vector<char> bad(triples.size(), 0), fell(triples.size(), 0);
  parallel_for(triples.size(), jobs, [&](std::size_t i) {
    const auto f = construct(n, triples[i]);
    bad[i] = static_cast<int>(f.paths.size()) != want ||
             !accepted(check_family(whole, triples[i], f.paths));
    fell[i] = f.fallback();
  });
  Sweep s;
  s.triples = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (bad[i]) {
      if (s.first_bad.empty()) s.first_bad = format_triple(cube, triples[i]);
      ++s.violations;
    }
    s.fallbacks += static_cast<std::size_t>(fell[i]);
  }
  return s;
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  const Vertex size = Vertex{1} << n;
  for (Vertex x = 0; x < size; ++x) {
    for (Vertex y = x + 1; y < size; ++y) {
      for (Vertex z = y + 1; z < size; ++z) out.push_back({x, y, z});
    }
  }
  return out;
}

std::vector<Triple> random_triples(int n, std::size_t count,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vertex size = Vertex{1} << n;
  std::vector<Triple> out;
  while (out.size() < count) {
    const Triple d{static_cast<Vertex>(rng() % size),
                   static_cast<Vertex>(rng() % size),
                   static_cast<Vertex>(rng() % size)};
    if (d[0] != d[1] && d[0] != d[2] && d[1] != d[2]) out.push_back(d);
  }
  return out;
}

ExplicitGraph random_connected(std::mt19937_64& rng, int size, double extra) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < size; ++i) vs.push_back(static_cast<Vertex>(i));
  for (int i = 1; i < size; ++i) {
    es.emplace_back(static_cast<Vertex>(rng() % static_cast<unsigned>(i)),
                    static_cast<Vertex>(i));
  }
  std::bernoulli_distribution coin(extra);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (coin(rng)) {
        es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return ExplicitGraph(4, vs, es);
}

void c1(Check& c, const AcceptanceOptions& o) {
  Pi3Options opt;
  opt.jobs = o.jobs;
  const auto r = pi3_exact(CubeView::whole(AugmentedCube(4)), opt);
  c.detail << "pi3_exact(AQ_4)=" << r.value << " over " << r.triples
           << " pinned triples";
  if (r.triples != 105) c.fail("expected 105 triples");
  if (r.value != 4 || r.status != OracleStatus::Exact) c.fail("value is not 4");
}

void c2(Check& c, const AcceptanceOptions& o) {
  const auto s4 = certify(4, all_triples(4), o.jobs);
  const auto s6 =
      certify(6, random_triples(6, o.random_triples, o.seed), o.jobs);
  const std::size_t total = s4.triples + s6.triples;
  const std::size_t fb = s4.fallbacks + s6.fallbacks;
  c.detail << "AQ_4 " << s4.triples << " triples, AQ_6 " << s6.triples
           << " random; violations " << s4.violations + s6.violations
           << "; fallbacks " << fb << " ("
           << 100.0 * static_cast<double>(fb) / static_cast<double>(total)
           << "%)";
  if (s4.violations + s6.violations > 0) {
    c.fail("first bad triple " + s4.first_bad + s6.first_bad);
  }
  if (fb * 100 >= total) c.fail("fallback rate is not below 1%");
}

void c3(Check& c, const AcceptanceOptions& o) {
  const auto s = certify(5, all_triples(5), o.jobs);
  Pi3Options opt;
  opt.jobs = o.jobs;
  const auto r = pi3_exact(CubeView::whole(AugmentedCube(5)), opt);
  c.detail << "AQ_5 " << s.triples << " triples, violations " << s.violations
           << ", fallbacks " << s.fallbacks << "; pi3_exact(AQ_5)=" << r.value;
  if (s.violations > 0) c.fail("first bad triple " + s.first_bad);
  if (r.value != 5 || r.status != OracleStatus::Exact) c.fail("pi3 is not 5");
}

void c4(Check& c, const AcceptanceOptions&) {
  for (int n = 4; n <= 6; ++n) {
    const AugmentedCube cube(n);
    const auto g = CubeView::whole(cube);
    const auto w = witness_triple(n);
    const auto r = max_dpaths(g, w.d);
    const int want = target_count(n);
    c.detail << (n > 4 ? "; " : "") << "n=" << n << ": ";
    if (r.exact()) {
      c.detail << r.count;
      if (r.count != want) {
        c.fail("n=" + std::to_string(n) + " expected " + std::to_string(want));
      }
    } else {
      c.detail << "budget exhausted (best " << r.count << ", upper "
               << r.upper << ")";
      if (n < 6) c.fail("budget exhausted at n=" + std::to_string(n));
    }
    if (!accepted(check_family(g, w.d, r.family))) {
      c.fail("witness family rejected at n=" + std::to_string(n));
    }
  }
}

void c5(Check& c, const AcceptanceOptions&) {
  for (int n = 3; n <= 6; ++n) {
    const auto g = CubeView::whole(AugmentedCube(n));
    const auto pairs = max_common(g, 2);
    c.detail << (n > 3 ? "; " : "") << "n=" << n << " pairs " << pairs.value;
    if (pairs.value > 4 || (n >= 4 && pairs.value != 4)) {
      c.fail("pair bound off at n=" + std::to_string(n));
    }
    if (n >= 4) {
      const auto triples = max_common(g, 3);
      c.detail << " triples " << triples.value;
      if (triples.value != 4) c.fail("triple value off at n=" + std::to_string(n));
    }
  }
}

void c6(Check& c, const AcceptanceOptions&) {
  const int want[] = {4, 7, 9};
  for (int n = 3; n <= 5; ++n) {
    const int k = connectivity(CubeView::whole(AugmentedCube(n)));
    c.detail << (n > 3 ? ", " : "") << "kappa(AQ_" << n << ")=" << k;
    if (k != want[n - 3]) c.fail("connectivity off at n=" + std::to_string(n));
  }
}

void c7(Check& c, const AcceptanceOptions&) {
  int bad = 0;
  for (int n = 4; n <= 64; ++n) bad += lemma6_bound(n) != target_count(n);
  c.detail << "n=4..64, mismatches " << bad;
  if (bad) c.fail("formula mismatch");
}

void c8(Check& c, const AcceptanceOptions& o) {
  const auto g3 = CubeView::whole(AugmentedCube(3));
  int agree = 0, total = 0;
  for (const Triple& d : all_triples(3)) {
    ++total;
    const auto r = max_dpaths(g3, d);
    agree += r.exact() && r.count == brute_small(g3, d);
  }
  std::mt19937_64 rng(o.seed ^ 0x5eedULL);
  for (int t = 0; t < 200; ++t) {
    const int size = 5 + static_cast<int>(rng() % 8);
    const auto g = random_connected(rng, size, 0.15 + 0.35 * (t % 4) / 3.0);
    std::vector<Vertex> pool(g.vertices());
    std::shuffle(pool.begin(), pool.end(), rng);
    const Triple d{pool[0], pool[1], pool[2]};
    ++total;
    const auto r = max_dpaths(g, d);
    agree += r.exact() && r.count == brute_small(g, d);
  }
  c.detail << agree << "/" << total << " agree (56 AQ_3 triples + 200 graphs)";
  if (agree != total) c.fail("oracle and brute force disagree");
}

void c9(Check& c, const AcceptanceOptions&) {
  const auto printed = witness_triple(4, true);
  const auto fixed = witness_triple(4);
  const std::set<Vertex> got(fixed.common.begin(), fixed.common.end());
  const std::set<Vertex> expected(fixed.expected.begin(), fixed.expected.end());
  c.detail << "printed z shares " << printed.common.size()
           << " neighbours; corrected z shares " << fixed.common.size();
  if (printed.common.size() >= 4 || printed.holds) {
    c.fail("printed witness now shares four neighbours");
  }
  if (got != expected || !fixed.holds) c.fail("corrected witness broken");
}

// Mask closure, symmetry and translation invariance of adjacency.
int mask_suite(std::mt19937_64& rng, int cases, std::string& why) {
  int passed = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const AugmentedCube cube(n);
    const Vertex size = static_cast<Vertex>(cube.vertex_count());
    const Vertex v = static_cast<Vertex>(rng() % size);
    const XorTranslation tr{static_cast<Vertex>(rng() % size)};
    const auto nb = cube.neighbors(v);
    bool ok = static_cast<int>(std::set<Vertex>(nb.begin(), nb.end()).size()) ==
              2 * n - 1;
    for (Vertex w : nb) {
      ok = ok && cube.is_adjacent(w, v) && cube.is_adjacent(v, w) &&
           cube.is_adjacent(tr.apply(v), tr.apply(w));
    }
    const Vertex u = static_cast<Vertex>(rng() % size);
    ok = ok && cube.is_adjacent(u, v) ==
                   cube.is_adjacent(tr.apply(u), tr.apply(v));
    if (ok) {
      ++passed;
    } else if (why.empty()) {
      why = "mask invariant broken at n=" + std::to_string(n);
    }
  }
  return passed;
}

// Smallest u-v separator by subset enumeration, compared with the flow.
int duality_suite(std::mt19937_64& rng, int cases, std::string& why) {
  int passed = 0;
  for (int t = 0; t < cases;) {
    const int size = 5 + static_cast<int>(rng() % 6);
    const auto g = random_connected(rng, size, 0.35);
    const Vertex u = static_cast<Vertex>(rng() % size);
    const Vertex v = static_cast<Vertex>(rng() % size);
    if (u == v || g.adjacent(u, v)) continue;
    ++t;
    std::vector<Vertex> rest;
    for (Vertex w : g.vertices()) {
      if (w != u && w != v) rest.push_back(w);
    }
    int best = static_cast<int>(rest.size());
    for (unsigned mask = 0; mask < (1U << rest.size()); ++mask) {
      const int bits = __builtin_popcount(mask);
      if (bits >= best) continue;
      std::vector<Vertex> cut;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1U) cut.push_back(rest[i]);
      }
      const RestrictedView h(g, cut);
      if (min_vertex_cut(h, u, v) == 0) best = bits;
    }
    const int flow = min_vertex_cut(g, u, v);
    bool ok = flow == best;
    if (flow > 0) {
      const auto r = disjoint_paths(g, u, v, flow);
      ok = ok && succeeded(r);
      if (succeeded(r)) {
        std::set<Vertex> seen;
        for (const auto& p : std::get<PathSet>(r)) {
          ok = ok && accepted(check_path(g, p)) && p.front() == u &&
               p.back() == v;
          for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            ok = ok && seen.insert(p[i]).second;
          }
        }
      }
      ok = ok && !succeeded(disjoint_paths(g, u, v, flow + 1));
    }
    if (ok) {
      ++passed;
    } else if (why.empty()) {
      why = "flow " + std::to_string(flow) + " vs separator " +
            std::to_string(best);
    }
  }
  return passed;
}

std::optional<ViolationKind> kind_of(const Verdict& v) {
  if (const auto* x = std::get_if<Violation>(&v)) return x->kind;
  return std::nullopt;
}

// Mutations of constructed families must be rejected with the right kind.
int fuzz_suite(std::mt19937_64& rng, int cases, std::string& why) {
  int passed = 0;
  for (int t = 0; t < cases;) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const AugmentedCube cube(n);
    const auto g = CubeView::whole(cube);
    const auto d = random_triples(n, 1, rng())[0];
    const auto fam = construct(n, d).paths;
    const std::size_t i = rng() % fam.size();
    const auto is_terminal = [&](Vertex v) {
      return std::find(d.begin(), d.end(), v) != d.end();
    };
    auto record = [&](bool ok, const char* what) {
      ++t;
      if (ok) {
        ++passed;
      } else if (why.empty()) {
        why = std::string("fuzz mutation '") + what + "' misreported on " +
              format_triple(cube, d);
      }
    };
    switch (rng() % 4) {
      case 0: {  // drop a vertex
        auto m = fam;
        const std::size_t k = rng() % m[i].size();
        const bool inner = k > 0 && k + 1 < m[i].size();
        const bool bridged =
            inner && cube.is_adjacent(m[i][k - 1], m[i][k + 1]);
        const bool terminal = is_terminal(m[i][k]);
        m[i].erase(m[i].begin() + static_cast<long>(k));
        const auto v = check_family(g, d, m);
        if (inner && !bridged) {
          record(kind_of(v) == ViolationKind::NotAPath, "drop");
        } else if (terminal) {
          record(kind_of(v) == ViolationKind::MissingTerminal, "drop");
        }
        break;
      }
      case 1: {  // swap two vertices
        auto m = fam;
        const std::size_t a = rng() % m[i].size();
        const std::size_t b = rng() % m[i].size();
        std::swap(m[i][a], m[i][b]);
        if (!accepted(check_path(g, m[i]))) {
          record(kind_of(check_family(g, d, m)) == ViolationKind::NotAPath,
                 "swap");
        }
        break;
      }
      case 2: {  // duplicate a path, hence its edges
        auto m = fam;
        m.push_back(fam[i]);
        record(kind_of(check_family(g, d, m)) ==
                   (fam[i].size() > 3 ? ViolationKind::VertexOverlap
                                      : ViolationKind::EdgeOverlap),
               "duplicate");
        break;
      }
      default: {  // repeat a vertex
        auto m = fam;
        m[i].push_back(m[i][rng() % m[i].size()]);
        record(kind_of(check_family(g, d, m)) == ViolationKind::NotSimple,
               "repeat");
        break;
      }
    }
  }
  return passed;
}

void c10(Check& c, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0xacce97ULL);
  std::string why;
  const int cases = 200;
  const int masks = mask_suite(rng, cases, why);
  const int duality = duality_suite(rng, cases, why);
  const int fuzz = fuzz_suite(rng, cases, why);
  c.detail << "masks " << masks << "/" << cases << ", Menger duality "
           << duality << "/" << cases << ", verifier fuzz " << fuzz << "/"
           << cases;
  if (masks != cases || duality != cases || fuzz != cases) c.fail(why);
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw InvalidArgument("criterion id must be 1.." +
                          std::to_string(kCriterionCount));
  }
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  if (needed_dimension(id) > options.nmax) {
    r.outcome = Outcome::Skip;
    r.detail = "needs n=" + std::to_string(needed_dimension(id));
    return r;
  }
  static const std::function<void(Check&, const AcceptanceOptions&)>
      checks[kCriterionCount] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    checks[id - 1](c, options);
  } catch (const std::exception& e) {
    c.fail(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  r.outcome = c.failure.empty() ? Outcome::Pass : Outcome::Fail;
  r.detail = c.detail.str();
  if (!c.failure.empty()) r.detail += " -- " + c.failure;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  const char* tag = r.outcome == Outcome::Pass   ? "PASS"
                    : r.outcome == Outcome::Fail ? "FAIL"
                                                 : "SKIP";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1fs", r.seconds);
  std::ostringstream os;
  os << tag << ' ' << (r.id < 10 ? " " : "") << r.id << ' ' << r.title << ": "
     << r.detail << " [" << secs << ']';
  return os.str();
}

}  // namespace aqpath
