#include "aqpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <random>
#include <set>

#include "aqpath/parallel.hpp"
#include "flow_network.hpp"

namespace aqpath {

namespace {

using detail::FlowNetwork;

// Commodity k joins terminals kEnds[k][0] and kEnds[k][1].
constexpr int kEnds[3][2] = {{0, 1}, {1, 2}, {0, 2}};
// The two commodities touching terminal i.
constexpr int kAt[3][2] = {{0, 2}, {0, 1}, {1, 2}};

using IndexPath = std::vector<int>;
using Demand = std::array<int, 3>;
using Domains = std::vector<std::uint8_t>;

enum class Outcome { Feasible, Infeasible, Exhausted };

void check_terminals(const Graph& g, const Triple& d) {
  if (g.size() == 0) throw InvalidArgument("graph has no vertices");
  if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) {
    throw InvalidArgument("terminal vertices must be distinct");
  }
  for (Vertex v : d) {
    if (!g.contains(v)) {
      throw InvalidArgument("terminal " + g.format(v) + " is not in the graph");
    }
  }
}

Demand demands(const SplitProfile& p) {
  return {p.a + p.b, p.b + p.c, p.a + p.c};
}

// Segment packing for one terminal triple. Vertices are handled by their
// index in g.vertices(); interior domains are 3-bit commodity masks.
class Packer {
 public:
  Packer(const Graph& g, const Triple& d) : verts_(g.vertices()) {
    const int count = static_cast<int>(verts_.size());
    adj_.resize(verts_.size());
    std::vector<Vertex> nb;
    for (int i = 0; i < count; ++i) {
      g.neighbors(verts_[static_cast<std::size_t>(i)], nb);
      for (Vertex w : nb) adj_[static_cast<std::size_t>(i)].push_back(index(w));
    }
    terminal_.assign(verts_.size(), -1);
    for (int t = 0; t < 3; ++t) {
      term_[t] = index(d[static_cast<std::size_t>(t)]);
      terminal_[static_cast<std::size_t>(term_[t])] = t;
    }
    Domains full = initial_domains();
    for (int k = 0; k < 3; ++k) {
      kappa_[k] = commodity_flow(k, full, INT_MAX, nullptr);
    }
  }

  int kappa(int k) const { return kappa_[k]; }

  Domains initial_domains() const {
    Domains dom(verts_.size(), 7);
    for (int t = 0; t < 3; ++t) dom[static_cast<std::size_t>(term_[t])] = 0;
    return dom;
  }

  // Cheap necessary conditions on a profile.
  bool plausible(const Demand& dem) const {
    for (int k = 0; k < 3; ++k) {
      if (dem[k] > kappa_[k]) return false;
    }
    for (int t = 0; t < 3; ++t) {
      const int need = dem[kAt[t][0]] + dem[kAt[t][1]];
      if (need > static_cast<int>(adj_[static_cast<std::size_t>(term_[t])].size())) {
        return false;
      }
    }
    return true;
  }

  bool greedy(const Demand& dem, std::array<std::vector<IndexPath>, 3>& segs) {
    std::array<int, 3> order{0, 1, 2};
    do {
      Domains dom = initial_domains();
      bool ok = true;
      for (int k : order) {
        segs[static_cast<std::size_t>(k)].clear();
        if (dem[k] == 0) continue;
        auto& out = segs[static_cast<std::size_t>(k)];
        if (commodity_flow(k, dom, dem[k], &out) < dem[k]) {
          ok = false;
          break;
        }
        for (const auto& p : out) {
          for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            dom[static_cast<std::size_t>(p[i])] = 0;
          }
        }
      }
      if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

  Outcome branch(Domains& dom, const Demand& dem, std::uint64_t& left,
                 std::uint64_t& nodes,
                 std::array<std::vector<IndexPath>, 3>& segs) {
    if (left == 0) return Outcome::Exhausted;
    --left;
    ++nodes;
    std::array<std::vector<IndexPath>, 3> paths;
    for (int k = 0; k < 3; ++k) {
      if (dem[k] == 0) continue;
      if (commodity_flow(k, dom, dem[k], &paths[static_cast<std::size_t>(k)]) <
          dem[k]) {
        return Outcome::Infeasible;
      }
    }
    for (int t = 0; t < 3; ++t) {
      if (!star_ok(t, dom, dem)) return Outcome::Infeasible;
    }
    std::vector<std::uint8_t> used(verts_.size(), 0);
    for (int k = 0; k < 3; ++k) {
      for (const auto& p : paths[static_cast<std::size_t>(k)]) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          used[static_cast<std::size_t>(p[i])] |=
              static_cast<std::uint8_t>(1U << k);
        }
      }
    }
    int pick = -1, pick_load = 1;
    for (std::size_t v = 0; v < used.size(); ++v) {
      const int load = std::popcount(static_cast<unsigned>(used[v]));
      if (load > pick_load) {
        pick = static_cast<int>(v);
        pick_load = load;
      }
    }
    if (pick < 0) {
      segs = std::move(paths);
      return Outcome::Feasible;
    }
    const auto v = static_cast<std::size_t>(pick);
    const std::uint8_t saved = dom[v];
    const std::uint8_t mine =
        static_cast<std::uint8_t>(1U << std::countr_zero(
                                      static_cast<unsigned>(used[v])));
    dom[v] = mine;
    Outcome r = branch(dom, dem, left, nodes, segs);
    if (r == Outcome::Infeasible) {
      dom[v] = static_cast<std::uint8_t>(saved & ~mine);
      r = branch(dom, dem, left, nodes, segs);
    }
    dom[v] = saved;
    return r;
  }

  PathSet assemble(const SplitProfile& profile,
                   const std::array<std::vector<IndexPath>, 3>& segs) const {
    auto vertex_path = [&](const IndexPath& p) {
      Path out;
      for (int i : p) out.push_back(verts_[static_cast<std::size_t>(i)]);
      return out;
    };
    auto rev = [](Path p) {
      std::reverse(p.begin(), p.end());
      return p;
    };
    auto join = [](Path head, const Path& tail) {
      head.insert(head.end(), tail.begin() + 1, tail.end());
      return head;
    };
    const auto& xy = segs[0];
    const auto& yz = segs[1];
    const auto& xz = segs[2];
    PathSet family;
    for (int i = 0; i < profile.a; ++i) {
      family.push_back(join(rev(vertex_path(xy[static_cast<std::size_t>(i)])),
                            vertex_path(xz[static_cast<std::size_t>(i)])));
    }
    for (int i = 0; i < profile.b; ++i) {
      family.push_back(
          join(vertex_path(xy[static_cast<std::size_t>(profile.a + i)]),
               vertex_path(yz[static_cast<std::size_t>(i)])));
    }
    for (int i = 0; i < profile.c; ++i) {
      family.push_back(
          join(vertex_path(xz[static_cast<std::size_t>(profile.a + i)]),
               rev(vertex_path(yz[static_cast<std::size_t>(profile.b + i)]))));
    }
    for (auto& p : family) {
      if (p.back() < p.front()) std::reverse(p.begin(), p.end());
    }
    return family;
  }

 private:
  int index(Vertex v) const {
    return static_cast<int>(std::lower_bound(verts_.begin(), verts_.end(), v) -
                            verts_.begin());
  }
  static int in(int i) { return 2 * i; }
  static int out(int i) { return 2 * i + 1; }

  int commodity_flow(int k, const Domains& dom, int limit,
                     std::vector<IndexPath>* paths) const {
    const int s = term_[kEnds[k][0]], t = term_[kEnds[k][1]];
    const auto bit = static_cast<std::uint8_t>(1U << k);
    const int count = static_cast<int>(verts_.size());
    FlowNetwork net(2 * count);
    for (int v = 0; v < count; ++v) {
      if (dom[static_cast<std::size_t>(v)] & bit) net.add_arc(in(v), out(v), 1);
    }
    for (int u = 0; u < count; ++u) {
      if (u != s && !(dom[static_cast<std::size_t>(u)] & bit)) continue;
      for (int w : adj_[static_cast<std::size_t>(u)]) {
        if (w == t || (dom[static_cast<std::size_t>(w)] & bit)) {
          net.add_arc(out(u), in(w), 1);
        }
      }
    }
    const int flow = net.max_flow(out(s), in(t), limit);
    if (paths != nullptr) {
      paths->clear();
      for (const auto& walk : net.decompose(out(s), in(t))) {
        IndexPath p;
        for (int node : walk) {
          if (p.empty() || p.back() != node / 2) p.push_back(node / 2);
        }
        paths->push_back(std::move(p));
      }
    }
    return flow;
  }

  // Paths from terminal t to the other two, enough for both its demands.
  bool star_ok(int t, const Domains& dom, const Demand& dem) const {
    const int k1 = kAt[t][0], k2 = kAt[t][1];
    const int need = dem[k1] + dem[k2];
    if (need == 0) return true;
    const auto bits = static_cast<std::uint8_t>((1U << k1) | (1U << k2));
    const int count = static_cast<int>(verts_.size());
    const int src = term_[t];
    auto other = [&](int k) {
      return term_[kEnds[k][0] == t ? kEnds[k][1] : kEnds[k][0]];
    };
    const int j1 = other(k1), j2 = other(k2);
    FlowNetwork net(2 * count);
    for (int v = 0; v < count; ++v) {
      if (dom[static_cast<std::size_t>(v)] & bits) net.add_arc(in(v), out(v), 1);
    }
    for (int u = 0; u < count; ++u) {
      if (u != src && !(dom[static_cast<std::size_t>(u)] & bits)) continue;
      for (int w : adj_[static_cast<std::size_t>(u)]) {
        if (w == j1 || w == j2 || (dom[static_cast<std::size_t>(w)] & bits)) {
          net.add_arc(out(u), in(w), 1);
        }
      }
    }
    const int sink = net.add_node();
    if (dem[k1] > 0) net.add_arc(in(j1), sink, dem[k1]);
    if (dem[k2] > 0) net.add_arc(in(j2), sink, dem[k2]);
    return net.max_flow(out(src), sink, need) >= need;
  }

  const std::vector<Vertex>& verts_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> terminal_;
  int term_[3] = {0, 0, 0};
  int kappa_[3] = {0, 0, 0};
};

std::vector<SplitProfile> profiles(int total) {
  std::vector<SplitProfile> out;
  for (int a = 0; a <= total; ++a) {
    for (int b = 0; a + b <= total; ++b) out.push_back({a, b, total - a - b});
  }
  return out;
}

// Decides one total: greedy packing over all profiles first, then branch
// and bound profile by profile.
Feasibility decide(Packer& packer, int total, std::uint64_t& left,
                   std::uint64_t& nodes, SplitProfile* profile,
                   PathSet* witness) {
  if (total == 0) {
    if (profile) *profile = {};
    if (witness) witness->clear();
    return Feasibility::Yes;
  }
  std::vector<SplitProfile> candidates;
  for (const auto& p : profiles(total)) {
    if (packer.plausible(demands(p))) candidates.push_back(p);
  }
  std::array<std::vector<IndexPath>, 3> segs;
  for (const auto& p : candidates) {
    if (packer.greedy(demands(p), segs)) {
      if (profile) *profile = p;
      if (witness) *witness = packer.assemble(p, segs);
      return Feasibility::Yes;
    }
  }
  bool unknown = false;
  for (const auto& p : candidates) {
    Domains dom = packer.initial_domains();
    const Outcome r = packer.branch(dom, demands(p), left, nodes, segs);
    if (r == Outcome::Feasible) {
      if (profile) *profile = p;
      if (witness) *witness = packer.assemble(p, segs);
      return Feasibility::Yes;
    }
    if (r == Outcome::Exhausted) unknown = true;
  }
  return unknown ? Feasibility::Unknown : Feasibility::No;
}

OracleResult max_dpaths_below(const Graph& g, const Triple& d, int top,
                              std::uint64_t budget) {
  Packer packer(g, d);
  OracleResult result;
  std::uint64_t left = budget;
  int unresolved = -1;
  for (int total = top; total >= 0; --total) {
    SplitProfile profile;
    PathSet family;
    const Feasibility f =
        decide(packer, total, left, result.nodes, &profile, &family);
    if (f == Feasibility::Unknown) {
      unresolved = std::max(unresolved, total);
      continue;
    }
    if (f == Feasibility::No) continue;
    result.count = total;
    result.profile = profile;
    result.family = std::move(family);
    result.upper = std::max(total, unresolved);
    result.status =
        unresolved > total ? OracleStatus::BudgetExhausted : OracleStatus::Exact;
    return result;
  }
  return result;  // unreachable: total 0 is always feasible
}

}  // namespace

int triple_upper_bound(const Graph& g, const Triple& d) {
  check_terminals(g, d);
  const auto common = common_neighbors(g, {d[0], d[1], d[2]});
  const int degrees = static_cast<int>(g.degree(d[0]) + g.degree(d[1]) +
                                       g.degree(d[2]));
  return (degrees - static_cast<int>(common.size())) / 4;
}

OracleResult max_dpaths(const Graph& g, const Triple& d,
                        std::uint64_t budget) {
  return max_dpaths_below(g, d, triple_upper_bound(g, d), budget);
}

Feasibility dpaths_feasible(const Graph& g, const Triple& d, int total,
                            std::uint64_t budget, PathSet* witness,
                            std::uint64_t* nodes) {
  check_terminals(g, d);
  if (total < 0) throw InvalidArgument("total must be non-negative");
  if (total > triple_upper_bound(g, d)) return Feasibility::No;
  Packer packer(g, d);
  std::uint64_t left = budget, used = 0;
  const auto f = decide(packer, total, left, used, nullptr, witness);
  if (nodes) *nodes = used;
  return f;
}

// ---------------------------------------------------------------------------

int brute_small(const Graph& g, const Triple& d) {
  check_terminals(g, d);
  const auto& verts = g.vertices();
  const std::size_t count = verts.size();
  if (count > kBruteSmallLimit) {
    throw ResourceLimit("brute_small is limited to " +
                        std::to_string(kBruteSmallLimit) + " vertices");
  }
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  std::vector<std::vector<int>> adj(count);
  std::vector<Vertex> nb;
  for (std::size_t i = 0; i < count; ++i) {
    g.neighbors(verts[i], nb);
    for (Vertex w : nb) adj[i].push_back(index(w));
  }
  int term[3];
  std::uint32_t term_mask = 0;
  for (int t = 0; t < 3; ++t) {
    term[t] = index(d[static_cast<std::size_t>(t)]);
    term_mask |= 1U << term[t];
  }
  auto term_id = [&](int v) {
    for (int t = 0; t < 3; ++t) {
      if (term[t] == v) return t;
    }
    return -1;
  };
  auto pair_bit = [](int s, int t) {
    const int lo = std::min(s, t), hi = std::max(s, t);
    return 1U << (lo == 0 ? (hi == 1 ? 0 : 2) : 1);
  };

  // Every simple path from a terminal that reaches a second terminal after
  // visiting all three, keyed by (non-terminal vertices, terminal edges).
  std::set<std::pair<std::uint32_t, unsigned>> keys;
  const std::size_t states = (std::size_t{1} << count) * count * 8;
  std::vector<bool> seen(states, false);
  struct State {
    std::uint32_t mask;
    int v;
    unsigned dbits;
  };
  for (int s = 0; s < 3; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<State> stack{{1U << term[s], term[s], 0}};
    while (!stack.empty()) {
      const State st = stack.back();
      stack.pop_back();
      const std::size_t id =
          ((static_cast<std::size_t>(st.mask) * count) +
           static_cast<std::size_t>(st.v)) * 8 + st.dbits;
      if (seen[id]) continue;
      seen[id] = true;
      const int tv = term_id(st.v);
      if (tv >= 0 && tv != s && (st.mask & term_mask) == term_mask) {
        keys.insert({st.mask & ~term_mask, st.dbits});
        continue;
      }
      for (int w : adj[static_cast<std::size_t>(st.v)]) {
        if (st.mask & (1U << w)) continue;
        unsigned dbits = st.dbits;
        const int tw = term_id(w);
        if (tv >= 0 && tw >= 0) dbits |= pair_bit(tv, tw);
        stack.push_back({st.mask | (1U << w), w, dbits});
      }
    }
  }

  // Drop keys that contain another key; they are never needed.
  std::vector<std::pair<std::uint32_t, unsigned>> list(keys.begin(), keys.end());
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    const int pa = std::popcount(a.first) + std::popcount(a.second);
    const int pb = std::popcount(b.first) + std::popcount(b.second);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::pair<std::uint32_t, unsigned>> minimal;
  for (const auto& k : list) {
    bool dominated = false;
    for (const auto& m : minimal) {
      if ((m.first & ~k.first) == 0 && (m.second & ~k.second) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(k);
  }

  int best = 0;
  const std::uint32_t interior_all =
      static_cast<std::uint32_t>((std::uint64_t{1} << count) - 1) & ~term_mask;
  auto search = [&](auto&& self, std::size_t from, std::uint32_t used,
                    unsigned dused, int chosen) -> void {
    best = std::max(best, chosen);
    const int room = std::popcount(interior_all & ~used) + 1;
    if (chosen + room <= best) return;
    for (std::size_t i = from; i < minimal.size(); ++i) {
      const auto& k = minimal[i];
      if ((k.first & used) || (k.second & dused)) continue;
      self(self, i + 1, used | k.first, dused | k.second, chosen + 1);
    }
  };
  search(search, 0, 0, 0, 0);
  return best;
}

// ---------------------------------------------------------------------------

std::vector<Triple> pi3_triples(const Graph& g, const Pi3Options& options) {
  const auto& verts = g.vertices();
  const std::size_t count = verts.size();
  if (count < 3) throw InvalidArgument("graph has fewer than three vertices");
  std::vector<Triple> out;
  if (options.mode == Pi3Options::Mode::Exhaustive) {
    if (count > kExhaustiveLimit) {
      throw ResourceLimit("exhaustive pi3 is limited to " +
                          std::to_string(kExhaustiveLimit) + " vertices");
    }
    const bool pinned = g.whole_cube_dimension().has_value();
    const std::size_t first_end = pinned ? 1 : count;
    for (std::size_t i = 0; i < first_end; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        for (std::size_t k = j + 1; k < count; ++k) {
          out.push_back({verts[i], verts[j], verts[k]});
        }
      }
    }
    return out;
  }
  if (options.count == 0) throw InvalidArgument("sampled mode needs a count");
  std::mt19937_64 rng(options.seed);
  std::set<Triple> picked;
  for (std::size_t s = 0; s < options.count; ++s) {
    std::array<std::size_t, 3> idx{};
    do {
      for (auto& i : idx) i = static_cast<std::size_t>(rng() % count);
    } while (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]);
    std::sort(idx.begin(), idx.end());
    picked.insert({verts[idx[0]], verts[idx[1]], verts[idx[2]]});
  }
  return {picked.begin(), picked.end()};
}

Pi3Result pi3_exact(const Graph& g, const Pi3Options& options) {
  const auto triples = pi3_triples(g, options);
  Pi3Result result;
  result.triples = triples.size();
  const std::size_t count = triples.size();

  std::vector<int> bound(count);
  parallel_for(count, options.jobs, [&](std::size_t i) {
    bound[i] = triple_upper_bound(g, triples[i]);
  });
  const int top = *std::min_element(bound.begin(), bound.end());

  std::vector<Feasibility> at_top(count);
  parallel_for(count, options.jobs, [&](std::size_t i) {
    at_top[i] = dpaths_feasible(g, triples[i], top, options.budget);
  });
  bool unknown = std::any_of(at_top.begin(), at_top.end(), [](Feasibility f) {
    return f == Feasibility::Unknown;
  });

  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < count; ++i) {
    if (at_top[i] == Feasibility::No) failing.push_back(i);
  }
  if (!failing.empty()) {
    std::vector<OracleResult> exact(failing.size());
    parallel_for(failing.size(), options.jobs, [&](std::size_t i) {
      exact[i] = max_dpaths_below(g, triples[failing[i]], top - 1,
                                  options.budget);
    });
    result.value = INT_MAX;
    for (std::size_t i = 0; i < failing.size(); ++i) {
      if (!exact[i].exact()) unknown = true;
      if (exact[i].count < result.value) {
        result.value = exact[i].count;
        result.argmin = triples[failing[i]];
      }
    }
    result.status = unknown ? OracleStatus::BudgetExhausted : OracleStatus::Exact;
    return result;
  }

  result.value = top;
  result.status = unknown ? OracleStatus::BudgetExhausted : OracleStatus::Exact;
  // Smallest triple attaining `top`: either its bound is top, or one more
  // path is provably impossible. Triples left undecided by the budget are
  // skipped.
  const std::size_t chunk = static_cast<std::size_t>(std::max(1, options.jobs));
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t end = std::min(count, start + chunk);
    std::vector<bool> attains(end - start, false);
    parallel_for(end - start, options.jobs, [&](std::size_t i) {
      const std::size_t t = start + i;
      if (at_top[t] != Feasibility::Yes) return;
      attains[i] = bound[t] == top ||
                   dpaths_feasible(g, triples[t], top + 1, options.budget) ==
                       Feasibility::No;
    });
    for (std::size_t i = 0; i < attains.size(); ++i) {
      if (attains[i]) {
        result.argmin = triples[start + i];
        return result;
      }
    }
  }
  // Every candidate was undecided; fall back to the first triple whose
  // bound is top, which attains it.
  for (std::size_t i = 0; i < count; ++i) {
    if (bound[i] == top) {
      result.argmin = triples[i];
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<Vertex> common_neighbors(const Graph& g,
                                     const std::vector<Vertex>& set) {
  std::vector<Vertex> result;
  if (set.empty()) return result;
  g.neighbors(set[0], result);
  std::vector<Vertex> nb, next;
  for (std::size_t i = 1; i < set.size(); ++i) {
    g.neighbors(set[i], nb);
    next.clear();
    std::set_intersection(result.begin(), result.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    result.swap(next);
  }
  return result;
}

CommonReport max_common(const Graph& g, int arity) {
  if (arity != 2 && arity != 3) throw InvalidArgument("arity must be 2 or 3");
  const auto& verts = g.vertices();
  const std::size_t count = verts.size();
  CommonReport report;
  report.value = -1;
  const std::size_t first_end =
      g.whole_cube_dimension() ? std::min<std::size_t>(1, count) : count;
  auto consider = [&](std::vector<Vertex> set) {
    const int c = static_cast<int>(common_neighbors(g, set).size());
    if (c > report.value) {
      report.value = c;
      report.witness = std::move(set);
    }
  };
  for (std::size_t i = 0; i < first_end; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (arity == 2) {
        consider({verts[i], verts[j]});
        continue;
      }
      for (std::size_t k = j + 1; k < count; ++k) {
        consider({verts[i], verts[j], verts[k]});
      }
    }
  }
  if (report.value < 0) report.value = 0;
  return report;
}

int lemma4_bound(int k, int r) {
  if (k < 1 || r < 0 || r > k) {
    throw InvalidArgument("lemma4_bound needs k >= 1 and 0 <= r <= k");
  }
  return (3 * k - r) / 4;
}

int lemma6_bound(int n) {
  if (n < 4) throw InvalidArgument("lemma6_bound needs n >= 4");
  return lemma4_bound(2 * n - 1, 4);
}

WitnessTriple witness_triple(int n, bool printed_variant) {
  if (n < 4) throw InvalidArgument("witness triple needs n >= 4");
  const AugmentedCube cube(n);
  const int tail = n - 3;
  const Vertex ones = (Vertex{1} << tail) - 1;
  auto word = [&](unsigned prefix, bool complemented) {
    return (static_cast<Vertex>(prefix) << tail) | (complemented ? ones : 0);
  };
  WitnessTriple w;
  w.d = {word(0b000, false), word(0b011, true),
         word(0b101, !printed_variant)};
  w.expected = {word(0b001, true), word(0b111, true), word(0b100, false),
                word(0b010, false)};
  w.holds = true;
  for (Vertex t : w.d) {
    for (Vertex e : w.expected) {
      const auto* m = cube.joining_mask(t, e);
      w.certificate.push_back({t, e, m != nullptr, m ? m->label() : ""});
      if (!m) w.holds = false;
    }
  }
  const auto view = CubeView::whole(cube);
  w.common = common_neighbors(view, {w.d[0], w.d[1], w.d[2]});
  return w;
}

}  // namespace aqpath
