#include "aqpath/construct.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "aqpath/flow.hpp"
#include "aqpath/graph.hpp"
#include "aqpath/oracle.hpp"
#include "aqpath/verify.hpp"
#include "flow_network.hpp"

namespace aqpath {

int target_count(int n) {
  if (n < 4) throw InvalidArgument("target_count needs n >= 4");
  return n % 2 == 0 ? 3 * n / 2 - 2 : 3 * (n - 1) / 2 - 1;
}

std::string TraceEntry::to_string() const {
  std::ostringstream os;
  os << "n=" << dimension << ' ' << label
     << " translate=" << AugmentedCube(dimension).format(transform.word)
     << " roles=" << roles[0] << ',' << roles[1] << ',' << roles[2];
  if (fallback) os << " fallback";
  return os.str();
}

bool DPathFamily::fallback() const {
  return std::any_of(trace.begin(), trace.end(),
                     [](const TraceEntry& e) { return e.fallback; });
}

std::vector<std::string> DPathFamily::trace_lines() const {
  std::vector<std::string> out;
  for (const auto& e : trace) out.push_back(e.to_string());
  return out;
}

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;
using FanMap = std::map<Vertex, Path>;  // target -> path target..z

Path rev(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Concatenates walks, merging a shared junction vertex.
Path cat(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) {
    for (Vertex v : p) {
      if (out.empty() || out.back() != v) out.push_back(v);
    }
  }
  return out;
}

struct Levels {
  explicit Levels(const AugmentedCube& c)
      : cube(c),
        n(c.dimension()),
        mh(c.hyper_mask(1)),
        mc(c.complement_mask(1)),
        mh2(c.hyper_mask(2)),
        mc2(c.complement_mask(2)),
        mc3(n >= 4 ? c.complement_mask(3) : 0) {}

  Vertex h(Vertex v) const { return v ^ mh; }
  Vertex c(Vertex v) const { return v ^ mc; }
  Vertex h2(Vertex v) const { return v ^ mh2; }
  Vertex c2(Vertex v) const { return v ^ mc2; }
  Vertex c3(Vertex v) const { return v ^ mc3; }

  CubeView quadrant(unsigned q) const {
    return CubeView::quadrant(cube, Quadrant{q});
  }
  CubeView half(unsigned b) const { return CubeView::half(cube, b); }
  CubeView diamond(unsigned a, unsigned b) const {
    return CubeView::diamond(cube, Quadrant{a}, Quadrant{b});
  }

  const AugmentedCube& cube;
  int n;
  Vertex mh, mc, mh2, mc2, mc3;
};

std::optional<FanMap> fan_into(const Graph& g, Vertex z,
                               const std::vector<Vertex>& targets) {
  std::set<Vertex> seen;
  FanMap out;
  std::vector<Vertex> rest;
  if (!g.contains(z)) return std::nullopt;
  for (Vertex t : targets) {
    if (!seen.insert(t).second || !g.contains(t)) return std::nullopt;
    if (t == z) {
      out[t] = Path{z};
    } else {
      rest.push_back(t);
    }
  }
  if (rest.empty()) return out;
  auto r = fan(g, z, rest);
  if (!succeeded(r)) return std::nullopt;
  for (auto& p : std::get<PathSet>(r)) out[p.back()] = rev(p);
  return out;
}

std::optional<PathSet> link(const Graph& g, const Pairs& pairs) {
  std::set<Vertex> ends;
  for (auto [a, b] : pairs) {
    if (!g.contains(a) || !g.contains(b)) return std::nullopt;
    ends.insert(a);
    ends.insert(b);
  }
  if (ends.size() != 2 * pairs.size()) return std::nullopt;
  return specified_linkage(g, pairs);
}

// p full x..y paths, sx x-stubs and sy y-stubs (neighbours of x resp. y off
// every P path, pairwise distinct), optionally a route x..w to a member of
// route_to that is disjoint from all of it.
struct ScaffoldRequest {
  Vertex x = 0;
  Vertex y = 0;
  int p = 0;
  int sx = 0;
  int sy = 0;
  std::vector<Vertex> no_stub;
  std::vector<Vertex> route_to;
  int spare = -1;   // index of a common neighbour left out of the P paths
  bool clean = true;
  int rotate = 0;   // stub candidates are taken from this offset on
};

struct Scaffold {
  PathSet full;  // oriented x..y
  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  Path route;  // x..w, or empty
};

bool member(const std::vector<Vertex>& s, Vertex v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

std::optional<Scaffold> scaffold_once(const Graph& g,
                                      const ScaffoldRequest& rq) {
  const bool clean = rq.clean;
  const Vertex x = rq.x;
  const Vertex y = rq.y;
  Scaffold out;
  std::vector<Vertex> route_to = rq.route_to;
  bool want_route = !route_to.empty();
  if (want_route && member(route_to, x)) {
    out.route = Path{x};
    want_route = false;
  }

  std::vector<Vertex> nx, ny;
  g.neighbors(x, nx);
  g.neighbors(y, ny);
  auto in_nx = [&](Vertex v) { return std::binary_search(nx.begin(), nx.end(), v); };
  auto in_ny = [&](Vertex v) { return std::binary_search(ny.begin(), ny.end(), v); };
  auto reserved = [&](Vertex v) { return member(route_to, v); };

  if (in_nx(y) && static_cast<int>(out.full.size()) < rq.p) {
    out.full.push_back(Path{x, y});
  }
  std::vector<Vertex> common;
  for (Vertex v : nx) {
    if (v != y && in_ny(v) && !reserved(v)) common.push_back(v);
  }
  if (rq.spare >= static_cast<int>(common.size())) return std::nullopt;
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (static_cast<int>(out.full.size()) == rq.p) break;
    if (static_cast<int>(i) != rq.spare) out.full.push_back(Path{x, common[i], y});
  }
  const int r = rq.p - static_cast<int>(out.full.size());

  if (r > 0 || want_route) {
    const auto& verts = g.vertices();
    const std::size_t nv = verts.size();
    auto idx = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    enum Role { Blocked, A, B, Inner, Sink, Source, Target };
    std::vector<Role> role(nv, Inner);
    for (std::size_t i = 0; i < nv; ++i) {
      const Vertex v = verts[i];
      if (v == x) {
        role[i] = Source;
      } else if (v == y) {
        role[i] = Sink;
      } else if (reserved(v)) {
        role[i] = Target;
      } else if (in_nx(v) && in_ny(v)) {
        role[i] = Blocked;  // committed or kept for stubs
      } else if (in_nx(v)) {
        role[i] = A;
      } else if (in_ny(v)) {
        role[i] = B;
      }
    }
    detail::FlowNetwork net(static_cast<int>(2 * nv));
    auto in = [](std::size_t i) { return static_cast<int>(2 * i); };
    auto outn = [](std::size_t i) { return static_cast<int>(2 * i + 1); };
    const int sink = net.add_node();
    const int route_sink = net.add_node();
    for (std::size_t i = 0; i < nv; ++i) {
      if (role[i] == A || role[i] == B || role[i] == Inner) {
        net.add_arc(in(i), outn(i), 1);
      }
    }
    std::vector<Vertex> nb;
    for (std::size_t i = 0; i < nv; ++i) {
      const Role ri = role[i];
      if (ri == Blocked || ri == Sink || ri == Target) continue;
      g.neighbors(verts[i], nb);
      for (Vertex w : nb) {
        const std::size_t j = idx(w);
        const Role rj = role[j];
        bool ok = false;
        if (ri == Source) {
          ok = rj == A || (rj == Target && want_route);
        } else if (rj == Sink) {
          ok = ri == B;
        } else if (rj == Target) {
          ok = want_route && (!clean || ri != B);
        } else if (rj == A || rj == B || rj == Inner) {
          ok = clean ? (ri != B && rj != A) : true;
        }
        if (ok) net.add_arc(outn(i), in(j), 1);
      }
    }
    if (r > 0) net.add_arc(in(idx(y)), sink, r);
    if (want_route) {
      for (Vertex w : route_to) {
        if (g.contains(w) && w != y) net.add_arc(in(idx(w)), route_sink, 1);
      }
      net.add_arc(route_sink, sink, 1);
    }
    const int demand = std::max(r, 0) + (want_route ? 1 : 0);
    const int source = outn(idx(x));
    if (net.max_flow(source, sink, demand) < demand) return std::nullopt;
    for (const auto& walk : net.decompose(source, sink)) {
      Path path;
      for (int node : walk) {
        if (node >= static_cast<int>(2 * nv)) continue;
        const Vertex v = verts[static_cast<std::size_t>(node / 2)];
        if (path.empty() || path.back() != v) path.push_back(v);
      }
      if (path.back() == y) {
        out.full.push_back(std::move(path));
      } else {
        out.route = std::move(path);
      }
    }
  }

  std::set<Vertex> used;
  for (const auto& p : out.full) used.insert(p.begin(), p.end());
  used.insert(out.route.begin(), out.route.end());
  auto free = [&](Vertex v) {
    return !used.count(v) && v != x && v != y && !reserved(v) &&
           !member(rq.no_stub, v);
  };
  // Private neighbours first, shared ones last.
  auto ordered = [&](const std::vector<Vertex>& nbrs, auto shared) {
    std::vector<Vertex> own, both;
    for (Vertex v : nbrs) {
      if (free(v)) (shared(v) ? both : own).push_back(v);
    }
    if (!own.empty()) {
      std::rotate(own.begin(),
                  own.begin() + static_cast<long>(
                                    static_cast<std::size_t>(rq.rotate) %
                                    own.size()),
                  own.end());
    }
    own.insert(own.end(), both.begin(), both.end());
    return own;
  };
  for (Vertex v : ordered(nx, in_ny)) {
    if (static_cast<int>(out.xs.size()) < rq.sx) out.xs.push_back(v);
  }
  for (Vertex v : ordered(ny, in_nx)) {
    if (static_cast<int>(out.ys.size()) < rq.sy && !member(out.xs, v)) {
      out.ys.push_back(v);
    }
  }
  if (static_cast<int>(out.xs.size()) < rq.sx ||
      static_cast<int>(out.ys.size()) < rq.sy) {
    return std::nullopt;
  }
  return out;
}

// Calls body on successive scaffold variants until it yields a family.
template <typename Body>
std::optional<PathSet> with_scaffold(const Graph& g, ScaffoldRequest rq,
                                     Body body) {
  for (int spare = -1; spare < 4; ++spare) {
    for (bool clean : {true, false}) {
      for (int rotate = 0; rotate < 3; ++rotate) {
        rq.spare = spare;
        rq.clean = clean;
        rq.rotate = rotate;
        if (const auto s = scaffold_once(g, rq)) {
          if (auto ps = body(*s)) return ps;
        }
      }
    }
  }
  return std::nullopt;
}

// Ladder pieces. P runs x..y; F maps a target to its fan path target..z.
Path x_middle(const Path& p, Vertex stub, const FanMap& f, Vertex image) {
  return cat({rev(p), Path{stub}, f.at(image)});
}
Path y_middle(const Path& p, Vertex stub, const FanMap& f, Vertex image) {
  return cat({p, Path{stub}, f.at(image)});
}
Path z_middle(Vertex x, Vertex xs, Vertex xi, Vertex y, Vertex ys, Vertex yi,
              const FanMap& f) {
  return cat({Path{x, xs}, f.at(xi), rev(f.at(yi)), Path{ys, y}});
}

// ---- n = 4 ---------------------------------------------------------------

std::optional<PathSet> l81(const Triple& d) {
  const Vertex a = d[0] ^ d[1] ^ d[2];
  const Vertex t = a ^ 0b0011;
  const std::vector<std::vector<Vertex>> base = {
      {0b0010, 0b0000, 0b0001},
      {0b0000, 0b0011, 0b0010, 0b0001},
      {0b0000, 0b0100, 0b0110, 0b0010, 0b0101, 0b0001},
      {0b0010, 0b1010, 0b1000, 0b0000, 0b1111, 0b1110, 0b0001},
  };
  PathSet out;
  for (const auto& p : base) {
    Path q;
    for (Vertex v : p) q.push_back(v ^ t);
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<PathSet> l82(const Levels& L, Vertex x, Vertex y, Vertex z) {
  auto ps = disjoint_paths(L.diamond(0b00, 0b10), x, y, 4);
  if (!succeeded(ps)) return std::nullopt;
  const auto& P = std::get<PathSet>(ps);
  const auto f = fan_into(L.diamond(0b01, 0b11), z,
                          {L.h2(x), L.h2(y), L.c(x), L.c(y)});
  if (!f) return std::nullopt;
  return PathSet{cat({rev(P[0]), f->at(L.h2(x))}), cat({P[1], f->at(L.h2(y))}),
                 cat({rev(P[2]), f->at(L.c(x))}), cat({P[3], f->at(L.c(y))})};
}

std::optional<PathSet> l831(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const Vertex x1 = x ^ 0b0001, x2 = x ^ 0b0010, x3 = x ^ 0b0011;
  const Vertex y1 = x ^ 0b0101, y2 = x ^ 0b0110, y3 = x ^ 0b0100;
  const auto f =
      fan_into(L.half(1), z, {L.h(x), L.h(y), L.h(x2), L.h(y2)});
  if (!f) return std::nullopt;
  return PathSet{cat({Path{y, x}, f->at(L.h(x))}),
                 cat({Path{x, x3, y}, f->at(L.h(y))}),
                 cat({Path{y, y3, x, x2}, f->at(L.h(x2))}),
                 cat({Path{x, x1, y1, y, y2}, f->at(L.h(y2))})};
}

std::optional<PathSet> l832(const Levels& L, Vertex x, Vertex y, Vertex z) {
  auto ps = disjoint_paths(L.half(0), x, y, 4);
  if (!succeeded(ps)) return std::nullopt;
  const auto& P = std::get<PathSet>(ps);
  const auto f = fan_into(L.half(1), z, {L.h(x), L.h(y), L.c(x), L.c(y)});
  if (!f) return std::nullopt;
  return PathSet{cat({rev(P[0]), f->at(L.h(x))}), cat({P[1], f->at(L.h(y))}),
                 cat({rev(P[2]), f->at(L.c(x))}), cat({P[3], f->at(L.c(y))})};
}

// ---- even n >= 6 -----------------------------------------------------------

std::optional<PathSet> t111(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const Vertex a = L.c3(L.h(z));
  const auto top = link(L.quadrant(0b10), {{L.h(x), L.h(z)}, {L.h(y), a}});
  if (!top) return std::nullopt;
  const auto dia = L.diamond(0b01, 0b11);
  const std::vector<Vertex> avoid{L.h2(x), L.h2(y), L.c(z)};
  const RestrictedView side(dia, avoid);
  const auto low = link(side, {{L.c(x), L.c2(z)}, {L.c(y), L.h2(z)}});
  if (!low) return std::nullopt;
  return PathSet{
      cat({Path{y, L.h2(x), x}, (*low)[0], Path{z}}),
      cat({Path{x, L.h2(y), y}, (*low)[1], Path{z}}),
      cat({Path{x}, (*top)[0], Path{z, L.c(z)}, rev((*top)[1]), Path{y}}),
  };
}

std::optional<PathSet> t112(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const auto q = link(L.quadrant(0b01), {{L.h2(x), L.h2(z)},
                                         {L.h2(y), L.c2(z)},
                                         {L.c2(x), L.c2(y)}});
  if (!q) return std::nullopt;
  const auto u = link(L.half(1), {{L.h(x), L.h(z)},
                                  {L.h(y), L.c(z)},
                                  {L.c(x), L.c(y)}});
  if (!u) return std::nullopt;
  return PathSet{
      cat({Path{x}, (*q)[0], Path{z}, rev((*q)[1]), Path{y}}),
      cat({Path{y}, rev((*q)[2]), Path{x}, (*u)[0], Path{z}}),
      cat({Path{x}, (*u)[2], Path{y}, (*u)[1], Path{z}}),
  };
}

// z^c' == x.
std::optional<PathSet> t121(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const int n = L.n;
  const int m = n / 2 - 2;
  ScaffoldRequest rq{x, y, n - 2, n - 3, n - 3, {}, {}};
  return with_scaffold(L.quadrant(0b00), rq, [&](const Scaffold& sc)
                                       -> std::optional<PathSet> {
  const Scaffold* s = &sc;
  std::vector<Vertex> targets;
  for (Vertex v : s->xs) targets.push_back(L.h2(v));
  for (Vertex v : s->ys) targets.push_back(L.h2(v));
  targets.push_back(L.h2(y));
  const auto f = fan_into(L.quadrant(0b01), z, targets);
  if (!f) return std::nullopt;
  const auto& P = s->full;
  PathSet out;
  for (int i = 0; i < m; ++i) {
    out.push_back(x_middle(P[i], s->xs[i], *f, L.h2(s->xs[i])));
  }
  for (int i = 0; i < m; ++i) {
    out.push_back(y_middle(P[m + i], s->ys[i], *f, L.h2(s->ys[i])));
  }
  for (int i = m; i < n - 3; ++i) {
    out.push_back(z_middle(x, s->xs[i], L.h2(s->xs[i]), y, s->ys[i],
                           L.h2(s->ys[i]), *f));
  }
  out.push_back(cat({Path{y}, f->at(L.h2(y)), Path{x}}));
  out.push_back(cat({rev(P[2 * m]), Path{L.h(x), z}}));
  out.push_back(cat({rev(P[2 * m + 1]), Path{L.c(x), z}}));
  return out;
  });
}

std::optional<PathSet> t122(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const int n = L.n;
  const int m = n / 2 - 2;
  const auto u = link(L.half(1), {{L.h(x), L.c(z)},
                                  {L.c(x), L.h(y)},
                                  {L.c(y), L.h(z)}});
  if (!u) return std::nullopt;
  ScaffoldRequest rq{x, y, n - 2, n - 3, n - 4, {}, {}};
  return with_scaffold(L.quadrant(0b00), rq, [&](const Scaffold& sc)
                                       -> std::optional<PathSet> {
  const Scaffold* s = &sc;
  std::vector<Vertex> targets;
  for (Vertex v : s->xs) targets.push_back(L.h2(v));
  for (Vertex v : s->ys) targets.push_back(L.h2(v));
  targets.push_back(L.h2(y));
  targets.push_back(L.h2(x));
  const auto f = fan_into(L.quadrant(0b01), z, targets);
  if (!f) return std::nullopt;
  const auto& P = s->full;
  PathSet out;
  for (int i = 0; i < m; ++i) {
    out.push_back(x_middle(P[i], s->xs[i], *f, L.h2(s->xs[i])));
  }
  for (int i = 0; i < m; ++i) {
    out.push_back(y_middle(P[m + i], s->ys[i], *f, L.h2(s->ys[i])));
  }
  for (int i = m; i < n - 4; ++i) {
    out.push_back(z_middle(x, s->xs[i], L.h2(s->xs[i]), y, s->ys[i],
                           L.h2(s->ys[i]), *f));
  }
  out.push_back(cat({Path{x}, f->at(L.h2(x)), rev(f->at(L.h2(y))), Path{y}}));
  const Vertex last = s->xs[static_cast<std::size_t>(n - 4)];
  out.push_back(x_middle(P[2 * m + 1], last, *f, L.h2(last)));
  out.push_back(cat({rev(P[2 * m]), (*u)[0], Path{z}}));
  out.push_back(cat({Path{x}, (*u)[1], Path{y}, (*u)[2], Path{z}}));
  return out;
  });
}

// Pair in half 0, z in half 1. Variant B sends one x-path through x^c,
// variant A through a further x-stub. The last path reaches z through a
// neighbour of z in half 0, routed from x or (route_at_y) from y.
std::optional<PathSet> t13(const Levels& L, Vertex x, Vertex y, Vertex z,
                           bool variant_a, bool route_at_y) {
  const int n = L.n;
  const int m = n / 2 - 2;
  const int sx = variant_a ? n - 2 : n - 3;
  const int sy = n - 3;
  ScaffoldRequest rq{x, y, n - 2, sx, sy, {}, {}};
  if (route_at_y) rq = {y, x, n - 2, sy, sx, {}, {}};
  if (!variant_a) rq.no_stub.push_back(L.c2(x));
  for (Vertex w : {L.h(z), L.c(z)}) {
    if (w != (route_at_y ? x : y)) rq.route_to.push_back(w);
  }
  return with_scaffold(L.half(0), rq, [&](const Scaffold& sc)
                                       -> std::optional<PathSet> {
  Scaffold mirrored;
  const Scaffold* s = &sc;
  if (route_at_y) {
    for (const auto& p : sc.full) mirrored.full.push_back(rev(p));
    mirrored.xs = sc.ys;
    mirrored.ys = sc.xs;
    s = &mirrored;
  }
  std::vector<Vertex> targets;
  for (Vertex v : s->xs) targets.push_back(L.h(v));
  for (Vertex v : s->ys) targets.push_back(L.h(v));
  targets.push_back(L.h(x));
  targets.push_back(L.h(y));
  if (!variant_a) targets.push_back(L.c(x));
  const auto f = fan_into(L.half(1), z, targets);
  if (!f) return std::nullopt;
  const auto& P = s->full;
  PathSet out;
  for (int i = 0; i < m; ++i) {
    out.push_back(x_middle(P[i], s->xs[i], *f, L.h(s->xs[i])));
  }
  for (int i = 0; i < m; ++i) {
    out.push_back(y_middle(P[m + i], s->ys[i], *f, L.h(s->ys[i])));
  }
  for (int i = m; i < n - 3; ++i) {
    out.push_back(z_middle(x, s->xs[i], L.h(s->xs[i]), y, s->ys[i],
                           L.h(s->ys[i]), *f));
  }
  out.push_back(cat({Path{y}, f->at(L.h(y)), rev(f->at(L.h(x))), Path{x}}));
  if (variant_a) {
    const Vertex extra = s->xs[static_cast<std::size_t>(n - 3)];
    out.push_back(x_middle(P[2 * m], extra, *f, L.h(extra)));
  } else {
    out.push_back(cat({rev(P[2 * m]), f->at(L.c(x))}));
  }
  if (route_at_y) {
    out.push_back(cat({P[2 * m + 1], sc.route, Path{z}}));
  } else {
    out.push_back(cat({rev(P[2 * m + 1]), sc.route, Path{z}}));
  }
  return out;
  });
}

// ---- odd n -------------------------------------------------------------

std::optional<Path> c1_extra(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const auto u = link(L.half(1), {{L.h(x), L.h(y)}, {L.c(x), L.h(z)}});
  if (!u) return std::nullopt;
  return cat({Path{y}, rev((*u)[0]), Path{x}, (*u)[1], Path{z}});
}

std::optional<PathSet> c2(const Levels& L, Vertex x, Vertex y, Vertex z) {
  const int n = L.n;
  const int k = (n - 1) / 2;
  ScaffoldRequest rq{x, y, n - 1, n - 3, n - 3, {}, {}};
  return with_scaffold(L.half(0), rq, [&](const Scaffold& sc)
                                       -> std::optional<PathSet> {
  const Scaffold* s = &sc;
  std::vector<Vertex> targets;
  for (Vertex v : s->xs) targets.push_back(L.h(v));
  for (Vertex v : s->ys) targets.push_back(L.h(v));
  targets.push_back(L.h(x));
  targets.push_back(L.h(y));
  const auto f = fan_into(L.half(1), z, targets);
  if (!f) return std::nullopt;
  const auto& P = s->full;
  PathSet out;
  for (int i = 0; i < k; ++i) {
    out.push_back(x_middle(P[i], s->xs[i], *f, L.h(s->xs[i])));
  }
  for (int i = 0; i < k; ++i) {
    out.push_back(y_middle(P[k + i], s->ys[i], *f, L.h(s->ys[i])));
  }
  for (int i = k; i < n - 3; ++i) {
    out.push_back(z_middle(x, s->xs[i], L.h(s->xs[i]), y, s->ys[i],
                           L.h(s->ys[i]), *f));
  }
  out.push_back(cat({Path{x}, f->at(L.h(x)), rev(f->at(L.h(y))), Path{y}}));
  return out;
  });
}

// ---- dispatch ----------------------------------------------------------

struct Built {
  PathSet paths;
  std::string label;
  ConstructionTrace sub;  // entries of recursive calls
};

PathSet construct_rec(const AugmentedCube& cube, const Triple& d,
                      ConstructionTrace& trace);

bool valid(const CubeView& whole, const Triple& d, const PathSet& ps,
           int want) {
  return static_cast<int>(ps.size()) == want &&
         accepted(check_family(whole, d, ps));
}

const std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};

// Runs the case analysis on a canonical triple. On failure returns the label
// of the case that was attempted and an empty path set.
Built build_case(const AugmentedCube& cube, const Triple& d,
                 TriplePattern pattern) {
  const Levels L(cube);
  const int n = cube.dimension();
  const int want = target_count(n);
  const CubeView whole = CubeView::whole(cube);
  const Vertex x = d[0], y = d[1], z = d[2];
  Built b;
  auto accept = [&](std::optional<PathSet> ps) {
    if (ps && valid(whole, d, *ps, want)) {
      b.paths = std::move(*ps);
      return true;
    }
    return false;
  };

  if (n == 4) {
    switch (pattern) {
      case TriplePattern::SameQuadrant:
        b.label = "L8.1";
        accept(l81(d));
        return b;
      case TriplePattern::SplitQuadrants:
        b.label = "L8.2";
        if (!accept(l82(L, x, y, z))) accept(l82(L, y, x, z));
        return b;
      case TriplePattern::SplitHalves:
        if (y == L.c2(x)) {
          b.label = "L8.3.1";
          accept(l831(L, x, y, z));
        } else {
          b.label = "L8.3.2";
          if (!accept(l832(L, x, y, z))) accept(l832(L, y, x, z));
        }
        return b;
    }
  }

  if (n % 2 == 0) {
    switch (pattern) {
      case TriplePattern::SameQuadrant: {
        bool related = false;
        for (const auto& p : kPerms) {
          if (d[p[1]] == L.c3(d[p[0]])) related = true;
        }
        b.label = related ? "T1.1.1" : "T1.1.2";
        const AugmentedCube inner(n - 2);
        ConstructionTrace sub;
        PathSet base = construct_rec(inner, d, sub);
        for (const auto& p : kPerms) {
          const Vertex a = d[p[0]], c = d[p[1]], e = d[p[2]];
          if (related && c != L.c3(a)) continue;
          auto extra = related ? t111(L, a, c, e) : t112(L, a, c, e);
          if (!extra) continue;
          PathSet all = base;
          all.insert(all.end(), extra->begin(), extra->end());
          if (accept(std::move(all))) {
            b.sub = std::move(sub);
            return b;
          }
        }
        return b;
      }
      case TriplePattern::SplitQuadrants: {
        const bool related = L.c2(z) == x || L.c2(z) == y;
        b.label = related ? "T1.2.1" : "T1.2.2";
        if (related) {
          const Vertex a = L.c2(z) == x ? x : y;
          const Vertex c = a == x ? y : x;
          accept(t121(L, a, c, z));
        } else if (!accept(t122(L, x, y, z))) {
          accept(t122(L, y, x, z));
        }
        return b;
      }
      case TriplePattern::SplitHalves:
        b.label = "T1.3";
        for (bool variant_a : {false, true}) {
          for (bool at_y : {false, true}) {
            if (accept(t13(L, x, y, z, variant_a, at_y))) return b;
            if (accept(t13(L, y, x, z, variant_a, at_y))) return b;
          }
        }
        return b;
    }
  }

  if (pattern == TriplePattern::SplitHalves) {
    b.label = "C.2";
    if (!accept(c2(L, x, y, z))) accept(c2(L, y, x, z));
    return b;
  }
  b.label = "C.1";
  const AugmentedCube inner(n - 1);
  ConstructionTrace sub;
  PathSet base = construct_rec(inner, d, sub);
  for (const auto& p : kPerms) {
    const Vertex a = d[p[0]], c = d[p[1]], e = d[p[2]];
    if (c == L.c2(a) || e == L.c2(a)) continue;
    auto extra = c1_extra(L, a, c, e);
    if (!extra) continue;
    PathSet all = base;
    all.push_back(std::move(*extra));
    if (accept(std::move(all))) {
      b.sub = std::move(sub);
      return b;
    }
  }
  return b;
}

PathSet pull_back(const CanonicalTriple& c, PathSet ps) {
  for (auto& p : ps) {
    for (auto& v : p) v = c.pull_back(v);
  }
  return ps;
}

// Constructs on the original labels; appends this level's trace entry and
// then those of any recursive call.
PathSet construct_rec(const AugmentedCube& cube, const Triple& d,
                      ConstructionTrace& trace) {
  const auto canon = canonicalize_triple(cube, d);
  Built b = build_case(cube, canon.canonical, canon.pattern);
  TraceEntry entry{cube.dimension(), b.label, canon.transform, canon.roles,
                   false};
  if (b.paths.empty()) {
    const CubeView whole = CubeView::whole(cube);
    PathSet witness;
    const auto verdict =
        dpaths_feasible(whole, canon.canonical, target_count(cube.dimension()),
                        kFallbackBudget, &witness);
    if (verdict != Feasibility::Yes) {
      throw Error("no family of " +
                  std::to_string(target_count(cube.dimension())) +
                  " D-paths found for " + format_triple(cube, d));
    }
    entry.fallback = true;
    trace.push_back(std::move(entry));
    return pull_back(canon, std::move(witness));
  }
  trace.push_back(std::move(entry));
  trace.insert(trace.end(), b.sub.begin(), b.sub.end());
  return pull_back(canon, std::move(b.paths));
}

void orient(PathSet& ps) {
  for (auto& p : ps) {
    if (!p.empty() && p.back() < p.front()) std::reverse(p.begin(), p.end());
  }
}

void check_input(const AugmentedCube& cube, const Triple& d) {
  for (Vertex v : d) {
    if (!cube.contains(v)) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " is outside AQ_" +
                            std::to_string(cube.dimension()));
    }
  }
  if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) {
    throw InvalidArgument("terminals must be distinct");
  }
}

DPathFamily build_canonical(int n, const Triple& t) {
  if (n < 4) throw InvalidArgument("construction needs n >= 4");
  const AugmentedCube cube(n);
  check_input(cube, t);
  const auto canon = canonicalize_triple(cube, t);
  if (canon.canonical != t || canon.transform.word != 0) {
    throw InvalidArgument("triple " + format_triple(cube, t) +
                          " is not in canonical form");
  }
  Built b = build_case(cube, t, canon.pattern);
  if (b.paths.empty()) {
    throw ConstructionGap(b.label + " does not apply to " +
                          format_triple(cube, t));
  }
  DPathFamily f;
  f.terminals = t;
  f.paths = std::move(b.paths);
  orient(f.paths);
  f.trace.push_back({n, b.label, canon.transform, canon.roles, false});
  f.trace.insert(f.trace.end(), b.sub.begin(), b.sub.end());
  return f;
}

}  // namespace

DPathFamily construct(int n, const Triple& d) {
  if (n < 4) throw InvalidArgument("construction needs n >= 4");
  const AugmentedCube cube(n);
  check_input(cube, d);
  DPathFamily f;
  f.terminals = d;
  f.paths = construct_rec(cube, d, f.trace);
  orient(f.paths);
  return f;
}

DPathFamily construct_base4(const Triple& canonical) {
  return build_canonical(4, canonical);
}

DPathFamily construct_even(int n, const Triple& canonical) {
  if (n % 2 != 0) throw InvalidArgument("construct_even needs even n");
  return build_canonical(n, canonical);
}

DPathFamily construct_odd(int n, const Triple& canonical) {
  if (n % 2 == 0) throw InvalidArgument("construct_odd needs odd n");
  return build_canonical(n, canonical);
}

}  // namespace aqpath
