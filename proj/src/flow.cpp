#include "aqpath/flow.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>

#include "flow_network.hpp"

namespace aqpath {

namespace {

using detail::FlowNetwork;

// In/out split of a view: vertex i owns nodes 2i (in) and 2i+1 (out).
class SplitNetwork {
 public:
  template <typename ThroughPredicate>
  SplitNetwork(const Graph& g, ThroughPredicate through)
      : verts_(g.vertices()),
        net_(static_cast<int>(2 * verts_.size())) {
    std::vector<Vertex> nb;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (through(verts_[i])) net_.add_arc(in(i), out(i), 1);
    }
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      g.neighbors(verts_[i], nb);
      for (Vertex w : nb) net_.add_arc(out(i), in(index(w)), 1);
    }
  }

  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(
        std::lower_bound(verts_.begin(), verts_.end(), v) - verts_.begin());
  }
  static int in(std::size_t i) { return static_cast<int>(2 * i); }
  static int out(std::size_t i) { return static_cast<int>(2 * i + 1); }
  int in(Vertex v, int) const { return in(index(v)); }
  FlowNetwork& net() { return net_; }

  PathSet to_paths(const std::vector<std::vector<int>>& walks) const {
    PathSet paths;
    const int split_nodes = static_cast<int>(2 * verts_.size());
    for (const auto& walk : walks) {
      Path p;
      for (int node : walk) {
        if (node >= split_nodes) continue;
        const Vertex v = verts_[static_cast<std::size_t>(node / 2)];
        if (p.empty() || p.back() != v) p.push_back(v);
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

 private:
  const std::vector<Vertex>& verts_;
  FlowNetwork net_;
};

void require_member(const Graph& g, Vertex v, const char* role) {
  if (!g.contains(v)) {
    throw InvalidArgument(std::string(role) + " " + g.format(v) +
                          " is not available in the view");
  }
}

bool has(std::span<const Vertex> set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

PathsOrShortfall disjoint_paths(const Graph& g, Vertex u, Vertex v, int k) {
  if (u == v) throw InvalidArgument("disjoint_paths needs u != v");
  if (k < 1) throw InvalidArgument("disjoint_paths needs k >= 1");
  require_member(g, u, "endpoint");
  require_member(g, v, "endpoint");
  SplitNetwork split(g, [&](Vertex w) { return w != u && w != v; });
  const int s = SplitNetwork::out(split.index(u));
  const int t = SplitNetwork::in(split.index(v));
  int flow = split.net().max_flow(s, t, k);
  if (flow < k) {
    return Insufficient{flow};
  }
  return split.to_paths(split.net().decompose(s, t));
}

PathsOrShortfall fan(const Graph& g, Vertex x,
                     std::span<const Vertex> targets) {
  if (targets.empty()) throw InvalidArgument("fan needs a non-empty target set");
  if (has(targets, x)) throw InvalidArgument("fan source lies in its target set");
  require_member(g, x, "fan source");
  for (Vertex s : targets) require_member(g, s, "fan target");
  std::vector<Vertex> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("fan targets must be distinct");
  }

  SplitNetwork split(g, [&](Vertex w) {
    return w != x && !std::binary_search(sorted.begin(), sorted.end(), w);
  });
  const int sink = split.net().add_node();
  for (Vertex s : targets) {
    split.net().add_arc(SplitNetwork::in(split.index(s)), sink, 1);
  }
  const int source = SplitNetwork::out(split.index(x));
  const int want = static_cast<int>(targets.size());
  const int flow = split.net().max_flow(source, sink, want);
  if (flow < want) return Insufficient{flow};

  // Report paths in the order the targets were given.
  PathSet found = split.to_paths(split.net().decompose(source, sink));
  PathSet ordered;
  for (Vertex s : targets) {
    for (auto& p : found) {
      if (!p.empty() && p.back() == s) {
        ordered.push_back(std::move(p));
        p.clear();
        break;
      }
    }
  }
  return ordered;
}

PathsOrShortfall linkage(const Graph& g, std::span<const Vertex> from,
                         std::span<const Vertex> to) {
  if (from.size() != to.size() || from.empty()) {
    throw InvalidArgument("linkage needs |A| = |B| >= 1");
  }
  for (Vertex a : from) {
    if (has(to, a)) throw InvalidArgument("linkage sets must be disjoint");
    require_member(g, a, "linkage source");
  }
  for (Vertex b : to) require_member(g, b, "linkage target");

  SplitNetwork split(g, [](Vertex) { return true; });
  const int source = split.net().add_node();
  const int sink = split.net().add_node();
  for (Vertex a : from) {
    split.net().add_arc(source, SplitNetwork::in(split.index(a)), 1);
  }
  for (Vertex b : to) {
    split.net().add_arc(SplitNetwork::out(split.index(b)), sink, 1);
  }
  const int want = static_cast<int>(from.size());
  const int flow = split.net().max_flow(source, sink, want);
  if (flow < want) return Insufficient{flow};
  return split.to_paths(split.net().decompose(source, sink));
}

int min_vertex_cut(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("min_vertex_cut needs u != v");
  require_member(g, u, "endpoint");
  require_member(g, v, "endpoint");
  SplitNetwork split(g, [&](Vertex w) { return w != u && w != v; });
  return split.net().max_flow(SplitNetwork::out(split.index(u)),
                              SplitNetwork::in(split.index(v)), INT_MAX);
}

int connectivity(const Graph& g) {
  const auto& verts = g.vertices();
  if (verts.size() < 2) return 0;
  int best = INT_MAX;
  for (Vertex v : verts) best = std::min(best, static_cast<int>(g.degree(v)));
  // A minimum separator misses one of the first best+1 vertices; pairing
  // that vertex with everything after it finds the separator.
  for (std::size_t i = 0; i < verts.size() && static_cast<int>(i) <= best;
       ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Vertex u = verts[i], v = verts[j];
      SplitNetwork split(g, [&](Vertex w) { return w != u && w != v; });
      const int local = split.net().max_flow(
          SplitNetwork::out(split.index(u)), SplitNetwork::in(split.index(v)),
          best);
      best = std::min(best, local);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Prescribed-pair linkage.

namespace {

class PairRouter {
 public:
  PairRouter(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs)
      : g_(g), pairs_(pairs.begin(), pairs.end()) {
    for (auto [a, b] : pairs_) {
      endpoints_.push_back(a);
      endpoints_.push_back(b);
    }
  }

  std::optional<PathSet> solve() {
    std::vector<std::size_t> order(pairs_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // Try each rotation of the pair order; the first solution wins.
    for (std::size_t r = 0; r < order.size(); ++r) {
      chosen_.assign(pairs_.size(), {});
      blocked_.clear();
      budget_ = 4000;
      if (search(order, 0)) return chosen_;
      std::rotate(order.begin(), order.begin() + 1, order.end());
    }
    return std::nullopt;
  }

 private:
  bool usable(Vertex v, std::size_t pair) const {
    if (!g_.contains(v)) return false;
    if (std::find(blocked_.begin(), blocked_.end(), v) != blocked_.end()) {
      return false;
    }
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      if (j == pair) continue;
      if (pairs_[j].first == v || pairs_[j].second == v) return false;
    }
    return true;
  }

  // BFS distances to `target` through usable vertices.
  std::vector<int> distances(Vertex target, std::size_t pair) const {
    const auto& verts = g_.vertices();
    std::vector<int> dist(verts.size(), -1);
    auto idx = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::deque<Vertex> queue{target};
    dist[idx(target)] = 0;
    std::vector<Vertex> nb;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      g_.neighbors(u, nb);
      for (Vertex w : nb) {
        if (!usable(w, pair) || dist[idx(w)] >= 0) continue;
        dist[idx(w)] = dist[idx(u)] + 1;
        queue.push_back(w);
      }
    }
    return dist;
  }

  std::vector<Path> candidates(std::size_t pair, bool last) const {
    const auto [s, t] = pairs_[pair];
    std::vector<Path> out;
    const auto dist = distances(t, pair);
    const auto& verts = g_.vertices();
    auto d_of = [&](Vertex v) {
      return dist[static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())];
    };
    const int shortest = d_of(s);
    if (shortest < 0) return out;
    const int slack = last ? 0 : 2;
    const std::size_t cap = last ? 1 : 24;
    for (int len = shortest; len <= shortest + slack && out.size() < cap;
         ++len) {
      Path path{s};
      enumerate(path, t, len, pair, d_of, out, cap);
    }
    return out;
  }

  template <typename Dist>
  void enumerate(Path& path, Vertex t, int len, std::size_t pair, Dist& d_of,
                 std::vector<Path>& out, std::size_t cap) const {
    if (out.size() >= cap) return;
    const Vertex u = path.back();
    const int used = static_cast<int>(path.size()) - 1;
    if (u == t) {
      if (used == len) out.push_back(path);
      return;
    }
    std::vector<Vertex> nb;
    g_.neighbors(u, nb);
    for (Vertex w : nb) {
      if (!usable(w, pair) && w != t) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      const int dw = d_of(w);
      if (dw < 0 || used + 1 + dw > len) continue;
      path.push_back(w);
      enumerate(path, t, len, pair, d_of, out, cap);
      path.pop_back();
      if (out.size() >= cap) return;
    }
  }

  bool search(const std::vector<std::size_t>& order, std::size_t depth) {
    if (depth == order.size()) return true;
    if (budget_-- <= 0) return false;
    const std::size_t pair = order[depth];
    const bool last = depth + 1 == order.size();
    for (const Path& p : candidates(pair, last)) {
      const std::size_t mark = blocked_.size();
      blocked_.insert(blocked_.end(), p.begin(), p.end());
      chosen_[pair] = p;
      if (search(order, depth + 1)) return true;
      blocked_.resize(mark);
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Vertex> endpoints_;
  std::vector<Vertex> blocked_;
  PathSet chosen_;
  int budget_ = 0;
};

}  // namespace

std::optional<PathSet> specified_linkage(
    const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Vertex> ends;
  for (auto [a, b] : pairs) {
    require_member(g, a, "linkage endpoint");
    require_member(g, b, "linkage endpoint");
    ends.push_back(a);
    ends.push_back(b);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw InvalidArgument("prescribed pairs must have distinct endpoints");
  }
  if (pairs.empty()) return PathSet{};
  return PairRouter(g, pairs).solve();
}

}  // namespace aqpath
