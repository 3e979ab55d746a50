#include "flow_network.hpp"

#include <deque>

namespace aqpath::detail {

void FlowNetwork::add_arc(int from, int to, int cap) {
  auto& out = adj_[static_cast<std::size_t>(from)];
  auto& in = adj_[static_cast<std::size_t>(to)];
  out.push_back({to, cap, 0, static_cast<int>(in.size())});
  in.push_back({from, 0, 0, static_cast<int>(out.size()) - 1});
}

bool FlowNetwork::augment(int source, int sink) {
  const std::size_t count = adj_.size();
  parent_node_.assign(count, -1);
  parent_arc_.assign(count, -1);
  parent_node_[static_cast<std::size_t>(source)] = source;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const auto& arcs = adj_[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc& a = arcs[i];
      if (a.cap - a.flow <= 0) continue;
      if (parent_node_[static_cast<std::size_t>(a.to)] != -1) continue;
      parent_node_[static_cast<std::size_t>(a.to)] = u;
      parent_arc_[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
      if (a.to == sink) {
        for (int v = sink; v != source;) {
          const int p = parent_node_[static_cast<std::size_t>(v)];
          Arc& fwd = adj_[static_cast<std::size_t>(p)]
                         [static_cast<std::size_t>(
                             parent_arc_[static_cast<std::size_t>(v)])];
          fwd.flow += 1;
          adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(fwd.rev)]
              .flow -= 1;
          v = p;
        }
        return true;
      }
      queue.push_back(a.to);
    }
  }
  return false;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  while (total < limit && augment(source, sink)) ++total;
  return total;
}

std::vector<std::vector<int>> FlowNetwork::decompose(int source, int sink) {
  std::vector<std::vector<int>> paths;
  std::vector<int> position(adj_.size(), -1);
  for (;;) {
    std::vector<int> walk{source};
    position[static_cast<std::size_t>(source)] = 0;
    int u = source;
    while (u != sink) {
      bool moved = false;
      for (Arc& a : adj_[static_cast<std::size_t>(u)]) {
        if (a.cap > 0 && a.flow > 0) {
          a.flow -= 1;
          u = a.to;
          // Cut out circulations picked up on the way.
          if (int p = position[static_cast<std::size_t>(u)]; p >= 0) {
            for (std::size_t i = static_cast<std::size_t>(p) + 1;
                 i < walk.size(); ++i) {
              position[static_cast<std::size_t>(walk[i])] = -1;
            }
            walk.resize(static_cast<std::size_t>(p) + 1);
          } else {
            position[static_cast<std::size_t>(u)] =
                static_cast<int>(walk.size());
            walk.push_back(u);
          }
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    for (int node : walk) position[static_cast<std::size_t>(node)] = -1;
    if (u != sink) break;
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace aqpath::detail
