#ifndef AQPATH_SRC_FLOW_NETWORK_HPP
#define AQPATH_SRC_FLOW_NETWORK_HPP

// Unit-capacity max-flow used by the Menger routines. Internal header.

#include <vector>

namespace aqpath::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes = 0) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  int node_count() const { return static_cast<int>(adj_.size()); }

  void add_arc(int from, int to, int cap);

  /// Edmonds-Karp; augments until `limit` units or no augmenting path.
  /// BFS scans arcs in insertion order, so results are reproducible.
  int max_flow(int source, int sink, int limit);

  /// Splits the current flow into source-sink node sequences. Consumes the
  /// flow; call once.
  std::vector<std::vector<int>> decompose(int source, int sink);

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    int rev;
  };
  bool augment(int source, int sink);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> parent_node_;
  std::vector<int> parent_arc_;
};

}  // namespace aqpath::detail

#endif  // AQPATH_SRC_FLOW_NETWORK_HPP
