#ifndef AQPATH_FLOW_HPP
#define AQPATH_FLOW_HPP

/**
 * \file flow.hpp
 * Internally disjoint paths, fans and linkages on any Graph view, computed
 * as unit vertex-capacity flows on the in/out split of the view.
 *
 * Forbidden vertices and edges are expressed by wrapping the view in a
 * RestrictedView. All routines are deterministic: augmenting paths are found
 * by BFS in ascending vertex order and paths are decomposed in that order.
 */

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "aqpath/graph.hpp"
#include "aqpath/path.hpp"

namespace aqpath {

/// The request could not be met; `achievable` is the best count found.
struct Insufficient {
  int achievable;
};

using PathsOrShortfall = std::variant<PathSet, Insufficient>;

inline bool succeeded(const PathsOrShortfall& r) {
  return std::holds_alternative<PathSet>(r);
}

/// k paths u..v pairwise sharing only u and v. The direct edge, if present,
/// counts as one path. On failure reports the u-v local connectivity.
PathsOrShortfall disjoint_paths(const Graph& g, Vertex u, Vertex v, int k);

/// |S| paths from x, one ending at each member of S, pairwise sharing only
/// x; no path passes through a member of S before its end.
PathsOrShortfall fan(const Graph& g, Vertex x, std::span<const Vertex> targets);

/// |A| fully vertex-disjoint paths pairing A with B; the pairing is chosen by
/// the flow, not the caller.
PathsOrShortfall linkage(const Graph& g, std::span<const Vertex> from,
                         std::span<const Vertex> to);

/// Disjoint paths for prescribed endpoint pairs (a small k-linkage search:
/// bounded candidate enumeration with backtracking). Each path avoids every
/// other pair's endpoints. Empty optional when no system was found.
std::optional<PathSet> specified_linkage(
    const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Largest number of internally disjoint u-v paths (direct edge counted).
int min_vertex_cut(const Graph& g, Vertex u, Vertex v);

/// Vertex connectivity; |V|-1 for complete graphs.
int connectivity(const Graph& g);

}  // namespace aqpath

#endif  // AQPATH_FLOW_HPP
