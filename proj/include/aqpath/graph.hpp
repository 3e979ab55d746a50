#ifndef AQPATH_GRAPH_HPP
#define AQPATH_GRAPH_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqpath/cube.hpp"

namespace aqpath {

/**
 * Read-only graph view used by the flow, oracle and verifier code.
 *
 * Vertices carry their cube labels (binary words of label_bits() bits), are
 * listed in ascending order, and neighbors() reports ascending labels. Views
 * are immutable after construction and safe to share between threads.
 */
class Graph {
 public:
  virtual ~Graph() = default;

  virtual int label_bits() const = 0;
  virtual const std::vector<Vertex>& vertices() const = 0;
  virtual bool contains(Vertex v) const = 0;
  virtual bool adjacent(Vertex u, Vertex v) const = 0;
  /// Replaces `out` with the neighbours of v inside the view, ascending.
  virtual void neighbors(Vertex v, std::vector<Vertex>& out) const = 0;

  /// Set when the view is a whole AQ_n (translation-transitive).
  virtual std::optional<int> whole_cube_dimension() const {
    return std::nullopt;
  }

  std::size_t size() const { return vertices().size(); }
  std::size_t degree(Vertex v) const;
  std::string format(Vertex v) const;
  std::size_t edge_count() const;
};

/// Induced subgraph of AQ_n on a union of halves or quadrants.
class CubeView final : public Graph {
 public:
  static CubeView whole(const AugmentedCube& cube);
  static CubeView half(const AugmentedCube& cube, unsigned bit);
  static CubeView quadrant(const AugmentedCube& cube, Quadrant q);
  /// Two quadrants plus every cube edge between them. For a pair that
  /// differs in bit 1 only one perfect matching joins them.
  static CubeView diamond(const AugmentedCube& cube, Quadrant a, Quadrant b);

  const AugmentedCube& cube() const { return cube_; }

  int label_bits() const override { return cube_.dimension(); }
  const std::vector<Vertex>& vertices() const override { return vertices_; }
  bool contains(Vertex v) const override;
  bool adjacent(Vertex u, Vertex v) const override;
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  std::optional<int> whole_cube_dimension() const override;

 private:
  CubeView(const AugmentedCube& cube, int prefix_bits, unsigned allowed);

  AugmentedCube cube_;
  int prefix_bits_;
  unsigned allowed_;  // bit p set when prefix value p is part of the view
  std::vector<Vertex> vertices_;
};

CubeView induced_half(const AugmentedCube& cube, unsigned bit);
CubeView induced_quadrant(const AugmentedCube& cube, Quadrant q);

/// Graph with an explicit adjacency list (text input, tests).
class ExplicitGraph final : public Graph {
 public:
  ExplicitGraph(int label_bits, std::vector<Vertex> vertices,
                const std::vector<std::pair<Vertex, Vertex>>& edges);

  int label_bits() const override { return bits_; }
  const std::vector<Vertex>& vertices() const override { return vertices_; }
  bool contains(Vertex v) const override;
  bool adjacent(Vertex u, Vertex v) const override;
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;

 private:
  std::size_t index(Vertex v) const;

  int bits_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A view with forbidden vertices and edges removed from every query.
class RestrictedView final : public Graph {
 public:
  RestrictedView(const Graph& base, std::span<const Vertex> forbidden_vertices,
                 std::span<const std::pair<Vertex, Vertex>> forbidden_edges =
                     {});

  int label_bits() const override { return base_.label_bits(); }
  const std::vector<Vertex>& vertices() const override { return vertices_; }
  bool contains(Vertex v) const override;
  bool adjacent(Vertex u, Vertex v) const override;
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;

 private:
  bool edge_forbidden(Vertex u, Vertex v) const;

  const Graph& base_;
  std::vector<Vertex> forbidden_;
  std::vector<std::pair<Vertex, Vertex>> forbidden_edges_;
  std::vector<Vertex> vertices_;
};

/**
 * Text graph format:
 *
 *   AQ n=<n>            (or  G n=<bits>  for arbitrary graphs)
 *   E <u> <v>           one line per edge, u < v, lexicographic order
 *
 * Vertices are written as fixed-width binary strings.
 */
void write_graph_text(std::ostream& out, const Graph& g);
void write_cube_text(std::ostream& out, const AugmentedCube& cube);

/// Parses either header. An `AQ` file must list exactly the edges of AQ_n
/// and yields a whole-cube view; a `G` file yields an ExplicitGraph on the
/// vertices that appear in its edges.
std::unique_ptr<Graph> read_graph_text(std::istream& in);

}  // namespace aqpath

#endif  // AQPATH_GRAPH_HPP
