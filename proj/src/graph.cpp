#include "aqpath/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace aqpath {

std::size_t Graph::degree(Vertex v) const {
  std::vector<Vertex> nb;
  neighbors(v, nb);
  return nb.size();
}

std::string Graph::format(Vertex v) const {
  std::string s(static_cast<std::size_t>(label_bits()), '0');
  const int bits = label_bits();
  for (int i = 0; i < bits; ++i) {
    if ((v >> (bits - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v : vertices()) twice += degree(v);
  return twice / 2;
}

// ---------------------------------------------------------------------------

CubeView::CubeView(const AugmentedCube& cube, int prefix_bits,
                   unsigned allowed)
    : cube_(cube), prefix_bits_(prefix_bits), allowed_(allowed) {
  const auto count = cube_.vertex_count();
  for (Vertex v = 0; v < count; ++v) {
    if (contains(v)) vertices_.push_back(v);
  }
}

CubeView CubeView::whole(const AugmentedCube& cube) {
  return CubeView(cube, 0, 1U);
}

CubeView CubeView::half(const AugmentedCube& cube, unsigned bit) {
  if (cube.dimension() < 2) {
    throw InvalidArgument("half view undefined for n < 2");
  }
  if (bit > 1) throw InvalidArgument("half bit must be 0 or 1");
  return CubeView(cube, 1, 1U << bit);
}

CubeView CubeView::quadrant(const AugmentedCube& cube, Quadrant q) {
  if (cube.dimension() < 3) {
    throw InvalidArgument("quadrant view undefined for n < 3");
  }
  if (q.label > 3) throw InvalidArgument("quadrant label out of range");
  return CubeView(cube, 2, 1U << q.label);
}

CubeView CubeView::diamond(const AugmentedCube& cube, Quadrant a, Quadrant b) {
  if (cube.dimension() < 3) {
    throw InvalidArgument("diamond view undefined for n < 3");
  }
  if (a.label > 3 || b.label > 3 || a == b) {
    throw InvalidArgument("diamond needs two distinct quadrants");
  }
  return CubeView(cube, 2, (1U << a.label) | (1U << b.label));
}

bool CubeView::contains(Vertex v) const {
  if (!cube_.contains(v)) return false;
  const unsigned prefix = v >> (cube_.dimension() - prefix_bits_);
  return ((allowed_ >> prefix) & 1U) != 0;
}

bool CubeView::adjacent(Vertex u, Vertex v) const {
  return contains(u) && contains(v) && cube_.is_adjacent(u, v);
}

void CubeView::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  if (!contains(v)) return;
  for (const auto& m : cube_.masks()) {
    const Vertex w = v ^ m.word;
    if (contains(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
}

std::optional<int> CubeView::whole_cube_dimension() const {
  if (prefix_bits_ == 0) return cube_.dimension();
  return std::nullopt;
}

CubeView induced_half(const AugmentedCube& cube, unsigned bit) {
  return CubeView::half(cube, bit);
}

CubeView induced_quadrant(const AugmentedCube& cube, Quadrant q) {
  return CubeView::quadrant(cube, q);
}

// ---------------------------------------------------------------------------

ExplicitGraph::ExplicitGraph(int label_bits, std::vector<Vertex> vertices,
                             const std::vector<std::pair<Vertex, Vertex>>& edges)
    : bits_(label_bits), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  adjacency_.resize(vertices_.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop in graph");
    const std::size_t iu = index(u), iv = index(v);
    if (iu == vertices_.size() || iv == vertices_.size()) {
      throw InvalidArgument("edge endpoint not in vertex set");
    }
    adjacency_[iu].push_back(v);
    adjacency_[iv].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t ExplicitGraph::index(Vertex v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return vertices_.size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool ExplicitGraph::contains(Vertex v) const {
  return index(v) != vertices_.size();
}

bool ExplicitGraph::adjacent(Vertex u, Vertex v) const {
  const std::size_t iu = index(u);
  if (iu == vertices_.size()) return false;
  const auto& list = adjacency_[iu];
  return std::binary_search(list.begin(), list.end(), v);
}

void ExplicitGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  const std::size_t iv = index(v);
  if (iv == vertices_.size()) return;
  out = adjacency_[iv];
}

// ---------------------------------------------------------------------------

RestrictedView::RestrictedView(
    const Graph& base, std::span<const Vertex> forbidden_vertices,
    std::span<const std::pair<Vertex, Vertex>> forbidden_edges)
    : base_(base),
      forbidden_(forbidden_vertices.begin(), forbidden_vertices.end()) {
  std::sort(forbidden_.begin(), forbidden_.end());
  for (auto [u, v] : forbidden_edges) {
    forbidden_edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(forbidden_edges_.begin(), forbidden_edges_.end());
  for (Vertex v : base_.vertices()) {
    if (!std::binary_search(forbidden_.begin(), forbidden_.end(), v)) {
      vertices_.push_back(v);
    }
  }
}

bool RestrictedView::contains(Vertex v) const {
  return base_.contains(v) &&
         !std::binary_search(forbidden_.begin(), forbidden_.end(), v);
}

bool RestrictedView::edge_forbidden(Vertex u, Vertex v) const {
  const std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
  return std::binary_search(forbidden_edges_.begin(), forbidden_edges_.end(),
                            key);
}

bool RestrictedView::adjacent(Vertex u, Vertex v) const {
  return contains(u) && contains(v) && base_.adjacent(u, v) &&
         !edge_forbidden(u, v);
}

void RestrictedView::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  if (!contains(v)) return;
  std::vector<Vertex> all;
  base_.neighbors(v, all);
  for (Vertex w : all) {
    if (contains(w) && !edge_forbidden(v, w)) out.push_back(w);
  }
}

// ---------------------------------------------------------------------------

namespace {

void write_edges(std::ostream& out, const Graph& g) {
  std::vector<Vertex> nb;
  for (Vertex u : g.vertices()) {
    g.neighbors(u, nb);
    for (Vertex v : nb) {
      if (u < v) out << "E " << g.format(u) << ' ' << g.format(v) << '\n';
    }
  }
}

Vertex parse_label(const std::string& text, int bits, int line_no) {
  if (text.size() != static_cast<std::size_t>(bits) ||
      text.find_first_not_of("01") != std::string::npos) {
    throw InvalidArgument("line " + std::to_string(line_no) + ": bad vertex '" +
                          text + "'");
  }
  Vertex v = 0;
  for (char ch : text) v = (v << 1) | static_cast<Vertex>(ch - '0');
  return v;
}

}  // namespace

void write_graph_text(std::ostream& out, const Graph& g) {
  if (auto n = g.whole_cube_dimension()) {
    out << "AQ n=" << *n << '\n';
  } else {
    out << "G n=" << g.label_bits() << '\n';
  }
  write_edges(out, g);
}

void write_cube_text(std::ostream& out, const AugmentedCube& cube) {
  write_graph_text(out, CubeView::whole(cube));
}

std::unique_ptr<Graph> read_graph_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string kind;
  int bits = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream header(line);
    std::string size_field;
    header >> kind >> size_field;
    if ((kind != "AQ" && kind != "G") || size_field.rfind("n=", 0) != 0) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": expected 'AQ n=<n>' or 'G n=<bits>' header");
    }
    try {
      bits = std::stoi(size_field.substr(2));
    } catch (const std::exception&) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": bad size field");
    }
    if (bits < 1 || bits > kMaxDimension) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": label width out of range");
    }
    break;
  }
  if (bits < 0) throw InvalidArgument("empty graph file");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag, a, b, extra;
    fields >> tag >> a >> b;
    if (tag != "E" || b.empty() || (fields >> extra)) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": expected 'E <u> <v>'");
    }
    const Vertex u = parse_label(a, bits, line_no);
    const Vertex v = parse_label(b, bits, line_no);
    edges.emplace_back(u, v);
    vertices.push_back(u);
    vertices.push_back(v);
  }

  if (kind == "AQ") {
    const AugmentedCube cube(bits);
    std::vector<std::pair<Vertex, Vertex>> norm;
    for (auto [u, v] : edges) {
      if (!cube.is_adjacent(u, v)) {
        throw InvalidArgument("edge " + cube.format(u) + " " + cube.format(v) +
                              " is not an AQ_" + std::to_string(bits) +
                              " edge");
      }
      norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    if (norm.size() != cube.edge_count()) {
      throw InvalidArgument("AQ file lists " + std::to_string(norm.size()) +
                            " distinct edges, expected " +
                            std::to_string(cube.edge_count()));
    }
    return std::make_unique<CubeView>(CubeView::whole(cube));
  }
  return std::make_unique<ExplicitGraph>(bits, std::move(vertices), edges);
}

}  // namespace aqpath
