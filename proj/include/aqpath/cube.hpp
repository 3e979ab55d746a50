#ifndef AQPATH_CUBE_HPP
#define AQPATH_CUBE_HPP

/**
 * \file cube.hpp
 * Implicit augmented cube AQ_n.
 *
 * Vertices are n-bit words. Address bit 1 is the outermost prefix bit of the
 * recursive construction and is stored as the most significant bit of the
 * word, so the binary string of a vertex reads bit 1 first. Adjacency is
 * defined by 2n-1 XOR masks:
 *
 *   Hyper(d),      1 <= d <= n    : flips bit d
 *   Complement(d), 1 <= d <= n-1  : flips bits d..n
 *
 * No edge list is ever stored.
 */

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqpath {

using Vertex = std::uint32_t;

/// Largest dimension supported by the implicit representation.
inline constexpr int kMaxDimension = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for malformed arguments (bad dimension, level, vertex, flag).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Thrown when a size guard or search budget forbids the request.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

struct AdjacencyMask {
  enum class Kind { Hyper, Complement };
  Kind kind;
  int level;
  Vertex word;

  /// Short label: "h<d>" or "c<d>".
  std::string label() const;
};

struct Quadrant {
  unsigned label;  // (bit 1, bit 2) as a two-bit number, bit 1 high

  friend bool operator==(Quadrant, Quadrant) = default;
};

struct XorTranslation {
  Vertex word = 0;

  Vertex apply(Vertex x) const { return x ^ word; }
  /// Translations are involutions; the inverse is the translation itself.
  XorTranslation inverse() const { return *this; }
  friend bool operator==(XorTranslation, XorTranslation) = default;
};

using Triple = std::array<Vertex, 3>;

class AugmentedCube {
 public:
  explicit AugmentedCube(int n);

  int dimension() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const;
  bool contains(Vertex x) const { return x < vertex_count(); }

  /// All 2n-1 masks: Hyper(1..n) then Complement(1..n-1).
  const std::vector<AdjacencyMask>& masks() const { return masks_; }

  Vertex hyper_mask(int level) const;
  Vertex complement_mask(int level) const;

  Vertex h_neighbor(Vertex x, int level) const;
  Vertex c_neighbor(Vertex x, int level) const;

  /// Neighbours in mask order (Hyper(1..n), Complement(1..n-1)).
  std::vector<Vertex> neighbors(Vertex x) const;
  bool is_adjacent(Vertex x, Vertex y) const;
  /// The mask joining x and y, if they are adjacent.
  const AdjacencyMask* joining_mask(Vertex x, Vertex y) const;

  Quadrant quadrant(Vertex x) const;
  unsigned half(Vertex x) const;

  std::string format(Vertex x) const;
  Vertex parse(std::string_view text) const;

 private:
  void check_vertex(Vertex x) const;

  int n_;
  std::vector<AdjacencyMask> masks_;
};

Vertex translate(Vertex x, XorTranslation t);

/// Position of a triple relative to the two-level decomposition.
enum class TriplePattern {
  SameQuadrant,    // all three in one AQ_{n-2} copy
  SplitQuadrants,  // one half, two quadrants (pair + lone)
  SplitHalves,     // pair in one half, lone vertex in the other
};

std::string_view to_string(TriplePattern p);

struct CanonicalTriple {
  Triple canonical;           // roles (x, y, z) after translation; x == 0
  XorTranslation transform;   // canonical = transform.apply(original)
  std::array<int, 3> roles;   // roles[r] = input index playing role r
  TriplePattern pattern;

  Vertex pull_back(Vertex v) const { return transform.inverse().apply(v); }
};

/**
 * Relabels a triple by an XOR translation and a role permutation so that the
 * case patterns of the constructor hold literally:
 *  - the lone vertex (alone in its half, or alone in its quadrant when the
 *    triple lies in one half) plays z;
 *  - x is the smaller of the remaining two and is moved to the zero word,
 *    which places the pair in half 0 (resp. quadrant 00) and z in half 1
 *    (resp. quadrant 01).
 * Bit permutations are never used; they are not automorphisms.
 */
CanonicalTriple canonicalize_triple(const AugmentedCube& cube, const Triple& d);

TriplePattern classify_triple(const AugmentedCube& cube, const Triple& d);

/// Parses "X,Y,Z" of n-character binary strings.
Triple parse_triple(const AugmentedCube& cube, std::string_view text);
std::string format_triple(const AugmentedCube& cube, const Triple& d,
                          char sep = ',');

}  // namespace aqpath

#endif  // AQPATH_CUBE_HPP
