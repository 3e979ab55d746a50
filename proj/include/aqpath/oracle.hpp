#ifndef AQPATH_ORACLE_HPP
#define AQPATH_ORACLE_HPP

/**
 * \file oracle.hpp
 * Exact pi_G(D) for |D| = 3 on small graphs, exact pi_3 of small cubes, and
 * the counting bounds and common-neighbour tools that go with them.
 *
 * A D-path may be trimmed to run between two terminals with the third one
 * inside, so a family of m D-paths is a split profile (a, b, c) of paths
 * middled at x, y, z together with a packing of terminal-to-terminal
 * segments: a+b between x and y, b+c between y and z, a+c between x and z,
 * with pairwise disjoint interiors and at most one direct-edge segment per
 * pair. max_dpaths searches profiles by decreasing total and decides each
 * packing by branch and bound over the commodities each vertex may serve.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqpath/graph.hpp"
#include "aqpath/path.hpp"

namespace aqpath {

struct SplitProfile {
  int a = 0;  // paths with x in the middle
  int b = 0;  // paths with y in the middle
  int c = 0;  // paths with z in the middle

  int total() const { return a + b + c; }
  friend bool operator==(const SplitProfile&, const SplitProfile&) = default;
};

enum class OracleStatus {
  Exact,
  BudgetExhausted,  // the node budget ran out before the value was settled
};

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000;

struct OracleResult {
  OracleStatus status = OracleStatus::Exact;
  /// Exact value, or the best total with a witness when the budget ran out.
  int count = 0;
  /// Largest total not ruled out; equals count when exact.
  int upper = 0;
  SplitProfile profile;
  PathSet family;  // witness with `count` paths
  std::uint64_t nodes = 0;

  bool exact() const { return status == OracleStatus::Exact; }
};

/// Upper bound floor((deg x + deg y + deg z - r_D) / 4) where r_D counts the
/// vertices adjacent to all three terminals.
int triple_upper_bound(const Graph& g, const Triple& d);

/// Exact pi_G(D) with a witness family. Throws InvalidArgument for repeated
/// or foreign terminals and for an empty graph.
OracleResult max_dpaths(const Graph& g, const Triple& d,
                        std::uint64_t budget = kDefaultNodeBudget);

enum class Feasibility { Yes, No, Unknown };

/// Whether some family of exactly `total` D-paths exists. On Yes and when
/// `witness` is given, stores one such family there.
Feasibility dpaths_feasible(const Graph& g, const Triple& d, int total,
                            std::uint64_t budget = kDefaultNodeBudget,
                            PathSet* witness = nullptr,
                            std::uint64_t* nodes = nullptr);

/// Exact value by enumerating every terminal-to-terminal D-path and taking
/// a largest compatible subset. Independent of max_dpaths; |V| <= 14.
int brute_small(const Graph& g, const Triple& d);

inline constexpr std::size_t kBruteSmallLimit = 14;
inline constexpr std::size_t kExhaustiveLimit = 64;

struct Pi3Options {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;  // sampled triples
  std::uint64_t budget = kDefaultNodeBudget;  // per triple
  int jobs = 1;
};

struct Pi3Result {
  int value = 0;
  Triple argmin{};
  OracleStatus status = OracleStatus::Exact;
  std::size_t triples = 0;  // triples examined
};

/**
 * min over triples of pi_G(D). Exhaustive mode pins the first terminal to
 * the zero word on whole-cube views (translations are automorphisms) and is
 * refused above kExhaustiveLimit vertices. The argmin is the smallest
 * attaining triple in lexicographic order of the sorted triple.
 */
Pi3Result pi3_exact(const Graph& g, const Pi3Options& options);

/// The triples pi3_exact examines, in lexicographic order.
std::vector<Triple> pi3_triples(const Graph& g, const Pi3Options& options);

std::vector<Vertex> common_neighbors(const Graph& g,
                                     const std::vector<Vertex>& set);

struct CommonReport {
  int value = 0;
  std::vector<Vertex> witness;  // the first set attaining value
};

/// Largest common neighbourhood over all pairs (arity 2) or triples
/// (arity 3); first element pinned to the zero word on whole-cube views.
CommonReport max_common(const Graph& g, int arity);

/// floor((3k - r) / 4) for k >= 1, 0 <= r <= k.
int lemma4_bound(int k, int r);
/// lemma4_bound(2n - 1, 4) for n >= 4.
int lemma6_bound(int n);

struct AdjacencyCheck {
  Vertex terminal;
  Vertex neighbor;
  bool adjacent;
  std::string mask;  // joining mask label, empty when not adjacent
};

struct WitnessTriple {
  Triple d{};
  std::array<Vertex, 4> expected{};  // a, b, c, d
  std::vector<AdjacencyCheck> certificate;  // 12 entries, terminal-major
  std::vector<Vertex> common;  // common neighbourhood computed from scratch
  bool holds = false;          // all twelve adjacencies present
};

/**
 * x = 000 0..0, y = 011 1..1, z = 101 1..1 and the four vertices
 * a = 001 1..1, b = 111 1..1, c = 100 0..0, d = 010 0..0 adjacent to all
 * three. With printed_variant the suffix of z is left uncomplemented
 * (z = 101 0..0); that triple shares only c.
 */
WitnessTriple witness_triple(int n, bool printed_variant = false);

}  // namespace aqpath

#endif  // AQPATH_ORACLE_HPP
