#ifndef AQPATH_VERIFY_HPP
#define AQPATH_VERIFY_HPP

/**
 * \file verify.hpp
 * Referee for families of internally disjoint D-paths.
 *
 * A family is accepted iff every path is a simple path of the view, contains
 * all three terminals, any two paths share exactly the terminals, and no edge
 * appears in two paths. The checker relies on Graph::contains/adjacent and
 * set operations only.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aqpath/graph.hpp"
#include "aqpath/path.hpp"

namespace aqpath {

enum class ViolationKind {
  NotAPath,
  NotSimple,
  MissingTerminal,
  VertexOverlap,
  EdgeOverlap,
  WrongGraph,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<int> paths;  // offending path indices, 0-based
  std::string detail;      // offending element, as text
};

struct Accept {
  int count;
};

using Verdict = std::variant<Accept, Violation>;

inline bool accepted(const Verdict& v) {
  return std::holds_alternative<Accept>(v);
}

/// Simplicity and adjacency only. Vertices outside the view are WrongGraph.
Verdict check_path(const Graph& g, const Path& path);

/// Full D-path family check. Terminal sets with repeated or foreign
/// vertices are reported as WrongGraph.
Verdict check_family(const Graph& g, const Triple& terminals,
                     const PathSet& paths);

/// One-line rendering: "OK <count>" or "VIOLATION <kind> <detail>".
std::string render(const Verdict& v);

/**
 * Family text format:
 *
 *   # trace: <free text>      (any number, optional)
 *   D <x> <y> <z>
 *   P <v1> <v2> ... <vk>      (one per path)
 *   OK <k> | VIOLATION ...    (optional verdict line, ignored on input)
 *
 * Vertices are binary strings of the cube dimension.
 */
struct FamilyText {
  Triple terminals{};
  PathSet paths;
  std::vector<std::string> trace;
  /// Set when some label does not belong to AQ_bits (width or alphabet);
  /// the verifier reports this as WrongGraph rather than a syntax error.
  std::optional<std::string> wrong_graph;
};

/// Throws InvalidArgument on structural syntax errors (missing or repeated
/// D line, unknown line tag).
FamilyText read_family_text(std::istream& in, int bits);

void write_family_text(std::ostream& out, const AugmentedCube& cube,
                       const Triple& terminals, const PathSet& paths,
                       const std::vector<std::string>& trace = {});

}  // namespace aqpath

#endif  // AQPATH_VERIFY_HPP
