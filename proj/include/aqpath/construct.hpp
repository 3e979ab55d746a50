#ifndef AQPATH_CONSTRUCT_HPP
#define AQPATH_CONSTRUCT_HPP

/**
 * \file construct.hpp
 * Constructive lower bound: target_count(n) internally disjoint D-paths for
 * every triple D of AQ_n, n >= 4, together with a trace of the cases used.
 *
 * Case labels:
 *   L8.1    n = 4, all three terminals in one quadrant
 *   L8.2    n = 4, pair in one quadrant, third in the sibling quadrant
 *   L8.3.1  n = 4, pair split over a half with y = x^c', third in other half
 *   L8.3.2  n = 4, pair in one half otherwise, third in the other half
 *   T1.1.1  even n, one quadrant, two terminals related by c''
 *   T1.1.2  even n, one quadrant, no such pair
 *   T1.2.1  even n, pair + sibling quadrant, z^c' in the pair
 *   T1.2.2  even n, pair + sibling quadrant, otherwise
 *   T1.3    even n, pair in one half, third in the other
 *   C.1     odd n, all three in one half
 *   C.2     odd n, pair in one half, third in the other
 *
 * Level names: h = Hyper(1), c = Complement(1), h' = Hyper(2),
 * c' = Complement(2), c'' = Complement(3).
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aqpath/cube.hpp"
#include "aqpath/path.hpp"

namespace aqpath {

/// 3n/2 - 2 for even n, 3(n-1)/2 - 1 for odd n; n >= 4.
int target_count(int n);

struct TraceEntry {
  int dimension = 0;
  std::string label;
  XorTranslation transform;      // canonical = transform(original)
  std::array<int, 3> roles{};    // input index playing x, y, z
  bool fallback = false;

  /// "n=<n> <label> translate=<word> roles=i,j,k[ fallback]"
  std::string to_string() const;
};

using ConstructionTrace = std::vector<TraceEntry>;

struct DPathFamily {
  Triple terminals{};
  PathSet paths;
  ConstructionTrace trace;

  bool fallback() const;
  /// "# trace:" payload lines, outermost entry first.
  std::vector<std::string> trace_lines() const;
};

/// Thrown by the case builders when a literal transcription does not go
/// through for the given input; construct() answers with a fallback.
class ConstructionGap : public Error {
 public:
  using Error::Error;
};

/// Node budget for the fallback search (per call).
inline constexpr std::uint64_t kFallbackBudget = 20'000'000;

/**
 * Any three distinct vertices of AQ_n, n >= 4. Returns exactly
 * target_count(n) paths that pass check_family; paths are listed in case
 * order, each oriented from its smaller end terminal. When no case builder
 * succeeds, a flow search on the whole cube supplies the family and the
 * trace entry is flagged. Throws InvalidArgument for bad input and Error if
 * even the fallback fails.
 */
DPathFamily construct(int n, const Triple& d);

/// Case builders on canonical input: x = 0 and, for split patterns, the
/// pair in quadrant 00 / half 0 and z in quadrant 01 / half 1. Throw
/// InvalidArgument for non-canonical input and ConstructionGap on failure.
DPathFamily construct_base4(const Triple& canonical);
DPathFamily construct_even(int n, const Triple& canonical);
DPathFamily construct_odd(int n, const Triple& canonical);

}  // namespace aqpath

#endif  // AQPATH_CONSTRUCT_HPP
