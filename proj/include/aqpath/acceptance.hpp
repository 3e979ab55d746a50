#ifndef AQPATH_ACCEPTANCE_HPP
#define AQPATH_ACCEPTANCE_HPP

/**
 * \file acceptance.hpp
 * The ten acceptance criteria as callable checks, shared by the acceptance
 * test binary and `aqpath report`.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace aqpath {

struct AcceptanceOptions {
  int nmax = 6;                  // criteria needing a larger cube are skipped
  int jobs = 1;
  std::uint64_t seed = 20240611;
  std::size_t random_triples = 10000;  // AQ_6 sample of criterion 2
};

enum class Outcome { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Fail;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1..10). Exceptions inside a check become Fail.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS  3  constructive odd case: <detail> [1.2s]"
std::string format_result(const CriterionResult& r);

}  // namespace aqpath

#endif  // AQPATH_ACCEPTANCE_HPP
