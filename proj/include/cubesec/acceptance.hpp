#pragma once

// Reproduction battery: every criterion is a self-contained numerical
// experiment that reports pass/fail plus a one-line detail.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cubesec {

struct AcceptanceOptions {
  std::vector<std::string> only;  // criterion ids; empty runs everything
  int n_max = 10;                 // largest n for the planar optimizer runs
  double eps_tight = 1e-10;
  std::uint64_t seed = 20240607;
  int restarts = 32;
  std::ostream* log = nullptr;  // progress lines, if set
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  bool flagged = false;  // loud warning that does not by itself fail
};

/// Ids in execution order.
std::vector<std::string> criterion_ids();

/// Throws DomainError for an unknown id in options.only.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One aligned line per criterion followed by a summary line.
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace cubesec
