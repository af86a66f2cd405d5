#ifndef VINC_CHECKS_HPP
#define VINC_CHECKS_HPP

#include <string>
#include <vector>

#include "wilf.hpp"

namespace vinc {

/// One acceptance-suite criterion outcome.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full verification suite: exact desk-scale checks of every claim the
/// library implements, from base counts through the series cross-checks.
std::vector<CriterionResult> run_acceptance_suite(int threads);

/// Both open equivalences: 23-1-4 = 1-23-4 and 14-2-3 = 2-14-3, checked for
/// every n <= n_max.
struct ConjectureReport {
  int n_max = 0;
  bool pass = true;
  std::vector<WilfReport> parts;
};
ConjectureReport run_conjecture(int n_max, int threads);

}  // namespace vinc

#endif
