#ifndef VINC_WILF_HPP
#define VINC_WILF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "pattern.hpp"
#include "stats.hpp"

namespace vinc {

/// Per-length comparison of avoider counts (and statistic tables when a kind
/// is given) for two patterns.
struct WilfReport {
  std::string pattern_a;
  std::string pattern_b;
  int n_max = 0;
  std::optional<StatKind> stat;
  struct Row {
    int n = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    bool counts_agree = false;
    bool tables_agree = true;  // trivially true when no stat requested
  };
  std::vector<Row> rows;
  bool equivalent = true;
  std::optional<int> first_mismatch_n;
};

WilfReport wilf_check(const AnyPattern& a, const AnyPattern& b, int n_max,
                      std::optional<StatKind> stat = std::nullopt, int threads = 1);

/// Set equality (not just counts) of S_n(v) and S_n(b) for all n <= n_max.
struct SetCoincidenceReport {
  std::string vincular;
  std::string barred;
  int n_max = 0;
  bool equal = true;
  std::optional<int> first_mismatch_n;
  std::optional<Permutation> witness;  // in exactly one of the two sets
  std::vector<std::uint64_t> sizes;    // |S_n| per n, 1..n_max
};

SetCoincidenceReport barred_set_coincidence(const VincularPattern& v, const BarredPattern& b,
                                            int n_max);

/// Wilf classes of a pattern list, keyed by count vectors over n = 1..n_max.
struct WilfClasses {
  int n_max = 0;
  struct Class {
    std::vector<std::string> patterns;
    std::vector<std::uint64_t> counts;
  };
  std::vector<Class> classes;
};
WilfClasses classify_patterns(const std::vector<AnyPattern>& patterns, int n_max, int threads = 1);

}  // namespace vinc

#endif
