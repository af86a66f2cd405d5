#ifndef VINC_DELETION_HPP
#define VINC_DELETION_HPP

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "pattern.hpp"
#include "word.hpp"

namespace vinc {

/// The deletion map d_R: drop the letters at the 1-based positions in R, then
/// subtract from each survivor the number of deleted letters smaller than it.
/// On full permutations this equals delete-then-reduce.
Word delete_map(const Word& w, const std::vector<int>& positions);

/// A vincular pattern of the shape sigma_1...sigma_k - sigma_{k+1}: head
/// fully adjacent, tail letter detached.  The prefix-class propositions apply
/// only to this shape.
class VincularTailPattern {
 public:
  /// Empty when the pattern is not of tail shape.
  static std::optional<VincularTailPattern> from(const VincularPattern& p);

  const VincularPattern& pattern() const { return pattern_; }
  int k() const { return pattern_.length() - 1; }
  int tail() const { return pattern_.sigma().at(pattern_.length()); }
  /// Head letters sigma_1..sigma_k (unreduced, as written in the pattern).
  Word head() const;
  Permutation head_reduced() const;

 private:
  explicit VincularTailPattern(VincularPattern p) : pattern_(std::move(p)) {}
  VincularPattern pattern_;
};

/// Gap-vector emptiness: true when one of the three prefix-word conditions
/// forces S_n[sigma; p; w] to be empty.  A false return asserts nothing.
/// Requires reduce(w) to match the reduced head.
bool gap_forced_empty(const VincularTailPattern& sigma, const Word& w, int n);

/// The reversibly deletable set R = {1..r} predicted for prefix pattern p,
/// with r the smallest index whose suffix p_{r+1}..p_t is isomorphic to the
/// corresponding head prefix.  Empty when neither proposition applies.
std::optional<std::vector<int>> reversibly_deletable_predicted(const VincularTailPattern& sigma,
                                                               const Permutation& p);

/// Finite certification that d_R: S_n[B;p;w] -> S_{n-|R|}[B;d_R(p);d_R(w)]
/// is a bijection for every viable w with n <= n_max.
struct RevDelCertificate {
  bool certified = true;
  int n_max = 0;
  struct Counterexample {
    int n = 0;
    Word w;
    std::string reason;
  };
  std::optional<Counterexample> counterexample;
};
RevDelCertificate certify_reversibly_deletable(const PatternSet& patterns, const Permutation& p,
                                               const std::vector<int>& deletion_set, int n_max);

/// Number of admissible first-letter sets in the gen1 prefix argument,
/// counted by direct enumeration of subsets of [a, b]; equals
/// binom(b+k-a-ell-1, k-2).
std::int64_t gen1_prefix_count(int a, int b, int ell, int i, int k);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace vinc

#endif
