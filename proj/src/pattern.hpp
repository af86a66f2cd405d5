#ifndef VINC_PATTERN_HPP
#define VINC_PATTERN_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "word.hpp"

namespace vinc {

/// A vincular (dashed) pattern: a permutation sigma of length k together with
/// a set of adjacencies X subset of [k-1].  An occurrence of (sigma, X) in a
/// host is a subsequence order-isomorphic to sigma whose chosen indices are
/// consecutive at every j in X.
///
/// Text form: digit runs separated by '-'.  Letters inside a run must occupy
/// consecutive host positions, so "124-3" is (1243, {1,2}) and "1-2-43" is
/// (1243, {3}).  No dashes means a consecutive pattern, all dashes a
/// classical one.
class VincularPattern {
 public:
  VincularPattern(Permutation sigma, std::vector<int> adjacencies);

  static VincularPattern parse(std::string_view text);
  std::string str() const;

  const Permutation& sigma() const { return sigma_; }
  int length() const { return sigma_.size(); }
  /// 1-based: true iff pattern positions j and j+1 must be host-adjacent.
  bool adjacent_at(int j) const { return (mask_ >> j) & 1u; }
  std::vector<int> adjacencies() const;
  bool classical() const { return mask_ == 0; }
  bool consecutive() const;

  enum class Symmetry { reverse, complement, reverse_complement };
  VincularPattern symmetry(Symmetry kind) const;

  auto operator<=>(const VincularPattern&) const = default;

 private:
  Permutation sigma_;
  unsigned mask_ = 0;  // bit j set <=> j in X
};

/// A barred pattern with exactly one barred letter.  The host avoids it iff
/// every occurrence of the unbarred reduction sigma' extends to an occurrence
/// of the underlying permutation sigma''.
///
/// Text form: digit string with '~' immediately before the barred letter,
/// e.g. "25~134" bars the third letter of 25134.
class BarredPattern {
 public:
  BarredPattern(Permutation underlying, int barred_position);

  static BarredPattern parse(std::string_view text);
  std::string str() const;

  const Permutation& underlying() const { return underlying_; }
  int barred_position() const { return barred_position_; }  // 1-based
  /// The classical pattern sigma' formed by the unbarred letters.
  Permutation unbarred() const;

  auto operator<=>(const BarredPattern&) const = default;

 private:
  Permutation underlying_;
  int barred_position_ = 0;
};

using AnyPattern = std::variant<VincularPattern, BarredPattern>;

/// Parse either pattern form; throws std::invalid_argument with the offending
/// position on malformed input.
AnyPattern parse_pattern(std::string_view text);
std::string pattern_str(const AnyPattern& p);

}  // namespace vinc

#endif
