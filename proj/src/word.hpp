#ifndef VINC_WORD_HPP
#define VINC_WORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vinc {

/// A word is a finite sequence of positive integers.  Most of the library
/// operates on words with pairwise distinct letters (sub-alphabets of [n]);
/// reduce() also accepts repeated letters.
using Word = std::vector<int>;

/// Replace the i-th smallest letter(s) of w with i.  Ties share a rank, so
/// reduce({8,3,9,1,8,3}) == {3,2,4,1,3,2}.
Word reduce(const Word& w);

/// True iff the two words have equal reductions (false on length mismatch).
bool order_isomorphic(const Word& u, const Word& w);

bool distinct_letters(const Word& w);

/// A permutation of [n], n >= 0.  The empty permutation is allowed as the
/// identity for recursion bases.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word letters);

  /// Parse a digit string such as "53142".  Letters are single digits, which
  /// caps the length at 9.
  static Permutation of(std::string_view digits);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  /// 1-based access, matching the usual notation pi_i.
  int at(int i) const { return letters_.at(static_cast<size_t>(i) - 1); }
  const Word& letters() const { return letters_; }

  std::string str() const;
  Permutation reversed() const;
  Permutation complemented() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  Word letters_;
};

/// All elements of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t factorial(int n);

std::string word_str(const Word& w);

}  // namespace vinc

#endif
