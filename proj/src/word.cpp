#include "word.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

Word reduce(const Word& w) {
  if (w.empty()) throw std::invalid_argument("reduce: empty word");
  Word distinct = w;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("reduce: letters must be >= 1");
    auto it = std::lower_bound(distinct.begin(), distinct.end(), x);
    out.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return out;
}

bool order_isomorphic(const Word& u, const Word& w) {
  if (u.size() != w.size()) return false;
  if (u.empty()) return true;
  return reduce(u) == reduce(w);
}

bool distinct_letters(const Word& w) {
  Word s = w;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Permutation::Permutation(Word letters) : letters_(std::move(letters)) {
  const int n = static_cast<int>(letters_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : letters_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Permutation: letters must be 1..n, each exactly once");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::of(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("Permutation::of: digits 1-9 only");
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

std::string Permutation::str() const { return word_str(letters_); }

Permutation Permutation::reversed() const {
  Word w(letters_.rbegin(), letters_.rend());
  return Permutation(std::move(w));
}

Permutation Permutation::complemented() const {
  const int n = size();
  Word w;
  w.reserve(letters_.size());
  for (int x : letters_) w.push_back(n + 1 - x);
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  if (n < 0) throw std::invalid_argument("all_permutations: n < 0");
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow");
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::string word_str(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace vinc
