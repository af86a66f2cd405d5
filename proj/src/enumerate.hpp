#ifndef VINC_ENUMERATE_HPP
#define VINC_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "match.hpp"
#include "pattern.hpp"
#include "stats.hpp"
#include "word.hpp"

namespace vinc {

using PatternSet = std::vector<VincularPattern>;

/// Distribution of a statistic over an enumerated set: value -> count.
struct StatTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(const std::string& value, std::uint64_t c = 1);
  void merge(const StatTable& other);
  bool operator==(const StatTable&) const = default;
};

/// Lexicographic stream over S_n(B), optionally restricted to a literal
/// prefix.  Position-by-position backtracking; a partial permutation is
/// abandoned as soon as the freshly placed letter completes an occurrence of
/// some pattern in B.
class AvoiderStream {
 public:
  AvoiderStream(PatternSet patterns, int n, Word prefix = {});

  std::optional<Permutation> next();

  /// Minimal input-iterator interface so streams work with range-for.
  class iterator {
   public:
    using value_type = Permutation;
    iterator() = default;
    explicit iterator(AvoiderStream* s) : stream_(s) { advance(); }
    const Permutation& operator*() const { return *cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    bool operator==(const iterator& o) const { return done() == o.done(); }

   private:
    bool done() const { return stream_ == nullptr || !cur_.has_value(); }
    void advance() {
      if (stream_) cur_ = stream_->next();
    }
    AvoiderStream* stream_ = nullptr;
    std::optional<Permutation> cur_;
  };
  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool prune(int end_pos) const;

  PatternSet patterns_;
  int n_;
  int base_;
  Word cur_;
  std::uint32_t used_ = 0;
  bool primed_ = false;
  bool done_ = false;
};

/// S_n(B) in lexicographic order.
std::vector<Permutation> enumerate_avoiders(const PatternSet& patterns, int n);

/// |S_n(B)|.  With threads > 1 the search is sharded by first letter; the
/// merged result is identical to the single-threaded run.
std::uint64_t count_avoiders(const PatternSet& patterns, int n, int threads = 1);

StatTable stat_distribution(const PatternSet& patterns, int n, StatKind kind, int threads = 1);

/// The prefix class S_n[B; p; w]: avoiders of B whose first |w| letters are
/// literally w.  Empty when reduce(w) != p.
struct PrefixClass {
  PatternSet patterns;
  Permutation prefix_pattern;
  Word prefix_word;
  int n = 0;
};
std::vector<Permutation> prefix_class_members(const PrefixClass& c);

/// Barred-pattern avoiders are enumerated by filtering (barred containment is
/// not prefix-monotone, so the pruned search does not apply).
std::vector<Permutation> enumerate_barred_avoiders(const BarredPattern& b, int n);
std::uint64_t count_barred_avoiders(const BarredPattern& b, int n, int threads = 1);

std::uint64_t count_any(const AnyPattern& p, int n, int threads = 1);
StatTable stat_any(const AnyPattern& p, int n, StatKind kind, int threads = 1);

/// THREADS env var, else the hardware default (clamped); requested > 0 wins.
int resolve_threads(int requested);

}  // namespace vinc

#endif
