#ifndef VINC_BIJECTIONS_HPP
#define VINC_BIJECTIONS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pattern.hpp"
#include "stats.hpp"
#include "word.hpp"

namespace vinc {

/// The 31-2 <-> 13-2 involution on words with distinct letters: reduce,
/// complement, then restore the original letter set in the new relative
/// order.
Word prime_map(const Word& w);

/// S_n(1-42-3) -> S_n(1-24-3); preserves positions and values of
/// left-to-right minima.  Decomposes by minima, splits each segment into
/// value blocks against the letters beyond the next minimum, primes each
/// block and reverses the block order.
Permutation map_1423_to_1243(const Permutation& pi);

/// S_n(13-4-2) -> S_n(31-4-2); preserves the last letter.  Recursively
/// reverses the order of the value blocks to the left of the maximum.
Permutation map_1342_to_3142(const Permutation& pi);

/// S_n(31-2-4) -> S_n(13-2-4).  Slides the letter 1 right past its successor
/// while it starts an occurrence of 13-2-4, then erases it, recurses, and
/// reinserts before the recorded successor.
Permutation map_3124_to_1324(const Permutation& pi);

/// S_n(41-2-3) -> S_n(14-2-3); the mirror sliding procedure against 14-2-3.
Permutation map_4123_to_1423(const Permutation& pi);

using PermMap = std::function<Permutation(const Permutation&)>;

struct BijectionReport {
  std::string map_name;
  int n = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t codomain_size = 0;
  bool pass = true;
  std::string violation;  // empty when pass
  std::optional<Permutation> witness;
  std::optional<Permutation> image;
};

/// Applies the map to every member of S_n(domain); checks the image lies in
/// S_n(codomain), injectivity, cardinality (hence bijectivity) and the listed
/// statistics.
BijectionReport verify_bijection(const PermMap& map, const VincularPattern& domain,
                                 const VincularPattern& codomain, int n,
                                 const std::vector<StatKind>& preserved,
                                 const std::string& map_name = "map");

struct NamedBijection {
  std::string name;
  VincularPattern domain;
  VincularPattern codomain;
  std::vector<StatKind> preserved;
  PermMap map;
};

/// CLI-addressable maps: f-1423, block-1342, slide-3124, g-4123.
const std::map<std::string, NamedBijection>& bijection_registry();

}  // namespace vinc

#endif
