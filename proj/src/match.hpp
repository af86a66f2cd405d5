#ifndef VINC_MATCH_HPP
#define VINC_MATCH_HPP

#include <vector>

#include "pattern.hpp"
#include "word.hpp"

namespace vinc {

/// Every occurrence of p in the host, as 1-based index tuples in
/// lexicographic order.  The host may be any word with distinct letters.
std::vector<std::vector<int>> find_occurrences(const Word& host, const VincularPattern& p);

/// Containment with early exit; never materializes the occurrence list.
bool contains(const Word& host, const VincularPattern& p);
bool avoids(const Word& host, const VincularPattern& p);

/// True iff some occurrence of p has its last pattern position at the 1-based
/// host index end_pos.  This is the incremental test used by the pruned
/// enumerator: occurrences only accrue as letters are appended.
bool contains_occurrence_ending_at(const Word& host, const VincularPattern& p, int end_pos);

/// Barred avoidance: every occurrence of sigma' extends (by one host letter
/// in the slot of the barred position) to an occurrence of sigma''.
bool avoids_barred(const Word& host, const BarredPattern& b);

bool avoids(const Word& host, const AnyPattern& p);

}  // namespace vinc

#endif
