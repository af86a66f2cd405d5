#ifndef VINC_STATS_HPP
#define VINC_STATS_HPP

#include <string>
#include <vector>

#include "word.hpp"

namespace vinc {

enum class StatKind {
  first_letter,
  last_letter,
  lr_min_positions,
  lr_min_values,
  descent_set,
  num_descents,
};

StatKind stat_kind_from_string(const std::string& s);
std::string stat_kind_name(StatKind kind);
const std::vector<StatKind>& all_stat_kinds();

/// Canonical string value of the statistic on a nonempty word with distinct
/// letters.  Sets and lists serialize as comma-joined entries ("" when empty),
/// scalars as plain integers.
std::string statistic(const Word& pi, StatKind kind);

/// 1-based indices i with pi_i smaller than everything before it.
std::vector<int> lr_min_positions(const Word& pi);
/// 1-based indices i with pi_i > pi_{i+1}.
std::vector<int> descent_set(const Word& pi);

/// Maximal monotonic subfactor, taken greedily from the left.  Singletons can
/// only arise as the final block; they are labeled increasing by convention.
struct Block {
  Word letters;
  bool increasing = true;
  bool operator==(const Block&) const = default;
};
std::vector<Block> blocks(const Word& pi);

}  // namespace vinc

#endif
