#include "stats.hpp"

#include <stdexcept>

namespace vinc {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

StatKind stat_kind_from_string(const std::string& s) {
  for (StatKind k : all_stat_kinds())
    if (stat_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown statistic '" + s + "'");
}

std::string stat_kind_name(StatKind kind) {
  switch (kind) {
    case StatKind::first_letter: return "first_letter";
    case StatKind::last_letter: return "last_letter";
    case StatKind::lr_min_positions: return "lr_min_positions";
    case StatKind::lr_min_values: return "lr_min_values";
    case StatKind::descent_set: return "descent_set";
    case StatKind::num_descents: return "num_descents";
  }
  throw std::logic_error("unreachable");
}

const std::vector<StatKind>& all_stat_kinds() {
  static const std::vector<StatKind> kinds = {
      StatKind::first_letter,     StatKind::last_letter, StatKind::lr_min_positions,
      StatKind::lr_min_values,    StatKind::descent_set, StatKind::num_descents,
  };
  return kinds;
}

std::vector<int> lr_min_positions(const Word& pi) {
  std::vector<int> out;
  int best = 0;
  for (size_t i = 0; i < pi.size(); ++i) {
    if (i == 0 || pi[i] < best) {
      best = pi[i];
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

std::vector<int> descent_set(const Word& pi) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < pi.size(); ++i)
    if (pi[i] > pi[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::string statistic(const Word& pi, StatKind kind) {
  if (pi.empty()) throw std::invalid_argument("statistic: empty word");
  switch (kind) {
    case StatKind::first_letter: return std::to_string(pi.front());
    case StatKind::last_letter: return std::to_string(pi.back());
    case StatKind::lr_min_positions: return join(lr_min_positions(pi));
    case StatKind::lr_min_values: {
      std::vector<int> vals;
      for (int p : lr_min_positions(pi)) vals.push_back(pi[static_cast<size_t>(p - 1)]);
      return join(vals);
    }
    case StatKind::descent_set: return join(descent_set(pi));
    case StatKind::num_descents: return std::to_string(descent_set(pi).size());
  }
  throw std::logic_error("unreachable");
}

std::vector<Block> blocks(const Word& pi) {
  if (pi.empty()) throw std::invalid_argument("blocks: empty permutation");
  std::vector<Block> out;
  const size_t n = pi.size();
  size_t i = 0;
  while (i < n) {
    if (i + 1 == n) {
      out.push_back(Block{{pi[i]}, true});
      break;
    }
    const bool inc = pi[i] < pi[i + 1];
    size_t j = i + 1;
    while (j + 1 < n && (pi[j] < pi[j + 1]) == inc) ++j;
    out.push_back(Block{Word(pi.begin() + static_cast<long>(i), pi.begin() + static_cast<long>(j) + 1), inc});
    i = j + 1;
  }
  return out;
}

}  // namespace vinc
