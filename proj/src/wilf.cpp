#include "wilf.hpp"

#include <algorithm>
#include <map>

#include "match.hpp"

namespace vinc {

WilfReport wilf_check(const AnyPattern& a, const AnyPattern& b, int n_max,
                      std::optional<StatKind> stat, int threads) {
  WilfReport rep;
  rep.pattern_a = pattern_str(a);
  rep.pattern_b = pattern_str(b);
  rep.n_max = n_max;
  rep.stat = stat;
  for (int n = 1; n <= n_max; ++n) {
    WilfReport::Row row;
    row.n = n;
    if (stat) {
      const StatTable ta = stat_any(a, n, *stat, threads);
      const StatTable tb = stat_any(b, n, *stat, threads);
      row.count_a = ta.total;
      row.count_b = tb.total;
      row.tables_agree = ta == tb;
    } else {
      row.count_a = count_any(a, n, threads);
      row.count_b = count_any(b, n, threads);
    }
    row.counts_agree = row.count_a == row.count_b;
    if ((!row.counts_agree || !row.tables_agree) && rep.equivalent) {
      rep.equivalent = false;
      rep.first_mismatch_n = n;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

SetCoincidenceReport barred_set_coincidence(const VincularPattern& v, const BarredPattern& b,
                                            int n_max) {
  SetCoincidenceReport rep;
  rep.vincular = v.str();
  rep.barred = b.str();
  rep.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    // Both enumerations are lexicographic, so sets coincide iff lists do.
    const auto sv = enumerate_avoiders({v}, n);
    const auto sb = enumerate_barred_avoiders(b, n);
    rep.sizes.push_back(static_cast<std::uint64_t>(sv.size()));
    if (sv != sb && rep.equal) {
      rep.equal = false;
      rep.first_mismatch_n = n;
      for (const auto& p : sv)
        if (std::find(sb.begin(), sb.end(), p) == sb.end()) {
          rep.witness = p;
          break;
        }
      if (!rep.witness)
        for (const auto& p : sb)
          if (std::find(sv.begin(), sv.end(), p) == sv.end()) {
            rep.witness = p;
            break;
          }
    }
  }
  return rep;
}

WilfClasses classify_patterns(const std::vector<AnyPattern>& patterns, int n_max, int threads) {
  WilfClasses out;
  out.n_max = n_max;
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> by_counts;
  for (const auto& p : patterns) {
    std::vector<std::uint64_t> counts;
    for (int n = 1; n <= n_max; ++n) counts.push_back(count_any(p, n, threads));
    by_counts[counts].push_back(pattern_str(p));
  }
  for (auto& [counts, names] : by_counts) {
    std::sort(names.begin(), names.end());
    out.classes.push_back({names, counts});
  }
  return out;
}

}  // namespace vinc
