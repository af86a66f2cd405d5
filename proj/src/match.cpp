#include "match.hpp"

#include <algorithm>

namespace vinc {

namespace {

// Backtracking embedder over pattern positions.  chosen holds 0-based host
// indices for pattern positions 0..j-1; pinned_last (0-based, or -1) forces
// where the final pattern position must land.
struct Matcher {
  const Word& host;
  const VincularPattern& pat;
  int n;
  int k;
  int pinned_last;
  std::vector<int> chosen;
  std::vector<std::vector<int>>* collect = nullptr;

  Matcher(const Word& h, const VincularPattern& p, int pin)
      : host(h), pat(p), n(static_cast<int>(h.size())), k(p.length()), pinned_last(pin) {
    chosen.assign(static_cast<size_t>(k), -1);
  }

  bool value_consistent(int j, int i) const {
    const int v = host[static_cast<size_t>(i)];
    const int pj = pat.sigma().at(j + 1);
    for (int t = 0; t < j; ++t) {
      const int u = host[static_cast<size_t>(chosen[static_cast<size_t>(t)])];
      if (u == v) return false;
      if ((u < v) != (pat.sigma().at(t + 1) < pj)) return false;
    }
    return true;
  }

  bool search(int j, int start) {
    if (j == k) {
      if (collect) {
        std::vector<int> occ;
        occ.reserve(static_cast<size_t>(k));
        for (int idx : chosen) occ.push_back(idx + 1);
        collect->push_back(std::move(occ));
        return false;  // keep enumerating
      }
      return true;
    }
    int lo = start, hi = n - (k - j);  // leave room for the rest
    if (j > 0 && pat.adjacent_at(j)) {
      lo = hi = chosen[static_cast<size_t>(j - 1)] + 1;
      if (lo >= n) return false;
    }
    if (pinned_last >= 0) {
      const int max_here = pinned_last - (k - 1 - j);
      if (hi > max_here) hi = max_here;
      if (j == k - 1) lo = std::max(lo, pinned_last);
    }
    for (int i = lo; i <= hi; ++i) {
      if (!value_consistent(j, i)) continue;
      chosen[static_cast<size_t>(j)] = i;
      if (search(j + 1, i + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> find_occurrences(const Word& host, const VincularPattern& p) {
  std::vector<std::vector<int>> out;
  if (static_cast<int>(host.size()) < p.length()) return out;
  Matcher m(host, p, -1);
  m.collect = &out;
  m.search(0, 0);
  return out;
}

bool contains(const Word& host, const VincularPattern& p) {
  if (static_cast<int>(host.size()) < p.length()) return false;
  Matcher m(host, p, -1);
  return m.search(0, 0);
}

bool avoids(const Word& host, const VincularPattern& p) { return !contains(host, p); }

bool contains_occurrence_ending_at(const Word& host, const VincularPattern& p, int end_pos) {
  if (end_pos < p.length() || end_pos > static_cast<int>(host.size())) return false;
  Matcher m(host, p, end_pos - 1);
  return m.search(0, 0);
}

bool avoids_barred(const Word& host, const BarredPattern& b) {
  const int s = b.underlying().size();
  const int j = b.barred_position();
  const int n = static_cast<int>(host.size());
  const VincularPattern unbarred(b.unbarred(), {});
  const auto occs = find_occurrences(host, unbarred);
  for (const auto& occ : occs) {
    // Candidate insertion slots lie strictly between the occurrence's
    // neighbours of the barred position (1-based host indices).
    const int lo = (j == 1) ? 0 : occ[static_cast<size_t>(j - 2)];
    const int hi = (j == s) ? n + 1 : occ[static_cast<size_t>(j - 1)];
    bool extends = false;
    for (int i = lo + 1; i < hi && !extends; ++i) {
      const int v = host[static_cast<size_t>(i - 1)];
      bool ok = true;
      int t_pos = 1;  // sigma'' position of each occurrence letter
      for (int idx : occ) {
        if (t_pos == j) ++t_pos;
        const int u = host[static_cast<size_t>(idx - 1)];
        if (u == v || ((u < v) != (b.underlying().at(t_pos) < b.underlying().at(j)))) {
          ok = false;
          break;
        }
        ++t_pos;
      }
      extends = ok;
    }
    if (!extends) return false;
  }
  return true;
}

bool avoids(const Word& host, const AnyPattern& p) {
  if (const auto* v = std::get_if<VincularPattern>(&p)) return avoids(host, *v);
  return avoids_barred(host, std::get<BarredPattern>(p));
}

}  // namespace vinc
