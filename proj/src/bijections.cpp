#include "bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "enumerate.hpp"
#include "match.hpp"

namespace vinc {

Word prime_map(const Word& w) {
  if (w.empty()) return w;
  if (!distinct_letters(w)) throw std::invalid_argument("prime_map: letters must be distinct");
  const Word ranks = reduce(w);
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  const int m = static_cast<int>(w.size());
  Word out(w.size());
  for (size_t i = 0; i < w.size(); ++i)
    out[i] = sorted[static_cast<size_t>(m - ranks[i])];  // complement of the rank
  return out;
}

namespace {

void require_avoids(const Permutation& pi, const VincularPattern& p) {
  if (!avoids(pi.letters(), p))
    throw std::domain_error("input contains the pattern " + p.str());
}

// --- 1-42-3 -> 1-24-3 ----------------------------------------------------

// Splits seg into maximal runs of letters falling between consecutive
// thresholds; in a 1-42-3 avoider these value blocks appear contiguously in
// ascending order.  Returns the blocks lowest-values-first.
std::vector<Word> split_by_thresholds_ascending(const Word& seg, const std::vector<int>& thresholds) {
  const int r = static_cast<int>(thresholds.size());
  auto bucket = [&](int x) {
    int b = 0;
    while (b < r && x > thresholds[static_cast<size_t>(b)]) ++b;
    return b;  // 0..r
  };
  std::vector<Word> parts(static_cast<size_t>(r) + 1);
  int prev = 0;
  for (int x : seg) {
    const int b = bucket(x);
    if (b < prev)
      throw std::logic_error("segment blocks out of order; input not in the domain class");
    prev = b;
    parts[static_cast<size_t>(b)].push_back(x);
  }
  return parts;
}

Word f_1423(const Word& u) {
  if (u.size() <= 1) return u;
  // Left-to-right minima at positions q_1 < q_2 < ... < q_t (0-based),
  // values strictly decreasing; each minimum opens the segment that follows.
  std::vector<size_t> mins;
  for (size_t i = 0; i < u.size(); ++i)
    if (i == 0 || u[i] < u[mins.back()]) mins.push_back(i);
  const size_t t = mins.size();
  Word out;
  out.reserve(u.size());
  for (size_t s = 0; s < t; ++s) {
    const size_t seg_begin = mins[s] + 1;
    const size_t seg_end = (s + 1 < t) ? mins[s + 1] : u.size();
    Word seg(u.begin() + static_cast<long>(seg_begin), u.begin() + static_cast<long>(seg_end));
    out.push_back(u[mins[s]]);
    if (s + 1 == t) {
      // final segment alpha_1: plain prime
      Word pr = prime_map(seg);
      out.insert(out.end(), pr.begin(), pr.end());
      continue;
    }
    // thresholds: letters right of the next minimum and larger than this one
    std::vector<int> thresholds;
    for (size_t i = mins[s + 1] + 1; i < u.size(); ++i)
      if (u[i] > u[mins[s]]) thresholds.push_back(u[i]);
    std::sort(thresholds.begin(), thresholds.end());
    auto parts = split_by_thresholds_ascending(seg, thresholds);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      Word pr = prime_map(*it);
      out.insert(out.end(), pr.begin(), pr.end());
    }
  }
  return out;
}

// --- 13-4-2 -> 31-4-2 ----------------------------------------------------

Word f_1342(const Word& u) {
  if (u.size() <= 3) return u;
  const size_t max_pos =
      static_cast<size_t>(std::max_element(u.begin(), u.end()) - u.begin());
  Word head(u.begin(), u.begin() + static_cast<long>(max_pos));
  Word tail(u.begin() + static_cast<long>(max_pos) + 1, u.end());
  Word out;
  out.reserve(u.size());
  if (tail.empty()) {
    Word mapped = f_1342(head);
    out.insert(out.end(), mapped.begin(), mapped.end());
    out.push_back(u[max_pos]);
    return out;
  }
  std::vector<int> thresholds = tail;
  std::sort(thresholds.begin(), thresholds.end());
  const int i = static_cast<int>(thresholds.size());
  auto bucket = [&](int x) {
    int b = 0;
    while (b < i && x > thresholds[static_cast<size_t>(b)]) ++b;
    return b;  // 0..i, ascending value buckets T_1..T_{i+1}
  };
  // In the domain class the head reads P_{i+1} P_i ... P_1: bucket indices
  // non-increasing along the head.
  std::vector<Word> parts(static_cast<size_t>(i) + 1);
  int prev = i;
  for (int x : head) {
    const int b = bucket(x);
    if (b > prev)
      throw std::logic_error("head blocks out of order; input not in the domain class");
    prev = b;
    parts[static_cast<size_t>(b)].push_back(x);
  }
  for (auto& part : parts) {
    Word mapped = f_1342(part);
    out.insert(out.end(), mapped.begin(), mapped.end());
  }
  out.push_back(u[max_pos]);
  Word mapped_tail = f_1342(tail);
  out.insert(out.end(), mapped_tail.begin(), mapped_tail.end());
  return out;
}

// --- sliding maps ---------------------------------------------------------

// Is there an occurrence of the target pattern whose "1" is the minimum,
// sitting at position pos with its successor at pos+1?  For 13-2-4 we need a
// later letter below succ followed by one above; for 14-2-3 an increasing
// pair below succ.
bool min_occurrence_after(const Word& u, size_t pos, bool toward_1423) {
  const int succ = u[pos + 1];
  if (!toward_1423) {
    bool seen_small = false;
    for (size_t i = pos + 2; i < u.size(); ++i) {
      if (u[i] < succ)
        seen_small = true;
      else if (seen_small)
        return true;
    }
    return false;
  }
  int min_small = 0;
  bool have = false;
  for (size_t i = pos + 2; i < u.size(); ++i) {
    if (u[i] >= succ) continue;
    if (have && u[i] > min_small) return true;
    if (!have || u[i] < min_small) {
      min_small = u[i];
      have = true;
    }
  }
  return false;
}

Word slide_map(const Word& u0, bool toward_1423) {
  if (u0.size() <= 3) return u0;
  const int m = *std::min_element(u0.begin(), u0.end());
  if (u0.back() == m) {
    Word head(u0.begin(), u0.end() - 1);
    Word out = slide_map(head, toward_1423);
    out.push_back(m);
    return out;
  }
  Word u = u0;
  size_t pos = static_cast<size_t>(std::find(u.begin(), u.end(), m) - u.begin());
  size_t steps = 0;
  while (min_occurrence_after(u, pos, toward_1423)) {
    std::swap(u[pos], u[pos + 1]);
    ++pos;
    if (++steps >= u.size()) throw std::logic_error("sliding loop failed to terminate");
  }
  const int successor = u[pos + 1];
  Word erased;
  erased.reserve(u.size() - 1);
  for (int x : u)
    if (x != m) erased.push_back(x);
  Word mapped = slide_map(erased, toward_1423);
  Word out;
  out.reserve(u.size());
  for (int x : mapped) {
    if (x == successor) out.push_back(m);
    out.push_back(x);
  }
  return out;
}

const VincularPattern& pat(const char* text) {
  static std::map<std::string, VincularPattern> cache;
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, VincularPattern::parse(text)).first;
  return it->second;
}

}  // namespace

Permutation map_1423_to_1243(const Permutation& pi) {
  require_avoids(pi, pat("1-42-3"));
  return Permutation(f_1423(pi.letters()));
}

Permutation map_1342_to_3142(const Permutation& pi) {
  require_avoids(pi, pat("13-4-2"));
  return Permutation(f_1342(pi.letters()));
}

Permutation map_3124_to_1324(const Permutation& pi) {
  require_avoids(pi, pat("31-2-4"));
  return Permutation(slide_map(pi.letters(), false));
}

Permutation map_4123_to_1423(const Permutation& pi) {
  require_avoids(pi, pat("41-2-3"));
  return Permutation(slide_map(pi.letters(), true));
}

BijectionReport verify_bijection(const PermMap& map, const VincularPattern& domain,
                                 const VincularPattern& codomain, int n,
                                 const std::vector<StatKind>& preserved,
                                 const std::string& map_name) {
  BijectionReport rep;
  rep.map_name = map_name;
  rep.n = n;
  rep.codomain_size = count_avoiders({codomain}, n);
  std::set<Word> images;
  AvoiderStream stream({domain}, n);
  while (auto p = stream.next()) {
    ++rep.domain_size;
    const Permutation img = map(*p);
    if (!avoids(img.letters(), codomain)) {
      rep.pass = false;
      rep.violation = "image contains " + codomain.str();
      rep.witness = *p;
      rep.image = img;
      return rep;
    }
    for (StatKind kind : preserved) {
      if (statistic(p->letters(), kind) != statistic(img.letters(), kind)) {
        rep.pass = false;
        rep.violation = "statistic " + stat_kind_name(kind) + " not preserved";
        rep.witness = *p;
        rep.image = img;
        return rep;
      }
    }
    if (!images.insert(img.letters()).second) {
      rep.pass = false;
      rep.violation = "map not injective";
      rep.witness = *p;
      rep.image = img;
      return rep;
    }
  }
  if (rep.domain_size != rep.codomain_size) {
    rep.pass = false;
    rep.violation = "domain and codomain sizes differ";
  }
  return rep;
}

const std::map<std::string, NamedBijection>& bijection_registry() {
  static const std::map<std::string, NamedBijection> registry = [] {
    std::map<std::string, NamedBijection> r;
    auto add = [&r](const std::string& name, const char* dom, const char* cod,
                    std::vector<StatKind> stats, Permutation (*fn)(const Permutation&)) {
      r.emplace(name, NamedBijection{name, VincularPattern::parse(dom),
                                     VincularPattern::parse(cod), std::move(stats), fn});
    };
    add("f-1423", "1-42-3", "1-24-3",
        {StatKind::lr_min_positions, StatKind::lr_min_values}, &map_1423_to_1243);
    add("block-1342", "13-4-2", "31-4-2", {StatKind::last_letter}, &map_1342_to_3142);
    add("slide-3124", "31-2-4", "13-2-4", {}, &map_3124_to_1324);
    add("g-4123", "41-2-3", "14-2-3", {}, &map_4123_to_1423);
    return r;
  }();
  return registry;
}

}  // namespace vinc
