#include "deletion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "match.hpp"

namespace vinc {

Word delete_map(const Word& w, const std::vector<int>& positions) {
  if (!distinct_letters(w)) throw std::invalid_argument("delete_map: letters must be distinct");
  const int len = static_cast<int>(w.size());
  std::set<int> r(positions.begin(), positions.end());
  for (int p : r)
    if (p < 1 || p > len) throw std::invalid_argument("delete_map: position out of range");
  Word deleted;
  for (int p : r) deleted.push_back(w[static_cast<size_t>(p - 1)]);
  Word out;
  out.reserve(w.size() - r.size());
  for (int i = 1; i <= len; ++i) {
    if (r.count(i)) continue;
    const int x = w[static_cast<size_t>(i - 1)];
    int below = 0;
    for (int d : deleted)
      if (d < x) ++below;
    out.push_back(x - below);
  }
  return out;
}

std::optional<VincularTailPattern> VincularTailPattern::from(const VincularPattern& p) {
  const int len = p.length();
  if (len < 2) return std::nullopt;
  for (int j = 1; j <= len - 2; ++j)
    if (!p.adjacent_at(j)) return std::nullopt;
  if (p.adjacent_at(len - 1)) return std::nullopt;
  return VincularTailPattern(p);
}

Word VincularTailPattern::head() const {
  Word h;
  for (int j = 1; j <= k(); ++j) h.push_back(pattern_.sigma().at(j));
  return h;
}

Permutation VincularTailPattern::head_reduced() const { return Permutation(reduce(head())); }

bool gap_forced_empty(const VincularTailPattern& sigma, const Word& w, int n) {
  const int kk = sigma.k();
  if (static_cast<int>(w.size()) != kk)
    throw std::invalid_argument("gap_forced_empty: |w| != k");
  if (!distinct_letters(w)) throw std::invalid_argument("gap_forced_empty: repeated letters in w");
  for (int x : w)
    if (x < 1 || x > n) throw std::invalid_argument("gap_forced_empty: w letters outside [1, n]");
  const Word head = sigma.head();
  if (reduce(w) != reduce(head))
    throw std::invalid_argument("gap_forced_empty: w not isomorphic to the pattern head");

  const int tail = sigma.tail();
  auto index_of = [&](int value) {
    for (int j = 1; j <= kk; ++j)
      if (sigma.pattern().sigma().at(j) == value) return j;
    throw std::logic_error("gap_forced_empty: head letter missing");
  };
  if (tail == 1) {
    const int m = index_of(2);
    return w[static_cast<size_t>(m - 1)] > 1;
  }
  if (tail == kk + 1) {
    const int ell = index_of(kk);
    return w[static_cast<size_t>(ell - 1)] < n;
  }
  const int ell = index_of(tail - 1);
  const int m = index_of(tail + 1);
  return w[static_cast<size_t>(m - 1)] - w[static_cast<size_t>(ell - 1)] > 1;
}

std::optional<std::vector<int>> reversibly_deletable_predicted(const VincularTailPattern& sigma,
                                                               const Permutation& p) {
  const int t = p.size();
  const int kk = sigma.k();
  if (t < 1) return std::nullopt;
  const Word head = sigma.head();
  auto head_prefix = [&](int len) { return Word(head.begin(), head.begin() + len); };
  auto p_suffix = [&](int from) {
    return Word(p.letters().begin() + from, p.letters().end());
  };
  int r_min = 1;
  if (t < kk) {
    // First proposition: the whole prefix must not look like the head start.
    if (order_isomorphic(p.letters(), head_prefix(t))) return std::nullopt;
  } else {
    // Second proposition (covers t == k even when p is head-isomorphic): no
    // non-final window of k letters isomorphic to the head, r >= t-k+1.
    for (int s = 0; s + kk < t; ++s) {
      Word window(p.letters().begin() + s, p.letters().begin() + s + kk);
      if (order_isomorphic(window, head)) return std::nullopt;
    }
    r_min = t - kk + 1;
  }
  for (int r = r_min; r <= t - 1; ++r) {
    if (order_isomorphic(p_suffix(r), head_prefix(t - r))) {
      std::vector<int> out;
      for (int j = 1; j <= r; ++j) out.push_back(j);
      return out;
    }
  }
  return std::nullopt;  // unreachable for valid inputs: p_t is isomorphic to sigma_1
}

namespace {

// All words w of length t with distinct letters from [n] and reduce(w) == p:
// one per t-subset of [n], arranged by p.
std::vector<Word> prefix_words(const Permutation& p, int n) {
  const int t = p.size();
  std::vector<Word> out;
  if (t > n) return out;
  std::vector<int> comb(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) comb[static_cast<size_t>(i)] = i + 1;
  while (true) {
    Word w(static_cast<size_t>(t));
    for (int i = 1; i <= t; ++i)
      w[static_cast<size_t>(i - 1)] = comb[static_cast<size_t>(p.at(i) - 1)];
    out.push_back(std::move(w));
    // next combination
    int i = t - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == n - (t - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

RevDelCertificate certify_reversibly_deletable(const PatternSet& patterns, const Permutation& p,
                                               const std::vector<int>& deletion_set, int n_max) {
  RevDelCertificate cert;
  cert.n_max = n_max;
  const int t = p.size();
  for (int pos : deletion_set)
    if (pos < 1 || pos > t)
      throw std::invalid_argument("certify_reversibly_deletable: R outside [1, |p|]");
  const Word dp = delete_map(p.letters(), deletion_set);
  const Permutation dp_perm(dp);

  for (int n = t; n <= n_max; ++n) {
    for (const Word& w : prefix_words(p, n)) {
      auto source = prefix_class_members({patterns, p, w, n});
      if (source.empty()) continue;  // the definition quantifies over viable w only
      const Word dw = delete_map(w, deletion_set);
      auto target = prefix_class_members(
          {patterns, dp_perm, dw, n - static_cast<int>(deletion_set.size())});
      std::set<Word> image;
      bool injective = true;
      for (const auto& pi : source) {
        Word img_w = delete_map(pi.letters(), deletion_set);
        if (!image.insert(img_w).second) injective = false;
      }
      std::set<Word> target_set;
      for (const auto& pi : target) target_set.insert(pi.letters());
      std::string reason;
      if (!injective)
        reason = "d_R not injective on the class";
      else if (image != target_set)
        reason = image.size() < target_set.size() ? "d_R not surjective onto the image class"
                                                  : "image leaves the target class";
      if (!reason.empty()) {
        cert.certified = false;
        cert.counterexample = RevDelCertificate::Counterexample{n, w, reason};
        return cert;
      }
    }
  }
  return cert;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t gen1_prefix_count(int a, int b, int ell, int i, int k) {
  if (!(k >= 2 && i >= 1 && i <= k - 1 && ell >= k && ell <= b - 1 && a >= 1))
    throw std::invalid_argument("gen1_prefix_count: parameter ranges violated");
  const int middle = b - a - 1;  // candidates strictly between a and b
  const int need = ell - 2;
  if (need > middle) return 0;
  // Enumerate subsets {a < s_2 < ... < s_{ell-1} < b} and keep those whose
  // run s_{i+r} = s_i + r holds for 1 <= r <= ell-k.
  std::vector<int> comb(static_cast<size_t>(need));
  for (int j = 0; j < need; ++j) comb[static_cast<size_t>(j)] = j;
  std::int64_t count = 0;
  auto run_ok = [&](const std::vector<int>& sel) {
    std::vector<int> s;
    s.push_back(a);
    for (int idx : sel) s.push_back(a + 1 + idx);
    s.push_back(b);
    for (int r = 1; r <= ell - k; ++r)
      if (s[static_cast<size_t>(i + r - 1)] != s[static_cast<size_t>(i - 1)] + r) return false;
    return true;
  };
  if (need == 0) return run_ok({}) ? 1 : 0;
  while (true) {
    if (run_ok(comb)) ++count;
    int j = need - 1;
    while (j >= 0 && comb[static_cast<size_t>(j)] == middle - (need - j)) --j;
    if (j < 0) break;
    ++comb[static_cast<size_t>(j)];
    for (int t = j + 1; t < need; ++t)
      comb[static_cast<size_t>(t)] = comb[static_cast<size_t>(t - 1)] + 1;
  }
  return count;
}

}  // namespace vinc
