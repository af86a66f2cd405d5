#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace vinc {

void StatTable::add(const std::string& value, std::uint64_t c) {
  auto it = counts.find(value);
  if (it == counts.end())
    counts.emplace(value, c);
  else
    it->second = checked_add(it->second, c);
  total = checked_add(total, c);
}

void StatTable::merge(const StatTable& other) {
  for (const auto& [k, v] : other.counts) add(k, v);
}

AvoiderStream::AvoiderStream(PatternSet patterns, int n, Word prefix)
    : patterns_(std::move(patterns)), n_(n), base_(static_cast<int>(prefix.size())), cur_(std::move(prefix)) {
  if (n_ < 0 || n_ > 31) throw std::invalid_argument("AvoiderStream: n must be in [0, 31]");
  if (base_ > n_) throw std::invalid_argument("AvoiderStream: prefix longer than n");
  for (int x : cur_) {
    if (x < 1 || x > n_ || (used_ >> x) & 1u)
      throw std::invalid_argument("AvoiderStream: prefix letters must be distinct and in [1, n]");
    used_ |= 1u << x;
  }
  // A prefix that already completes a pattern makes the class empty.  An
  // occurrence ending at position m only involves letters up to m, so the
  // incremental check is valid on the full prefix.
  for (int m = 1; m <= base_ && !done_; ++m)
    if (prune(m)) done_ = true;
}

bool AvoiderStream::prune(int end_pos) const {
  for (const auto& p : patterns_)
    if (contains_occurrence_ending_at(cur_, p, end_pos)) return true;
  return false;
}

std::optional<Permutation> AvoiderStream::next() {
  if (done_) return std::nullopt;
  int next_try;
  if (!primed_) {
    primed_ = true;
    if (static_cast<int>(cur_.size()) == n_) {
      if (base_ == n_) {
        done_ = true;  // single member: the literal prefix itself
        return Permutation(cur_);
      }
    }
    next_try = 1;
  } else {
    if (static_cast<int>(cur_.size()) <= base_) {
      done_ = true;
      return std::nullopt;
    }
    const int popped = cur_.back();
    cur_.pop_back();
    used_ &= ~(1u << popped);
    next_try = popped + 1;
  }
  while (true) {
    bool placed = false;
    for (int v = next_try; v <= n_; ++v) {
      if ((used_ >> v) & 1u) continue;
      cur_.push_back(v);
      used_ |= 1u << v;
      if (!prune(static_cast<int>(cur_.size()))) {
        placed = true;
        break;
      }
      cur_.pop_back();
      used_ &= ~(1u << v);
    }
    if (!placed) {
      if (static_cast<int>(cur_.size()) == base_) {
        done_ = true;
        return std::nullopt;
      }
      const int popped = cur_.back();
      cur_.pop_back();
      used_ &= ~(1u << popped);
      next_try = popped + 1;
      continue;
    }
    if (static_cast<int>(cur_.size()) == n_) return Permutation(cur_);
    next_try = 1;
  }
}

std::vector<Permutation> enumerate_avoiders(const PatternSet& patterns, int n) {
  std::vector<Permutation> out;
  AvoiderStream s(patterns, n);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

namespace {

// Runs fn(first_letter) over shards 1..n on the requested number of workers
// and hands results back in shard order.
template <typename Result, typename Fn>
std::vector<Result> run_sharded(int n, int threads, Fn fn) {
  std::vector<Result> results(static_cast<size_t>(n));
  std::atomic<int> next{1};
  auto worker = [&] {
    while (true) {
      const int v = next.fetch_add(1);
      if (v > n) break;
      results[static_cast<size_t>(v - 1)] = fn(v);
    }
  };
  const int nthreads = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

std::uint64_t count_avoiders(const PatternSet& patterns, int n, int threads) {
  if (n < 0) throw std::invalid_argument("count_avoiders: n < 0");
  if (n == 0) return 1;  // the empty permutation avoids everything
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2) {
    std::uint64_t c = 0;
    AvoiderStream s(patterns, n);
    while (s.next()) c = checked_add(c, 1);
    return c;
  }
  auto shard = [&](int v) {
    std::uint64_t c = 0;
    AvoiderStream s(patterns, n, {v});
    while (s.next()) c = checked_add(c, 1);
    return c;
  };
  std::uint64_t total = 0;
  for (std::uint64_t c : run_sharded<std::uint64_t>(n, threads, shard))
    total = checked_add(total, c);
  return total;
}

StatTable stat_distribution(const PatternSet& patterns, int n, StatKind kind, int threads) {
  if (n < 1) throw std::invalid_argument("stat_distribution: n < 1");
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2) {
    StatTable t;
    AvoiderStream s(patterns, n);
    while (auto p = s.next()) t.add(statistic(p->letters(), kind));
    return t;
  }
  auto shard = [&](int v) {
    StatTable t;
    AvoiderStream s(patterns, n, {v});
    while (auto p = s.next()) t.add(statistic(p->letters(), kind));
    return t;
  };
  StatTable out;
  for (const auto& t : run_sharded<StatTable>(n, threads, shard)) out.merge(t);
  return out;
}

std::vector<Permutation> prefix_class_members(const PrefixClass& c) {
  if (static_cast<int>(c.prefix_word.size()) != c.prefix_pattern.size())
    throw std::invalid_argument("prefix class: |w| != |p|");
  if (!c.prefix_word.empty() && reduce(c.prefix_word) != c.prefix_pattern.letters())
    return {};  // empty by definition, not an error
  std::vector<Permutation> out;
  AvoiderStream s(c.patterns, c.n, c.prefix_word);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Permutation> enumerate_barred_avoiders(const BarredPattern& b, int n) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n))
    if (avoids_barred(p.letters(), b)) out.push_back(std::move(p));
  return out;
}

namespace {

// All permutations of [n] with a fixed first letter, filtered by fn.
template <typename Fn>
std::uint64_t count_filtered_with_first(int n, int first, Fn keep) {
  Word rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  std::uint64_t c = 0;
  Word host(static_cast<size_t>(n));
  host[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), host.begin() + 1);
    if (keep(host)) c = checked_add(c, 1);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return c;
}

}  // namespace

std::uint64_t count_barred_avoiders(const BarredPattern& b, int n, int threads) {
  if (n < 0) throw std::invalid_argument("count_barred_avoiders: n < 0");
  if (n == 0) return 1;
  threads = resolve_threads(threads);
  auto keep = [&](const Word& host) { return avoids_barred(host, b); };
  if (threads <= 1 || n < 2) {
    std::uint64_t total = 0;
    for (int v = 1; v <= n; ++v)
      total = checked_add(total, count_filtered_with_first(n, v, keep));
    return total;
  }
  auto shard = [&](int v) { return count_filtered_with_first(n, v, keep); };
  std::uint64_t total = 0;
  for (std::uint64_t c : run_sharded<std::uint64_t>(n, threads, shard))
    total = checked_add(total, c);
  return total;
}

std::uint64_t count_any(const AnyPattern& p, int n, int threads) {
  if (const auto* v = std::get_if<VincularPattern>(&p))
    return count_avoiders({*v}, n, threads);
  return count_barred_avoiders(std::get<BarredPattern>(p), n, threads);
}

StatTable stat_any(const AnyPattern& p, int n, StatKind kind, int threads) {
  if (const auto* v = std::get_if<VincularPattern>(&p))
    return stat_distribution({*v}, n, kind, threads);
  StatTable t;
  for (const auto& pi : enumerate_barred_avoiders(std::get<BarredPattern>(p), n))
    t.add(statistic(pi.letters(), kind));
  return t;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace vinc
