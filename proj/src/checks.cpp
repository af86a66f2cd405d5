#include "checks.hpp"

#include <random>
#include <sstream>

#include "bijections.hpp"
#include "deletion.hpp"
#include "enumerate.hpp"
#include "match.hpp"
#include "series.hpp"

namespace vinc {

namespace {

VincularPattern vp(const char* text) { return VincularPattern::parse(text); }
BarredPattern bp(const char* text) { return BarredPattern::parse(text); }

std::vector<VincularPattern> all_length4_patterns() {
  std::vector<VincularPattern> out;
  for (const auto& sigma : all_permutations(4)) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<int> adj;
      for (int j = 1; j <= 3; ++j)
        if ((mask >> (j - 1)) & 1u) adj.push_back(j);
      out.emplace_back(sigma, adj);
    }
  }
  return out;
}

bool counts_equal(const std::vector<const char*>& texts, int n_max, int threads,
                  std::string& detail) {
  std::vector<AnyPattern> pats;
  for (const char* t : texts) pats.push_back(parse_pattern(t));
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t base = count_any(pats[0], n, threads);
    for (size_t i = 1; i < pats.size(); ++i) {
      const std::uint64_t c = count_any(pats[i], n, threads);
      if (c != base) {
        detail = std::string(texts[0]) + " vs " + texts[i] + " differ at n=" +
                 std::to_string(n) + " (" + std::to_string(base) + " vs " + std::to_string(c) + ")";
        return false;
      }
    }
  }
  return true;
}

bool tables_equal(const char* a, const char* b, StatKind kind, int n_max, int threads,
                  std::string& detail) {
  const AnyPattern pa = parse_pattern(a), pb = parse_pattern(b);
  for (int n = 1; n <= n_max; ++n) {
    if (stat_any(pa, n, kind, threads) != stat_any(pb, n, kind, threads)) {
      detail = std::string(a) + " vs " + b + ": " + stat_kind_name(kind) +
               " tables differ at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

CriterionResult c1_base_counts(int threads) {
  CriterionResult r{1, "base-counts-all-length-4-patterns", true, ""};
  for (const auto& p : all_length4_patterns()) {
    for (int n = 0; n <= 4; ++n) {
      const std::uint64_t expect = (n <= 3) ? factorial(n) : 23;
      const std::uint64_t got = count_avoiders({p}, n, threads);
      if (got != expect) {
        r.pass = false;
        r.detail = p.str() + " at n=" + std::to_string(n) + ": " + std::to_string(got);
        return r;
      }
    }
  }
  r.detail = "192 patterns, n<=4";
  return r;
}

CriterionResult c2_summary_equivalences(int threads) {
  CriterionResult r{2, "summary-equivalences-n<=9", true, "7 pairs"};
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"134-2", "124-3"},  {"132-4", "142-3"},  {"231-4", "241-3"},
      {"1-24-3", "1-42-3"}, {"13-4-2", "31-4-2"}, {"31-2-4", "13-2-4"},
      {"14-2-3", "41-2-3"},
  };
  for (const auto& [a, b] : pairs)
    if (!counts_equal({a, b}, 9, threads, r.detail)) {
      r.pass = false;
      return r;
    }
  return r;
}

CriterionResult c3_statistic_refinements(int threads) {
  CriterionResult r{3, "statistic-refinements-n<=8", true, ""};
  struct Item {
    const char* a;
    const char* b;
    StatKind kind;
  };
  const std::vector<Item> items = {
      {"124-3", "134-2", StatKind::first_letter},
      {"132-4", "142-3", StatKind::first_letter},
      {"231-4", "241-3", StatKind::first_letter},
      {"13-4-2", "31-4-2", StatKind::last_letter},
      {"124-3", "134-2", StatKind::descent_set},
      {"1243-5", "1253-4", StatKind::descent_set},
  };
  for (const auto& it : items)
    if (!tables_equal(it.a, it.b, it.kind, 8, threads, r.detail)) {
      r.pass = false;
      return r;
    }
  r.detail = "first-letter x3, last-letter, descent-set x2";
  return r;
}

CriterionResult c4_general_families(int threads) {
  CriterionResult r{4, "general-family-instances-n<=8", true, ""};
  const std::vector<std::vector<const char*>> chains = {
      {"1243-5", "1253-4"},
      {"1432-5", "1532-4"},
      {"2431-5", "2531-4"},
      {"1235-4", "1245-3", "1345-2"},
      {"12346-5", "12356-4", "12456-3", "13456-2"},
  };
  for (const auto& chain : chains)
    if (!counts_equal(chain, 8, threads, r.detail)) {
      r.pass = false;
      return r;
    }
  r.detail = "gen2 x3, gen1 chain, length-6 chain";
  return r;
}

CriterionResult c5_cor1_instance(int threads) {
  CriterionResult r{5, "cor1-instance-1253-4=3521-4", true, ""};
  if (!counts_equal({"1253-4", "3521-4"}, 8, threads, r.detail)) r.pass = false;
  else r.detail = "head reversal with tail k";
  return r;
}

CriterionResult c6_bijections() {
  CriterionResult r{6, "bijection-suite-n=8", true, ""};
  for (const auto& [name, b] : bijection_registry()) {
    const BijectionReport rep = verify_bijection(b.map, b.domain, b.codomain, 8, b.preserved, name);
    if (!rep.pass) {
      r.pass = false;
      r.detail = name + ": " + rep.violation +
                 (rep.witness ? " (witness " + rep.witness->str() + ")" : "");
      return r;
    }
  }
  r.detail = "4 maps with declared statistics";
  return r;
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  TruncatedSeries s(order);
  for (int n = 1; n <= order; ++n)
    for (int a = 1; a <= n; ++a) s.add(n, a, coeff(rng));
  return s;
}

CriterionResult c7_series(int threads) {
  CriterionResult r{7, "series-suite-N=8", true, ""};
  for (Family f : {Family::f1_124_134, Family::f2_132_142, Family::f3_231_241}) {
    const auto rep = series_vs_bruteforce(f, 8, threads);
    if (!rep.match) {
      const auto& m = rep.mismatches.front();
      r.pass = false;
      r.detail = family_name(f) + " vs brute force: " + m.pattern + " (n=" +
                 std::to_string(m.n) + ", a=" + std::to_string(m.a) + ")";
      return r;
    }
  }
  std::mt19937 rng(0x5eed);
  for (OperatorKind kind : all_operator_kinds()) {
    for (int trial = 0; trial < 100; ++trial) {
      const TruncatedSeries g = random_series(rng, 8);
      std::string why;
      if (!closed_form_check(kind, g, &why)) {
        r.pass = false;
        r.detail = operator_kind_name(kind) + " trial " + std::to_string(trial) + ": " + why;
        return r;
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    for (int c = 1; c <= n; ++c) {
      if (primed_monomial_action(PrimedVariant::p132_prime_1324, n, c, 12) !=
          primed_monomial_action(PrimedVariant::p132_dprime_1423, n, c, 12)) {
        r.pass = false;
        r.detail = "Pop'_132 vs Pop''_132 differ on z^" + std::to_string(n) + "x^" + std::to_string(c);
        return r;
      }
      if (primed_monomial_action(PrimedVariant::p231_prime_2314, n, c, 12) !=
          primed_monomial_action(PrimedVariant::p231_dprime_2413, n, c, 12)) {
        r.pass = false;
        r.detail = "Pop'_231 vs Pop''_231 differ on z^" + std::to_string(n) + "x^" + std::to_string(c);
        return r;
      }
    }
  }
  r.detail = "brute-force match, 100 random closed-form checks per operator, primed variants agree";
  return r;
}

CriterionResult c8_revdel() {
  CriterionResult r{8, "reversible-deletability-n<=8", true, ""};
  struct Item {
    const char* pattern;
    const char* prefix;
    std::vector<int> set;
  };
  std::vector<Item> items;
  for (const char* sigma : {"124-3", "134-2"}) {
    items.push_back({sigma, "21", {1}});
    items.push_back({sigma, "132", {1, 2}});
    items.push_back({sigma, "231", {1, 2}});
    items.push_back({sigma, "123", {1}});
    items.push_back({sigma, "123", {2}});
  }
  for (const char* sigma : {"132-4", "142-3"}) {
    items.push_back({sigma, "21", {1}});
    items.push_back({sigma, "123", {1}});
    items.push_back({sigma, "231", {1, 2}});
    items.push_back({sigma, "132", {1, 2}});
  }
  for (const char* sigma : {"231-4", "241-3"}) {
    items.push_back({sigma, "21", {1}});
    items.push_back({sigma, "123", {1}});
    items.push_back({sigma, "132", {1, 2}});
    items.push_back({sigma, "231", {1, 2}});
  }
  for (const auto& it : items) {
    const auto cert =
        certify_reversibly_deletable({vp(it.pattern)}, Permutation::of(it.prefix), it.set, 8);
    if (!cert.certified) {
      r.pass = false;
      std::ostringstream os;
      os << it.pattern << " p=" << it.prefix << " R={";
      for (size_t i = 0; i < it.set.size(); ++i) os << (i ? "," : "") << it.set[i];
      os << "}: " << cert.counterexample->reason << " at n=" << cert.counterexample->n
         << ", w=" << word_str(cert.counterexample->w);
      r.detail = os.str();
      return r;
    }
  }
  r.detail = std::to_string(items.size()) + " (pattern, prefix, R) triples";
  return r;
}

CriterionResult c9_gap_emptiness() {
  CriterionResult r{9, "gap-emptiness-n<=7", true, ""};
  for (const char* text : {"124-3", "134-2", "132-4", "142-3", "231-4", "241-3"}) {
    const VincularPattern pattern = vp(text);
    const auto tail = VincularTailPattern::from(pattern);
    const Permutation head = tail->head_reduced();
    for (int n = 3; n <= 7; ++n) {
      // every w of length 3 isomorphic to the head
      for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = 1; i2 <= n; ++i2)
          for (int i3 = 1; i3 <= n; ++i3) {
            const Word w{i1, i2, i3};
            if (!distinct_letters(w) || reduce(w) != head.letters()) continue;
            if (!gap_forced_empty(*tail, w, n)) continue;
            if (!prefix_class_members({{pattern}, head, w, n}).empty()) {
              r.pass = false;
              r.detail = std::string(text) + " w=" + word_str(w) + " n=" + std::to_string(n) +
                         ": forced-empty class is nonempty";
              return r;
            }
          }
    }
  }
  r.detail = "six patterns, all head-isomorphic w";
  return r;
}

CriterionResult c10_barred(int threads) {
  CriterionResult r{10, "barred-coincidences", true, ""};
  const std::vector<std::pair<const char*, const char*>> set_pairs = {
      {"1-42-3", "25~134"}, {"1-24-3", "23~154"}, {"13-4-2", "1~5342"},
      {"31-4-2", "3~5142"}, {"31-2-4", "3~5124"}, {"13-2-4", "1~5324"},
      {"14-2-3", "1~3524"}, {"41-2-3", "5~3124"}, {"3-14-2", "41~352"},
  };
  for (const auto& [v, b] : set_pairs) {
    const auto rep = barred_set_coincidence(vp(v), bp(b), 7);
    if (!rep.equal) {
      r.pass = false;
      r.detail = std::string(v) + " vs " + b + ": sets differ at n=" +
                 std::to_string(*rep.first_mismatch_n);
      return r;
    }
  }
  if (!counts_equal({"25~134", "23~154"}, 8, threads, r.detail) ||
      !counts_equal({"1~5342", "3~5142", "3~5241"}, 8, threads, r.detail) ||
      !counts_equal({"24-1-3", "3~5241"}, 8, threads, r.detail)) {
    r.pass = false;
    return r;
  }
  r.detail = "9 set equalities (n<=7), barred count chains (n<=8)";
  return r;
}

CriterionResult c11_conjecture(int threads) {
  CriterionResult r{11, "conjecture-and-known-chains", true, ""};
  const auto conj = run_conjecture(9, threads);
  if (!conj.pass) {
    r.pass = false;
    for (const auto& part : conj.parts)
      if (!part.equivalent)
        r.detail = part.pattern_a + " vs " + part.pattern_b + " differ at n=" +
                   std::to_string(*part.first_mismatch_n);
    return r;
  }
  if (!counts_equal({"1-23-4", "1-32-4", "1-34-2", "1-43-2"}, 8, threads, r.detail) ||
      !counts_equal({"2-14-3", "2-41-3"}, 8, threads, r.detail)) {
    r.pass = false;
    return r;
  }
  r.detail = "both parts n<=9, known chains n<=8";
  return r;
}

CriterionResult c12_gen1_identity() {
  CriterionResult r{12, "gen1-subset-identity", true, ""};
  for (int a = 1; a <= 4; ++a)
    for (int k = 3; k <= 7; ++k)
      for (int ell = k; ell <= k + 3; ++ell)
        for (int b = ell + 1; b <= ell + 6; ++b)
          for (int i = 1; i <= k - 1; ++i) {
            const std::int64_t direct = gen1_prefix_count(a, b, ell, i, k);
            const std::int64_t closed = binomial(b + k - a - ell - 1, k - 2);
            if (direct != closed) {
              r.pass = false;
              std::ostringstream os;
              os << "a=" << a << " b=" << b << " ell=" << ell << " i=" << i << " k=" << k
                 << ": " << direct << " vs " << closed;
              r.detail = os.str();
              return r;
            }
          }
  r.detail = "full grid a<=4, k<=7, ell<=k+3, b<=ell+6, i<=k-1";
  return r;
}

CriterionResult c13_consecutive(int threads) {
  CriterionResult r{13, "consecutive-2341=1342-n<=9", true, ""};
  if (!counts_equal({"2341", "1342"}, 9, threads, r.detail)) r.pass = false;
  else r.detail = "no-dash patterns";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(int threads) {
  std::vector<CriterionResult> out;
  out.push_back(c1_base_counts(threads));
  out.push_back(c2_summary_equivalences(threads));
  out.push_back(c3_statistic_refinements(threads));
  out.push_back(c4_general_families(threads));
  out.push_back(c5_cor1_instance(threads));
  out.push_back(c6_bijections());
  out.push_back(c7_series(threads));
  out.push_back(c8_revdel());
  out.push_back(c9_gap_emptiness());
  out.push_back(c10_barred(threads));
  out.push_back(c11_conjecture(threads));
  out.push_back(c12_gen1_identity());
  out.push_back(c13_consecutive(threads));
  return out;
}

ConjectureReport run_conjecture(int n_max, int threads) {
  ConjectureReport rep;
  rep.n_max = n_max;
  rep.parts.push_back(
      wilf_check(vp("23-1-4"), vp("1-23-4"), n_max, std::nullopt, threads));
  rep.parts.push_back(
      wilf_check(vp("14-2-3"), vp("2-14-3"), n_max, std::nullopt, threads));
  for (const auto& part : rep.parts)
    if (!part.equivalent) rep.pass = false;
  return rep;
}

}  // namespace vinc
