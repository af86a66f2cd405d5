#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "series.hpp"
#include "stats.hpp"

using namespace vinc;

namespace {

TruncatedSeries monomial(int order, int n, int a, SeriesInt c = 1) {
  TruncatedSeries s(order);
  s.add(n, a, c);
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  TruncatedSeries s(order);
  for (int n = 1; n <= order; ++n)
    for (int a = 1; a <= n; ++a) s.add(n, a, coeff(rng));
  return s;
}

bool starts_with_descent_or_is_one(const Permutation& p) {
  return p.size() == 1 || p.at(1) > p.at(2);
}

}  // namespace

TEST_CASE("monomial actions") {
  // P21 on zx: the single avoider 21 of length 2
  CHECK(apply_operator(OperatorKind::p21, monomial(6, 1, 1)) == monomial(6, 2, 2));
  CHECK(apply_operator(OperatorKind::p123_shift, monomial(6, 2, 1)) == monomial(6, 3, 1));
  // linearity on the zero series
  const TruncatedSeries zero(6);
  for (OperatorKind kind : all_operator_kinds())
    CHECK(apply_operator(kind, zero) == zero);
  // truncation: degree-raising output beyond the order is dropped
  CHECK(apply_operator(OperatorKind::p21, monomial(2, 2, 1)) == TruncatedSeries(2));

  // double sums carry their multiplicities
  TruncatedSeries expect132(8);
  for (int a = 1; a <= 2; ++a)
    for (int b = 4; b <= 5; ++b) expect132.add(5, a, 1);
  CHECK(apply_operator(OperatorKind::p132_family1, monomial(8, 3, 2)) == expect132);
  TruncatedSeries expect231(8);
  for (int a = 3; a <= 4; ++a)
    for (int b = a + 1; b <= 5; ++b) expect231.add(5, a, 1);
  CHECK(apply_operator(OperatorKind::p231_family1, monomial(8, 3, 2)) == expect231);
}

TEST_CASE("closed forms agree with the monomial actions") {
  std::mt19937 rng(20240817);
  for (OperatorKind kind : all_operator_kinds()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto g = random_series(rng, 8);
      std::string why;
      CHECK_MESSAGE(closed_form_check(kind, g, &why), operator_kind_name(kind), ": ", why);
    }
    const TruncatedSeries zero(5);
    CHECK(closed_form_check(kind, zero));
  }
}

TEST_CASE("closed form check covers the weight enumerator itself") {
  const auto sol = solve_family(Family::f1_124_134, 6);
  CHECK(closed_form_check(OperatorKind::p21, sol.F()));
  CHECK(closed_form_check(OperatorKind::p132_family1, sol.F()));
}

TEST_CASE("primed operator variants coincide") {
  for (int n = 1; n <= 10; ++n)
    for (int c = 1; c <= n; ++c) {
      CHECK(primed_monomial_action(PrimedVariant::p132_prime_1324, n, c, 12) ==
            primed_monomial_action(PrimedVariant::p132_dprime_1423, n, c, 12));
      CHECK(primed_monomial_action(PrimedVariant::p231_prime_2314, n, c, 12) ==
            primed_monomial_action(PrimedVariant::p231_dprime_2413, n, c, 12));
    }
  // and the merged operators implement exactly that common action
  for (int n = 1; n <= 6; ++n)
    for (int c = 1; c <= n; ++c) {
      CHECK(apply_operator(OperatorKind::p132_family2, monomial(12, n, c)) ==
            primed_monomial_action(PrimedVariant::p132_prime_1324, n, c, 12));
      CHECK(apply_operator(OperatorKind::p231_family3, monomial(12, n, c)) ==
            primed_monomial_action(PrimedVariant::p231_prime_2314, n, c, 12));
    }
}

TEST_CASE("solve_family seeds and totals") {
  for (Family f : {Family::f1_124_134, Family::f2_132_142, Family::f3_231_241}) {
    const auto sol = solve_family(f, 6);
    CHECK(sol.F1.coeff(1, 1) == 1);
    CHECK(sol.F2.coeff(2, 1) == 1);
    const auto F = sol.F();
    CHECK(F.row_sum(3) == 6);
    CHECK(F.row_sum(4) == 23);
    CHECK(F.triangular());
    CHECK(sol.F1.triangular());
    CHECK(sol.F2.triangular());
    for (int n = 1; n <= 6; ++n)
      for (int a = 0; a <= 7; ++a) CHECK(F.coeff(n, a) >= 0);
  }
}

TEST_CASE("iteration is monotone in the settled degree") {
  // solving at a lower order matches the truncation of a higher-order solve
  for (Family f : {Family::f1_124_134, Family::f3_231_241}) {
    const auto lo = solve_family(f, 4);
    const auto hi = solve_family(f, 7);
    for (int n = 1; n <= 4; ++n)
      for (int a = 0; a <= 5; ++a) CHECK(lo.F().coeff(n, a) == hi.F().coeff(n, a));
  }
}

TEST_CASE("F1 counts descent-started avoiders, F2 the rest") {
  for (Family f : {Family::f1_124_134, Family::f2_132_142, Family::f3_231_241}) {
    const auto sol = solve_family(f, 6);
    const auto pats = family_patterns(f);
    for (int n = 1; n <= 6; ++n) {
      SeriesInt f1 = 0, f2 = 0;
      AvoiderStream s({pats.first}, n);
      while (auto pi = s.next()) {
        if (starts_with_descent_or_is_one(*pi))
          ++f1;
        else
          ++f2;
      }
      CHECK(sol.F1.row_sum(n) == f1);
      CHECK(sol.F2.row_sum(n) == f2);
      CHECK(sol.F().row_sum(n) ==
            static_cast<SeriesInt>(count_avoiders({pats.first}, n)));
    }
  }
}

TEST_CASE("series matches brute force through order 6") {
  for (Family f : {Family::f1_124_134, Family::f2_132_142, Family::f3_231_241}) {
    const auto rep = series_vs_bruteforce(f, 6);
    CHECK(rep.match);
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("coefficient of z^n x^a equals the first-letter count for both family patterns") {
  const auto sol = solve_family(Family::f1_124_134, 6);
  const auto F = sol.F();
  for (const char* text : {"124-3", "134-2"}) {
    const auto p = VincularPattern::parse(text);
    for (int n = 1; n <= 6; ++n) {
      const auto table = stat_distribution({p}, n, StatKind::first_letter);
      for (int a = 1; a <= n; ++a) {
        const auto it = table.counts.find(std::to_string(a));
        const SeriesInt expected = it == table.counts.end() ? 0 : static_cast<SeriesInt>(it->second);
        CHECK(F.coeff(n, a) == expected);
      }
    }
  }
}

TEST_CASE("series utilities") {
  CHECK(series_int_str(0) == "0");
  CHECK(series_int_str(-42) == "-42");
  SeriesInt big = 1;
  for (int i = 0; i < 25; ++i) big *= 10;
  CHECK(series_int_str(big) == "10000000000000000000000000");
  CHECK(family_from_string("F2_132_142") == Family::f2_132_142);
  CHECK(family_from_string("3") == Family::f3_231_241);
  CHECK_THROWS_AS(family_from_string("nope"), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(0), std::invalid_argument);
}
