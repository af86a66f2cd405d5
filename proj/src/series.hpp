#ifndef VINC_SERIES_HPP
#define VINC_SERIES_HPP

#include <string>
#include <vector>

#include "pattern.hpp"

namespace vinc {

/// Exact coefficient type for truncated series.  128 bits cover every count
/// reachable at the supported truncation orders (N <= 30 < 30! < 2^128).
using SeriesInt = __int128;
std::string series_int_str(SeriesInt v);

/// Truncated bivariate power series in z (size) and x (first letter) with
/// exact integer coefficients; carrier of the weight enumerators
/// W(pi) = z^n x^{pi_1}.  Coefficients live at 1 <= n <= order,
/// 0 <= a <= order + 1.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const { return order_; }
  SeriesInt coeff(int n, int a) const;
  void add(int n, int a, SeriesInt v);  // silently drops z-degrees beyond the order
  TruncatedSeries& operator+=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
  }
  bool operator==(const TruncatedSeries&) const = default;

  SeriesInt row_sum(int n) const;
  /// True iff every nonzero coefficient sits at 1 <= a <= n.
  bool triangular() const;

 private:
  int order_;
  int xdim_;
  std::vector<SeriesInt> c_;
};

/// The umbral insertion operators, one per family and prefix shape, acting on
/// the monomial basis exactly as displayed for that family.  The operators
/// are deliberately not conflated across families even where the actions
/// coincide.
enum class OperatorKind {
  p21,           // z^n x^b -> sum_{a=b+1}^{n+1} z^{n+1} x^a        (all families)
  p123_shift,    // z^n x^a -> z^{n+1} x^a                           (124-3 / 134-2)
  p123_sum,      // z^n x^b -> sum_{a=1}^{b} z^{n+1} x^a             (other families)
  p132_family1,  // z^n x^c -> sum_{a<=c} sum_{b=c+2}^{n+2} z^{n+2} x^a
  p132_family2,  // z^n x^c -> sum_{a<=c} z^{n+2} x^a                (merged primed forms)
  p132_family3,  // same double sum as family 1
  p231_family1,  // z^n x^c -> sum_{a=c+1}^{n+1} sum_{b=a+1}^{n+2} z^{n+2} x^a
  p231_family2,  // same double sum as family 1
  p231_family3,  // z^n x^c -> sum_{a=c+1}^{n+1} z^{n+2} x^a         (merged primed forms)
};
const std::vector<OperatorKind>& all_operator_kinds();
std::string operator_kind_name(OperatorKind k);

TruncatedSeries apply_operator(OperatorKind kind, const TruncatedSeries& G);

/// Evaluates the closed form of the operator by exact polynomial arithmetic
/// (division by (x-1), or (x-1)^2 for the double-sum 231 forms, must be
/// exact) and compares against the monomial-basis action through the order.
bool closed_form_check(OperatorKind kind, const TruncatedSeries& G, std::string* why = nullptr);

/// The primed per-pattern operators of the merged displays, implemented
/// independently from their own double sums so agreement can be tested.
enum class PrimedVariant {
  p132_prime_1324,   // avoid 132-4: b ranges over {n+2}
  p132_dprime_1423,  // avoid 142-3: b ranges over {c+2}
  p231_prime_2314,   // avoid 231-4: b ranges over {n+2}
  p231_dprime_2413,  // avoid 241-3: b ranges over {c+2}
};
TruncatedSeries primed_monomial_action(PrimedVariant v, int n, int c, int order);

enum class Family { f1_124_134, f2_132_142, f3_231_241 };
Family family_from_string(const std::string& s);
std::string family_name(Family f);
std::pair<VincularPattern, VincularPattern> family_patterns(Family f);

/// Solution of the family's functional-equation system by fixed-point
/// iteration from the zero series; F = F1 + F2 is the weight enumerator of
/// the avoider class.
struct FamilySeries {
  TruncatedSeries F1;
  TruncatedSeries F2;
  TruncatedSeries F() const { return F1 + F2; }
};
FamilySeries solve_family(Family f, int order);

/// Coefficient-exact comparison of the solved series against brute-force
/// first-letter tables for both patterns of the family.  The enumeration
/// side caps the order at the brute-force ceiling.
struct SeriesBruteforceReport {
  Family family;
  int order = 0;
  bool match = true;
  struct Mismatch {
    std::string pattern;
    int n = 0;
    int a = 0;
    std::string series_coeff;
    std::uint64_t brute_count = 0;
  };
  std::vector<Mismatch> mismatches;
};
SeriesBruteforceReport series_vs_bruteforce(Family f, int order, int threads = 1,
                                            int bruteforce_ceiling = 8);

}  // namespace vinc

#endif
