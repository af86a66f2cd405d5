#include "series.hpp"

#include <algorithm>
#include <stdexcept>

#include "enumerate.hpp"

namespace vinc {

std::string series_int_str(SeriesInt v) {
  if (v == 0) return "0";
  std::string s;
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  while (u) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order), xdim_(order + 2) {
  // 30! fits comfortably in the 128-bit coefficients; beyond that the
  // counting series could overflow silently.
  if (order < 1 || order > 30)
    throw std::invalid_argument("TruncatedSeries: order must be in [1, 30]");
  c_.assign(static_cast<size_t>(order_ + 1) * static_cast<size_t>(xdim_), 0);
}

SeriesInt TruncatedSeries::coeff(int n, int a) const {
  if (n < 1 || n > order_ || a < 0 || a > order_ + 1) return 0;
  return c_[static_cast<size_t>(n) * static_cast<size_t>(xdim_) + static_cast<size_t>(a)];
}

void TruncatedSeries::add(int n, int a, SeriesInt v) {
  if (n > order_) return;  // truncation
  if (n < 1 || a < 0 || a > order_ + 1)
    throw std::out_of_range("TruncatedSeries::add: exponent out of range");
  c_[static_cast<size_t>(n) * static_cast<size_t>(xdim_) + static_cast<size_t>(a)] += v;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

SeriesInt TruncatedSeries::row_sum(int n) const {
  SeriesInt s = 0;
  for (int a = 0; a <= order_ + 1; ++a) s += coeff(n, a);
  return s;
}

bool TruncatedSeries::triangular() const {
  for (int n = 1; n <= order_; ++n)
    for (int a = 0; a <= order_ + 1; ++a)
      if (coeff(n, a) != 0 && (a < 1 || a > n)) return false;
  return true;
}

const std::vector<OperatorKind>& all_operator_kinds() {
  static const std::vector<OperatorKind> kinds = {
      OperatorKind::p21,           OperatorKind::p123_shift,   OperatorKind::p123_sum,
      OperatorKind::p132_family1,  OperatorKind::p132_family2, OperatorKind::p132_family3,
      OperatorKind::p231_family1,  OperatorKind::p231_family2, OperatorKind::p231_family3,
  };
  return kinds;
}

std::string operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::p21: return "p21";
    case OperatorKind::p123_shift: return "p123_shift";
    case OperatorKind::p123_sum: return "p123_sum";
    case OperatorKind::p132_family1: return "p132_family1";
    case OperatorKind::p132_family2: return "p132_family2";
    case OperatorKind::p132_family3: return "p132_family3";
    case OperatorKind::p231_family1: return "p231_family1";
    case OperatorKind::p231_family2: return "p231_family2";
    case OperatorKind::p231_family3: return "p231_family3";
  }
  throw std::logic_error("unreachable");
}

TruncatedSeries apply_operator(OperatorKind kind, const TruncatedSeries& G) {
  const int N = G.order();
  TruncatedSeries out(N);
  for (int n = 1; n <= N; ++n) {
    for (int b = 0; b <= N + 1; ++b) {
      const SeriesInt g = G.coeff(n, b);
      if (g == 0) continue;
      switch (kind) {
        case OperatorKind::p21:
          for (int a = b + 1; a <= n + 1; ++a) out.add(n + 1, a, g);
          break;
        case OperatorKind::p123_shift:
          out.add(n + 1, b, g);
          break;
        case OperatorKind::p123_sum:
          for (int a = 1; a <= b; ++a) out.add(n + 1, a, g);
          break;
        case OperatorKind::p132_family1:
        case OperatorKind::p132_family3:
          for (int a = 1; a <= b; ++a)
            for (int bb = b + 2; bb <= n + 2; ++bb) out.add(n + 2, a, g);
          break;
        case OperatorKind::p132_family2:
          for (int a = 1; a <= b; ++a) out.add(n + 2, a, g);
          break;
        case OperatorKind::p231_family1:
        case OperatorKind::p231_family2:
          for (int a = b + 1; a <= n + 1; ++a)
            for (int bb = a + 1; bb <= n + 2; ++bb) out.add(n + 2, a, g);
          break;
        case OperatorKind::p231_family3:
          for (int a = b + 1; a <= n + 1; ++a) out.add(n + 2, a, g);
          break;
      }
    }
  }
  return out;
}

namespace {

// Dense exact polynomial in z and x, wide enough for the closed-form
// numerators (z-degree up to order+2, x-degree up to order+4).
struct Poly {
  int zmax;
  int xmax;
  std::vector<SeriesInt> c;

  Poly(int zm, int xm)
      : zmax(zm), xmax(xm),
        c(static_cast<size_t>(zm + 1) * static_cast<size_t>(xm + 1), 0) {}

  SeriesInt get(int n, int a) const {
    if (n < 0 || n > zmax || a < 0 || a > xmax) return 0;
    return c[idx(n, a)];
  }
  void set(int n, int a, SeriesInt v) { c[idx(n, a)] = v; }
  void add(int n, int a, SeriesInt v) {
    if (v == 0) return;
    if (n < 0 || n > zmax || a < 0 || a > xmax)
      throw std::out_of_range("Poly::add out of range");
    c[idx(n, a)] += v;
  }
  size_t idx(int n, int a) const {
    return static_cast<size_t>(n) * static_cast<size_t>(xmax + 1) + static_cast<size_t>(a);
  }

  Poly& operator+=(const Poly& o) {
    for (int n = 0; n <= o.zmax; ++n)
      for (int a = 0; a <= o.xmax; ++a) add(n, a, o.get(n, a));
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (int n = 0; n <= o.zmax; ++n)
      for (int a = 0; a <= o.xmax; ++a) add(n, a, -o.get(n, a));
    return *this;
  }
};

Poly from_series(const TruncatedSeries& G, int zmax, int xmax) {
  Poly p(zmax, xmax);
  for (int n = 1; n <= G.order(); ++n)
    for (int a = 0; a <= G.order() + 1; ++a) {
      const SeriesInt v = G.coeff(n, a);
      if (v) p.add(n, a, v);
    }
  return p;
}

Poly shifted(const Poly& p, int dz, int dx) {
  Poly out(p.zmax, p.xmax);
  for (int n = 0; n <= p.zmax; ++n)
    for (int a = 0; a <= p.xmax; ++a) {
      const SeriesInt v = p.get(n, a);
      if (v) out.add(n + dz, a + dx, v);
    }
  return out;
}

// z d/dz and x d/dx
Poly theta_z(const Poly& p) {
  Poly out(p.zmax, p.xmax);
  for (int n = 0; n <= p.zmax; ++n)
    for (int a = 0; a <= p.xmax; ++a) out.add(n, a, p.get(n, a) * n);
  return out;
}
Poly theta_x(const Poly& p) {
  Poly out(p.zmax, p.xmax);
  for (int n = 0; n <= p.zmax; ++n)
    for (int a = 0; a <= p.xmax; ++a) out.add(n, a, p.get(n, a) * a);
  return out;
}

// G(z, 1): collapse each z-row onto x^0.
Poly at_x1(const Poly& p) {
  Poly out(p.zmax, p.xmax);
  for (int n = 0; n <= p.zmax; ++n) {
    SeriesInt s = 0;
    for (int a = 0; a <= p.xmax; ++a) s += p.get(n, a);
    if (s) out.add(n, 0, s);
  }
  return out;
}

// G(zx, 1): z^n x^a -> z^n x^n.
Poly subst_zx_1(const Poly& p) {
  Poly out(p.zmax, p.xmax);
  for (int n = 0; n <= p.zmax; ++n) {
    SeriesInt s = 0;
    for (int a = 0; a <= p.xmax; ++a) s += p.get(n, a);
    if (s) out.add(n, n, s);
  }
  return out;
}

// Exact division by (x-1)^power via synthetic division per z-row; the
// remainder is the row evaluated at x = 1 and must vanish.
bool divide_x_minus_1(Poly& p, int power, std::string* why) {
  for (int e = 0; e < power; ++e) {
    for (int n = 0; n <= p.zmax; ++n) {
      std::vector<SeriesInt> q(static_cast<size_t>(p.xmax) + 1, 0);
      SeriesInt acc = 0;
      for (int a = p.xmax; a >= 1; --a) {
        acc += p.get(n, a);
        q[static_cast<size_t>(a - 1)] = acc;
      }
      const SeriesInt rem = acc + p.get(n, 0);
      if (rem != 0) {
        if (why)
          *why = "numerator not divisible by (x-1)^" + std::to_string(power) +
                 " at z-degree " + std::to_string(n);
        return false;
      }
      for (int a = 0; a <= p.xmax; ++a) p.set(n, a, q[static_cast<size_t>(a)]);
    }
  }
  return true;
}

// Closed-form numerators.  Derivatives enter as theta-operators (z d/dz,
// x d/dx); the double-sum 231 forms divide by (x-1)^2, everything else by
// (x-1) at most once.
struct ClosedForm {
  Poly numerator;
  int power;  // of (x-1)
};

ClosedForm closed_form_numerator(OperatorKind kind, const Poly& G) {
  const int zm = G.zmax, xm = G.xmax;
  Poly N(zm, xm);
  switch (kind) {
    case OperatorKind::p21: {
      // zx (x G(zx,1) - G(z,x))
      Poly t = subst_zx_1(G);
      t = shifted(t, 0, 1);
      t -= G;
      N = shifted(t, 1, 1);
      return {N, 1};
    }
    case OperatorKind::p123_shift: {
      // z G, no division
      N = shifted(G, 1, 0);
      return {N, 0};
    }
    case OperatorKind::p123_sum: {
      // zx (G - G(z,1))
      Poly t = G;
      t -= at_x1(G);
      N = shifted(t, 1, 1);
      return {N, 1};
    }
    case OperatorKind::p132_family2: {
      // z^2 x (G - G(z,1))
      Poly t = G;
      t -= at_x1(G);
      N = shifted(t, 2, 1);
      return {N, 1};
    }
    case OperatorKind::p231_family3: {
      // z^2 x (x G(zx,1) - G(z,x))
      Poly t = subst_zx_1(G);
      t = shifted(t, 0, 1);
      t -= G;
      N = shifted(t, 2, 1);
      return {N, 1};
    }
    case OperatorKind::p132_family1:
    case OperatorKind::p132_family3: {
      // z^2 x (G + theta_z G - theta_x G - [G + theta_z G - theta_x G](z,1))
      Poly t = G;
      t += theta_z(G);
      t -= theta_x(G);
      Poly k = at_x1(t);
      t -= k;
      N = shifted(t, 2, 1);
      return {N, 1};
    }
    case OperatorKind::p231_family1:
    case OperatorKind::p231_family2: {
      // z^2 x ((1-2x) G + x^2 G(zx,1) + (1-x) theta_z G + (x-1) theta_x G)
      Poly t(zm, xm);
      t += G;
      t -= shifted(G, 0, 1);
      t -= shifted(G, 0, 1);
      t += shifted(subst_zx_1(G), 0, 2);
      Poly tz = theta_z(G);
      t += tz;
      t -= shifted(tz, 0, 1);
      Poly tx = theta_x(G);
      t += shifted(tx, 0, 1);
      t -= tx;
      N = shifted(t, 2, 1);
      return {N, 2};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool closed_form_check(OperatorKind kind, const TruncatedSeries& G, std::string* why) {
  const int N = G.order();
  const Poly g = from_series(G, N + 2, N + 4);
  ClosedForm cf = closed_form_numerator(kind, g);
  if (!divide_x_minus_1(cf.numerator, cf.power, why)) return false;
  const TruncatedSeries direct = apply_operator(kind, G);
  for (int n = 1; n <= N; ++n) {
    for (int a = 0; a <= N + 1; ++a) {
      if (cf.numerator.get(n, a) != direct.coeff(n, a)) {
        if (why)
          *why = "closed form disagrees at z^" + std::to_string(n) + " x^" + std::to_string(a);
        return false;
      }
    }
    // nothing may hide beyond the series' x-range
    for (int a = N + 2; a <= cf.numerator.xmax; ++a) {
      if (cf.numerator.get(n, a) != 0) {
        if (why) *why = "closed form has stray x-degree at z^" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

TruncatedSeries primed_monomial_action(PrimedVariant v, int n, int c, int order) {
  TruncatedSeries out(order);
  switch (v) {
    case PrimedVariant::p132_prime_1324:
      for (int a = 1; a <= c; ++a)
        for (int b = n + 2; b <= n + 2; ++b) out.add(n + 2, a, 1);
      break;
    case PrimedVariant::p132_dprime_1423:
      for (int a = 1; a <= c; ++a)
        for (int b = c + 2; b <= c + 2; ++b) out.add(n + 2, a, 1);
      break;
    case PrimedVariant::p231_prime_2314:
      for (int a = c + 1; a <= n + 1; ++a)
        for (int b = n + 2; b <= n + 2; ++b) out.add(n + 2, a, 1);
      break;
    case PrimedVariant::p231_dprime_2413:
      for (int a = c + 1; a <= n + 1; ++a)
        for (int b = c + 2; b <= c + 2; ++b) out.add(n + 2, a, 1);
      break;
  }
  return out;
}

Family family_from_string(const std::string& s) {
  if (s == "F1_124_134" || s == "1") return Family::f1_124_134;
  if (s == "F2_132_142" || s == "2") return Family::f2_132_142;
  if (s == "F3_231_241" || s == "3") return Family::f3_231_241;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::f1_124_134: return "F1_124_134";
    case Family::f2_132_142: return "F2_132_142";
    case Family::f3_231_241: return "F3_231_241";
  }
  throw std::logic_error("unreachable");
}

std::pair<VincularPattern, VincularPattern> family_patterns(Family f) {
  switch (f) {
    case Family::f1_124_134:
      return {VincularPattern::parse("124-3"), VincularPattern::parse("134-2")};
    case Family::f2_132_142:
      return {VincularPattern::parse("132-4"), VincularPattern::parse("142-3")};
    case Family::f3_231_241:
      return {VincularPattern::parse("231-4"), VincularPattern::parse("241-3")};
  }
  throw std::logic_error("unreachable");
}

FamilySeries solve_family(Family f, int order) {
  OperatorKind op132 = OperatorKind::p132_family1;
  OperatorKind op231 = OperatorKind::p231_family1;
  OperatorKind op123 = OperatorKind::p123_shift;
  switch (f) {
    case Family::f1_124_134:
      op132 = OperatorKind::p132_family1;
      op231 = OperatorKind::p231_family1;
      op123 = OperatorKind::p123_shift;
      break;
    case Family::f2_132_142:
      op132 = OperatorKind::p132_family2;
      op231 = OperatorKind::p231_family2;
      op123 = OperatorKind::p123_sum;
      break;
    case Family::f3_231_241:
      op132 = OperatorKind::p132_family3;
      op231 = OperatorKind::p231_family3;
      op123 = OperatorKind::p123_sum;
      break;
  }
  // Fixed-point iteration from the zero series.  The insertions behind
  // Pop_21, Pop_132 and Pop_231 build onto arbitrary avoiders (their deletion
  // maps land in S[sigma; 1; .]), so those operators take F = F1 + F2; the
  // forced 123-insertion extends ascent-started permutations only, so Pop_123
  // takes F2.  Every operator raises the z-degree, so each pass settles one
  // more degree.
  TruncatedSeries F1(order), F2(order);
  for (int pass = 0; pass <= order + 2; ++pass) {
    TruncatedSeries F = F1 + F2;
    TruncatedSeries next1(order);
    next1.add(1, 1, 1);  // the permutation "1"
    next1 += apply_operator(OperatorKind::p21, F);
    TruncatedSeries next2(order);
    next2.add(2, 1, 1);  // the permutation "12"
    next2 += apply_operator(op132, F);
    next2 += apply_operator(op231, F);
    next2 += apply_operator(op123, F2);
    if (next1 == F1 && next2 == F2) return {std::move(F1), std::move(F2)};
    F1 = std::move(next1);
    F2 = std::move(next2);
  }
  throw std::logic_error("solve_family: iteration failed to converge");
}

SeriesBruteforceReport series_vs_bruteforce(Family f, int order, int threads,
                                            int bruteforce_ceiling) {
  if (order > bruteforce_ceiling)
    throw std::invalid_argument("series_vs_bruteforce: order exceeds the enumeration ceiling of " +
                                std::to_string(bruteforce_ceiling));
  SeriesBruteforceReport rep;
  rep.family = f;
  rep.order = order;
  const FamilySeries sol = solve_family(f, order);
  const TruncatedSeries F = sol.F();
  const auto pats = family_patterns(f);
  for (const VincularPattern* p : {&pats.first, &pats.second}) {
    for (int n = 1; n <= order; ++n) {
      const StatTable table = stat_distribution({*p}, n, StatKind::first_letter, threads);
      for (int a = 1; a <= n; ++a) {
        const auto it = table.counts.find(std::to_string(a));
        const std::uint64_t brute = (it == table.counts.end()) ? 0 : it->second;
        const SeriesInt coeff = F.coeff(n, a);
        if (coeff != static_cast<SeriesInt>(brute)) {
          rep.match = false;
          rep.mismatches.push_back({p->str(), n, a, series_int_str(coeff), brute});
        }
      }
    }
  }
  return rep;
}

}  // namespace vinc
