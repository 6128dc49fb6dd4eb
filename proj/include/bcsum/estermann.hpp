#pragma once

#include <algorithm>
#include <optional>

#include "bcsum/complex_val.hpp"
#include "bcsum/residual.hpp"
#include "bcsum/sums.hpp"

namespace bcsum::estermann {

using sums::RationalArg;

/// E(s, x, a) = Σ σ_a(n) e(nx) n^{−s} at x = p/q.
struct EstermannPoint {
  cplx s;
  RationalArg x;
  cplx a;
};

/// Dirichlet series with a divisor sieve, for Re s > max(1, Re a + 1). The
/// tail is bounded with σ_a(n) ≤ n^{max(0,Re a)} d(n) and Σ_{n≤x} d(n) ≤ x(1 + log x).
ComplexVal estermann_series(const EstermannPoint& pt, const PrecisionConfig& cfg = {});

/// q^{a−2s} Σ_{m,n=1}^{q} e(mnx) ζ(s−a, m/q) ζ(s, n/q).
ComplexVal estermann_hurwitz(const EstermannPoint& pt, const PrecisionConfig& cfg = {});

/// The two closed forms for E(−k, x, a−k) at nonnegative integers k, a.
/// primary: C(a,k,x) + q^a ζ(−k)ζ(−a) (k ≥ 1), C(a,0,x) − ζ(−a)/2 (k = 0).
/// dual:    C(k,a,x) + q^k ζ(−k)ζ(−a) (k ≥ 1), C(0,a,x) − ζ(−a)/2 (k = 0); needs a ≥ 1.
enum class Route { primary, dual };
ComplexVal estermann_nonpositive(unsigned k, RationalArg x, unsigned a, Route route = Route::primary,
                                 const PrecisionConfig& cfg = {});

/// Agreement of one formula with an independent oracle, and of two routes with
/// each other when both exist.
struct RouteCheck {
  Residual oracle;
  std::optional<Residual> routes;

  bool pass() const { return oracle.pass() && (!routes || routes->pass()); }
  double worst() const { return std::max(oracle.abs(), routes ? routes->abs() : 0.0); }
};

/// B_k(0; e(x)) against cot(πx)/(2i) − 1/2 (k = 1) or k cot^{(k−1)}(πx)/(2i)^k (k > 1).
Residual verify_lemma41(unsigned k, RationalArg x);

/// Σ_{m=0}^{q−1} e(mnx) ζ(s, z + m/q) against q^s Φ(s, qz, e(nx)); Re s > 1, Re z > 0.
Residual verify_lemma42(cplx s, cplx z, long n, RationalArg x, const PrecisionConfig& cfg = {});

/// Both displays for E(−s, x, a−s) at nonnegative integers s, a. The oracle is
/// the first display against the Hurwitz double sum; routes compares the two
/// displays.
RouteCheck verify_prop43(cplx s, RationalArg x, cplx a, const PrecisionConfig& cfg = {});

/// Primary route against the Hurwitz double sum, and against the dual route when a ≥ 1.
RouteCheck verify_thm44(unsigned k, RationalArg x, unsigned a, const PrecisionConfig& cfg = {});

/// C(a,k,x) − C(k,a,x) against 0 (k = 0 or a = 0) or (q^k − q^a) ζ(−k) ζ(−a), the
/// difference of the two closed forms for E(−k, x, a−k).
Residual verify_cor45(unsigned a, unsigned k, RationalArg x, const PrecisionConfig& cfg = {});

}  // namespace bcsum::estermann
