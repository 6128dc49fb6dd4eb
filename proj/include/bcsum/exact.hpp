#pragma once

#include <complex>
#include <map>
#include <vector>

#include "bcsum/exact_scaled.hpp"
#include "bcsum/rational.hpp"

namespace bcsum::exact {

/// Which value B₁ takes. The cotangent expansion πz·cot(πz) = Σ (2πi)^m B_m z^m / m!
/// needs B₁ = 0; everything else uses the standard B₁ = −1/2.
enum class BernoulliConvention { standard, zeroed };

Rational bernoulli_number(unsigned n, BernoulliConvention conv = BernoulliConvention::standard);

/// Polynomial with rational coefficients, ascending powers.
struct RationalPolynomial {
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;
};

/// B_n(x) under the standard convention.
RationalPolynomial bernoulli_polynomial(unsigned n);

/// B̄_n(x) = B_n(x − ⌊x⌋). For n = 1 the jump points take the value 0.
Rational periodic_bernoulli(unsigned n, const Rational& x);

/// x^(n) = x(x+1)…(x+n−1); n = 0 gives 1.
Rational rising_factorial(const Rational& x, unsigned n);
std::complex<double> rising_factorial(std::complex<double> x, unsigned n);

/// ζ(−k) = −B_{k+1}(1)/(k+1).
Rational zeta_neg_int(unsigned k);

/// ζ(−k, x) = −B_{k+1}(x)/(k+1) for rational x > 0.
Rational hurwitz_neg_int(unsigned k, const Rational& x);

/// ζ(2m) = (−1)^{m+1} (2π)^{2m} B_{2m} / (2 (2m)!) as coeff·π^{2m}.
ExactScaled zeta_even_positive(unsigned two_m);

/// s(h, k) = Σ_{m=1}^{k−1} ((m/k))((mh/k)).
Rational dedekind_sum(long h, long k);

/// Right-hand side of Dedekind reciprocity, −1/4 + (h/k + 1/(hk) + k/h)/12.
Rational dedekind_reciprocity_rhs(long h, long k);

/// Dedekind–Apostol sum s_n(h, k) = Σ_{μ=1}^{k−1} (μ/k) B̄_n(hμ/k), n odd > 1.
Rational apostol_sum(unsigned n, long h, long k);

/// c₋ₙ(h/k) = (2πi)^n / (i·n!) · s_n(h, k) for odd n > 1.
/// A negative h uses c₋ₙ(−x) = −c₋ₙ(x).
ExactScaled exact_c_minus_n(unsigned n, long h, long k);

/// (2πi/hk)^n /(i(n+1)!) · (n B_{n+1} + Σ_m C(n+1,m) B_m B_{n+1−m} h^m k^{n+1−m}).
ExactScaled thm13_rhs(unsigned n, long h, long k,
                      BernoulliConvention conv = BernoulliConvention::standard);

/// h^{1−n} c₋ₙ(h/k) + k^{1−n} c₋ₙ(k/h) − thm13_rhs(n, h, k). Exactly zero when the
/// reciprocity law holds.
ExactScaled verify_thm13(unsigned n, long h, long k);

/// Σ_{m=0}^{n+1} C(n+1,m) B_m B_{n+1−m} h^m k^{n+1−m} (B₁ per conv).
Rational bernoulli_convolution(unsigned n, const Rational& h, const Rational& k,
                               BernoulliConvention conv);

/// Laurent polynomial in z with ExactScaled coefficients. A nonzero zeta_weight n
/// means the whole polynomial carries an implicit factor 1/ζ(n).
struct PeriodPolynomial {
  std::map<int, ExactScaled> coefficients;
  unsigned zeta_weight = 0;

  /// Exact value at a nonzero rational z, without the 1/ζ(n) weight.
  ExactScaled evaluate_unweighted(const Rational& z) const;
  /// Numeric value at z ≠ 0, without the 1/ζ(n) weight.
  std::complex<double> evaluate_unweighted(std::complex<double> z) const;
};

/// ψ₋ₙ(z) = (2πi)^n/(ζ(n)(n+1)!) Σ_{m=0}^{n+1} C(n+1,m) B_m B_{n+1−m} z^{m−1}.
PeriodPolynomial psi_polynomial(unsigned n);

/// g₋ₙ(z) = (2πi)^n/(i(n+1)!) Σ_{m=0}^{n} C(n+1,m+1) B_{m+1} B_{n−m} z^m, B₁ zeroed.
PeriodPolynomial g_polynomial(unsigned n);

}  // namespace bcsum::exact
