#pragma once

#include <vector>

#include "bcsum/complex_val.hpp"
#include "bcsum/rational.hpp"

namespace bcsum::specfn {

/// ζ(s, x) for complex s ≠ 1 and real x > 0 by Euler–Maclaurin summation.
ComplexVal hurwitz_zeta(cplx s, double x, const PrecisionConfig& cfg = {});
/// Same for complex x with Re x > 0.
ComplexVal hurwitz_zeta(cplx s, cplx x, const PrecisionConfig& cfg = {});

/// ∂^m/∂x^m ζ(s, x) = (−1)^m (s)^{(m)} ζ(s+m, x). At nonpositive integer s the
/// Bernoulli-polynomial closed form is differentiated instead.
ComplexVal hurwitz_zeta_x_deriv(unsigned m, cplx s, double x, const PrecisionConfig& cfg = {});

/// ζ(s) on the whole plane minus s = 1.
ComplexVal riemann_zeta(cplx s, const PrecisionConfig& cfg = {});

/// Γ(s), Lanczos with reflection for Re s < 1/2.
ComplexVal complex_gamma(cplx s, const PrecisionConfig& cfg = {});

/// P_m with cot^{(m)}(w) = P_m(cot w); P₀ = X, P_{m+1} = −(1+X²) P_m′.
struct CotDerivPolynomial {
  std::vector<exact::Integer> coefficients;  // ascending powers

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::vector<double> to_double() const;
  cplx operator()(cplx x) const;
};

CotDerivPolynomial cot_deriv_poly(unsigned m);

/// d^m/dw^m cot(w) at w = πθ (θ in units of π, not an integer).
ComplexVal cot_derivative(unsigned m, double theta, const PrecisionConfig& cfg = {});
/// Same for exact rational θ; the pole test is exact.
ComplexVal cot_derivative(unsigned m, const exact::Rational& theta, const PrecisionConfig& cfg = {});
/// Complex argument, w itself (no π scaling).
cplx cot_derivative_complex(unsigned m, cplx w);
/// cot(w) for complex w, stable for large |Im w|.
cplx cot_complex(cplx w);

/// Ψ^{(n)}(x) = (−1)^{n+1} n! ζ(n+1, x).
ComplexVal polygamma(unsigned n, double x, const PrecisionConfig& cfg = {});

/// Coefficients b_n = B_n(0; λ) for n = 0..k of t/(λe^t − 1).
std::vector<cplx> apostol_bernoulli_numbers(unsigned k, cplx lambda);

/// B_k(z; λ) from t e^{zt}/(λe^t − 1); λ ≠ 1.
ComplexVal apostol_bernoulli(unsigned k, cplx z, cplx lambda);

/// Φ(s, z, λ) = Σ λⁿ (z+n)^{−s}. Supported: Re s > 1 (series, |λ| = 1) and s a
/// nonpositive integer (Apostol–Bernoulli closed form).
ComplexVal lerch_phi(cplx s, cplx z, cplx lambda, const PrecisionConfig& cfg = {});

/// σ_a(n) = Σ_{d|n} d^a.
ComplexVal divisor_sigma(cplx a, long n);

/// E_{a+1}(z) = 1 + (2/ζ(−a)) Σ σ_a(n) e(nz). truncation ≤ 0 picks the length
/// from the tail bound.
ComplexVal eisenstein_E(cplx a, cplx z, long truncation = 0, const PrecisionConfig& cfg = {});

/// e(x) = exp(2πix).
cplx e_of(double x);
/// e(p/q) with the argument reduced exactly first.
cplx e_of(const exact::Rational& x);

}  // namespace bcsum::specfn
