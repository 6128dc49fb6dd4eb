#pragma once

#include <vector>

#include "bcsum/complex_val.hpp"
#include "bcsum/exact_scaled.hpp"
#include "bcsum/residual.hpp"

namespace bcsum::recip {

enum class PanelRule { gauss_legendre, adaptive_simpson };

/// Direction of travel along a vertical line Re z = ε. Downward (ε+i∞ → ε−i∞)
/// is the canonical one throughout.
enum class Orientation { downward, upward };

struct QuadratureConfig {
  double epsilon = 0.0;            // 0: half the admissible bound
  double truncation_height = 0.0;  // 0: chosen so the tail estimate is a quarter of the target
  PanelRule rule = PanelRule::gauss_legendre;
  double target_abs_err = 1e-12;

  void validate() const;
};

/// ∫ ∏_j (d/dz)^{m_j} cot(πk_j z) · z^{−p} dz along Re z = ε, one m per k.
/// Needs Re p > 1 and ε < 1/max k_j.
ComplexVal line_integral_cot_product(const std::vector<long>& ks, const std::vector<unsigned>& ms, cplx p,
                                     const QuadratureConfig& quad = {},
                                     Orientation orient = Orientation::downward);

/// ∫ cot(πhz) cot(πkz) z^{−a} dz along Re z = ε, Re a > 1, gcd(h, k) = 1.
ComplexVal line_integral_cotcot(cplx a, long h, long k, const QuadratureConfig& quad = {},
                                Orientation orient = Orientation::downward);

/// h^{1−a}c₋ₐ(h/k) + k^{1−a}c₋ₐ(k/h) against aζ(a+1)/(π(hk)^a) + (hk)^{1−a}/(2i)·∫
/// with ∫ running downward. Asking for upward flips the integral, and the
/// identity then fails by twice the integral term.
Residual verify_thm12(cplx a, long h, long k, const QuadratureConfig& quad = {},
                      Orientation orient = Orientation::downward, const PrecisionConfig& cfg = {});

/// 2(2πi)^n/(hk(n+1)!) Σ_m C(n+1,m) B_m B_{n+1−m} h^m k^{n+1−m}, B₁ zeroed.
exact::ExactScaled closed_form_integral(unsigned n, long h, long k);

Residual verify_cor23(unsigned n, long h, long k, const QuadratureConfig& quad = {});

/// g_a(z): Bernoulli sum plus the Mellin integral over Re s = −1/2 − 2M.
/// M < 0 picks the smallest admissible value.
ComplexVal g_a_numeric(cplx a, cplx z, int M = -1, const QuadratureConfig& quad = {},
                       const PrecisionConfig& cfg = {});

/// ψ_a(z) = (i/πz) ζ(1−a)/ζ(−a) − i z^{−1−a} cot(πa/2) + i g_a(z)/ζ(−a).
ComplexVal psi_a_numeric(cplx a, cplx z, int M = -1, const QuadratureConfig& quad = {},
                         const PrecisionConfig& cfg = {});

enum class PsiSource { polynomial, mellin };

/// c_a(h/k) − (k/h)^{1+a} c_a(−k/h) + k^a aζ(1−a)/(πh) against −iζ(−a)ψ_a(h/k).
/// The polynomial source needs a = −n with n odd > 1.
Residual verify_thm11(cplx a, long h, long k, PsiSource source = PsiSource::polynomial,
                      const QuadratureConfig& quad = {}, const PrecisionConfig& cfg = {});

/// g₋ₙ(z) from the exact polynomial against the Mellin route, n odd > 1.
Residual verify_g_polynomial(unsigned n, cplx z, const QuadratureConfig& quad = {}, const PrecisionConfig& cfg = {});

/// ψ_a(z) against E_{a+1}(z) − z^{−1−a} E_{a+1}(−1/z) from the q-series, Im z > 0.
/// The polynomial source needs a = −n with n odd > 1.
Residual verify_eisenstein_period(cplx a, cplx z, PsiSource source = PsiSource::polynomial,
                                  const QuadratureConfig& quad = {}, const PrecisionConfig& cfg = {});

/// Laurent data of the integrand ζ-factor (j = 0, around s = 1) and of the
/// cotangent factors (j ≥ 1, around z = 0). Cotangent factor j carries the
/// z-derivative (d/dz)^{m_j} cot(πk_j z).
class LaurentCoeffs {
 public:
  /// ks = k₁..k_d, ms = m₀..m_d.
  LaurentCoeffs(cplx a, std::vector<long> ks, std::vector<unsigned> ms);

  std::size_t factors() const { return ks_.size(); }
  /// Smallest l with a possibly nonzero coefficient: 0 for j = 0, −(m_j+1) otherwise.
  int support_lower(std::size_t j) const;
  /// a_{l_0}; throws PoleError if a + m₀ + l lands on 1.
  ComplexVal zeta(int l, const PrecisionConfig& cfg = {}) const;
  /// a_{l_j} for j ≥ 1.
  exact::ExactScaled cot(std::size_t j, int l) const;
  /// Σ_{l₁+…+l_d = total} ∏_j a_{l_j}.
  exact::ExactScaled cot_convolution(int total) const;
  /// Σ_{l₀=0}^{Σm+d−1} a_{l₀} Σ_{l₁+…+l_d = −l₀−1} ∏ a_{l_j}.
  ComplexVal residue_at_one(const PrecisionConfig& cfg = {}) const;

 private:
  cplx a_;
  std::vector<long> ks_;
  std::vector<unsigned> ms_;
};

/// a_l of (d/dz)^m cot(πkz) around z = 0.
exact::ExactScaled laurent_coeff_cot(long k, unsigned m, int l);

/// The weighted double sum of generalized sums on the left of the higher
/// reciprocity laws, at complex a.
ComplexVal higher_lhs(cplx a, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const PrecisionConfig& cfg = {});

Residual verify_thm31(cplx a, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const QuadratureConfig& quad = {}, const PrecisionConfig& cfg = {});

/// Throws DomainError unless m₀ + n + d + Σm_j is odd.
Residual verify_thm32(long n, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const PrecisionConfig& cfg = {});

Residual verify_cor33(long n, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const QuadratureConfig& quad = {});

}  // namespace bcsum::recip
