#include <gtest/gtest.h>

#include <numbers>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/recip.hpp"
#include "bcsum/specfn.hpp"

using namespace bcsum;
using namespace bcsum::recip;
using exact::ExactScaled;
using exact::Rational;

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// Laurent coefficient of (d/dz)^m cot(πkz) at 0 by the trapezoid rule on a
// circle of radius r < 1/k, derivatives taken by the chain rule on cot_complex.
cplx cauchy_coeff(long k, unsigned m, int l) {
  const double r = 0.5 / static_cast<double>(k);
  constexpr int N = 256;
  cplx acc = 0.0;
  for (int j = 0; j < N; ++j) {
    const cplx z = std::polar(r, 2 * pi * j / N);
    const cplx f = std::pow(pi * k, m) * specfn::cot_derivative_complex(m, pi * static_cast<double>(k) * z);
    acc += f * std::pow(z, -l);
  }
  return acc / static_cast<double>(N);
}

void expect_small(const Residual& r, double tol) {
  EXPECT_LE(r.abs(), tol) << "lhs " << r.lhs.value << " rhs " << r.rhs.value;
  EXPECT_TRUE(r.pass()) << "residual " << r.abs() << " over budget " << r.budget;
}

}  // namespace

TEST(LaurentCoeffs, CaseTableExamples) {
  EXPECT_EQ(laurent_coeff_cot(3, 0, -1), ExactScaled(Rational(1, 3), -1, 0));
  EXPECT_TRUE(laurent_coeff_cot(3, 0, 0).is_zero());
  EXPECT_EQ(laurent_coeff_cot(2, 0, 1), ExactScaled(Rational(-2, 3), 1, 0));
  // Between the pole order and zero everything vanishes.
  EXPECT_TRUE(laurent_coeff_cot(2, 2, -2).is_zero());
  EXPECT_TRUE(laurent_coeff_cot(2, 2, -4).is_zero());
  const LaurentCoeffs lc(2.5, {2, 3}, {1, 2, 0});
  EXPECT_EQ(lc.support_lower(0), 0);
  EXPECT_EQ(lc.support_lower(1), -3);
  EXPECT_EQ(lc.support_lower(2), -1);
}

TEST(LaurentCoeffs, MatchCauchyIntegral) {
  for (long k : {1L, 2L, 3L}) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (int l = -4; l <= 5; ++l) {
        const cplx want = cauchy_coeff(k, m, l);
        const cplx got = laurent_coeff_cot(k, m, l).to_complex();
        EXPECT_NEAR(std::abs(got - want), 0.0, 1e-9 * (1 + std::abs(want))) << k << " " << m << " " << l;
      }
    }
  }
}

TEST(LaurentCoeffs, ResidueBookkeeping) {
  for (cplx a : {cplx(2.5), cplx(3.0), cplx(2.0, 1.0)}) {
    for (auto [h, k] : {std::pair{1L, 2L}, {2L, 3L}, {3L, 4L}}) {
      const ComplexVal res = LaurentCoeffs(a, {h, k}, {0, 0, 0}).residue_at_one();
      const cplx want = -a * specfn::riemann_zeta(a + 1.0).value / (pi * pi * static_cast<double>(h * k));
      EXPECT_NEAR(std::abs(res.value - want), 0.0, 1e-13);
    }
  }
}

TEST(LaurentCoeffs, ConvolutionReproducesClosedForm) {
  for (unsigned n : {3u, 5u, 7u}) {
    for (auto [h, k] : {std::pair{1L, 1L}, {1L, 2L}, {2L, 3L}, {3L, 5L}}) {
      const ExactScaled conv = LaurentCoeffs(static_cast<double>(n), {h, k}, {0, 0, 0}).cot_convolution(n - 1);
      EXPECT_EQ(-ExactScaled(Rational(1), 1, 1) * conv, closed_form_integral(n, h, k));
    }
  }
}

TEST(ClosedFormIntegral, Values) {
  EXPECT_EQ(closed_form_integral(3, 1, 1), ExactScaled(Rational(-1, 15), 3, 1));
  EXPECT_THROW(closed_form_integral(4, 1, 1), DomainError);
  EXPECT_THROW(closed_form_integral(3, 2, 4), DomainError);
}

TEST(LineIntegral, CotCotMatchesClosedForm) {
  const cplx v = line_integral_cotcot(3.0, 1, 1).value;
  EXPECT_NEAR(std::abs(v - cplx(0.0, -pi * pi * pi / 15)), 0.0, 1e-10);
  for (auto [n, h, k] : {std::tuple{3u, 1L, 2L}, {5u, 2L, 3L}, {3u, 3L, 4L}}) {
    expect_small(verify_cor23(n, h, k), 1e-9);
  }
}

TEST(LineIntegral, EpsilonIndependence) {
  for (cplx a : {cplx(2.5), cplx(2.0, 1.0)}) {
    QuadratureConfig q1, q2;
    q1.epsilon = 0.05;
    q2.epsilon = 0.3;
    const ComplexVal v1 = line_integral_cotcot(a, 2, 3, q1);
    const ComplexVal v2 = line_integral_cotcot(a, 2, 3, q2);
    EXPECT_LE(std::abs(v1.value - v2.value), v1.abs_err + v2.abs_err);
  }
  // Odd number of factors goes through the half-line constants.
  QuadratureConfig q1, q2;
  q1.epsilon = 0.04;
  q2.epsilon = 0.15;
  const ComplexVal w1 = line_integral_cot_product({2, 3, 5}, {0, 0, 0}, 2.5, q1);
  const ComplexVal w2 = line_integral_cot_product({2, 3, 5}, {0, 0, 0}, 2.5, q2);
  EXPECT_LE(std::abs(w1.value - w2.value), w1.abs_err + w2.abs_err);
}

TEST(LineIntegral, RulesAgreeAndTargetRefines) {
  QuadratureConfig gl, simpson, coarse;
  simpson.rule = PanelRule::adaptive_simpson;
  simpson.target_abs_err = 1e-10;
  coarse.target_abs_err = 1e-6;
  const ComplexVal a = line_integral_cotcot(2.5, 2, 3, gl);
  const ComplexVal b = line_integral_cotcot(2.5, 2, 3, simpson);
  const ComplexVal c = line_integral_cotcot(2.5, 2, 3, coarse);
  EXPECT_LE(std::abs(a.value - b.value), a.abs_err + b.abs_err);
  EXPECT_LE(std::abs(a.value - c.value), c.abs_err);
  EXPECT_LE(c.abs_err, 1e-5);
}

TEST(LineIntegral, Deterministic) {
  const ComplexVal a = line_integral_cot_product({2, 3}, {1, 0}, 3.5, {});
  const ComplexVal b = line_integral_cot_product({2, 3}, {1, 0}, 3.5, {});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.abs_err, b.abs_err);
}

TEST(LineIntegral, Guards) {
  QuadratureConfig bad;
  bad.epsilon = 0.4;
  EXPECT_THROW(line_integral_cotcot(2.5, 2, 3, bad), DomainError);
  EXPECT_THROW(line_integral_cotcot(1.0, 2, 3), DomainError);
  EXPECT_THROW(line_integral_cotcot(2.5, 2, 4), DomainError);
  QuadratureConfig short_line;
  short_line.truncation_height = 0.5;
  EXPECT_THROW(line_integral_cotcot(2.5, 1, 2, short_line), PrecisionError);
  QuadratureConfig neg;
  neg.target_abs_err = -1;
  EXPECT_THROW(line_integral_cotcot(2.5, 1, 2, neg), DomainError);
}

TEST(CotCotReciprocity, Residuals) {
  for (cplx a : {cplx(2.5), cplx(3.0), cplx(4.25)}) {
    for (auto [h, k] : {std::pair{1L, 2L}, {2L, 3L}, {3L, 4L}}) expect_small(verify_thm12(a, h, k), 1e-8);
  }
  expect_small(verify_thm12(cplx(2.0, 1.0), 3, 4), 1e-6);
  EXPECT_NEAR(verify_thm12(2.5, 2, 3).lhs.re(), -0.1714846400239011328, 1e-13);
}

TEST(CotCotReciprocity, OrientationPinned) {
  const Residual down = verify_thm12(2.5, 2, 3);
  const Residual up = verify_thm12(2.5, 2, 3, {}, Orientation::upward);
  const ComplexVal integral = line_integral_cotcot(2.5, 2, 3);
  const double term = std::abs(std::pow(6.0, 1.0 - 2.5) / (2.0 * I) * integral.value);
  EXPECT_LE(down.abs(), 1e-12);
  EXPECT_NEAR(up.abs(), 2 * term, 1e-10);
}

TEST(CotCotReciprocity, ResidualShrinksWithTarget) {
  for (auto [h, k] : {std::pair{2L, 3L}, {1L, 2L}}) {
    QuadratureConfig loose, tight;
    loose.target_abs_err = 1e-6;
    tight.target_abs_err = 1e-7;
    const Residual a = verify_thm12(2.5, h, k, loose);
    const Residual b = verify_thm12(2.5, h, k, tight);
    EXPECT_TRUE(a.pass());
    EXPECT_TRUE(b.pass());
    EXPECT_GE(a.abs(), 5 * b.abs());
  }
}

TEST(GaMellin, MatchesPolynomial) {
  const ComplexVal g3 = g_a_numeric(-3.0, 1.0);
  EXPECT_NEAR(std::abs(g3.value - cplx(-2 * pi * pi * pi / 45)), 0.0, 1e-10);
  EXPECT_EQ(exact::g_polynomial(3).evaluate_unweighted(Rational(1)), ExactScaled(Rational(-2, 45), 3, 0));
  const ComplexVal g5 = g_a_numeric(-5.0, 2.0);
  EXPECT_NEAR(std::abs(g5.value - exact::g_polynomial(5).evaluate_unweighted(cplx(2.0))), 0.0, 1e-10);
}

TEST(GaMellin, MIndependence) {
  for (auto [a, z] : {std::pair{cplx(-2.5), cplx(1.0, 1.0)}, {cplx(-1.3, 0.4), cplx(0.7)}, {cplx(0.5), cplx(1.0)}}) {
    const int m0 = static_cast<int>(std::ceil(-std::min(0.0, a.real()) / 2));
    const ComplexVal lo = g_a_numeric(a, z, m0);
    const ComplexVal hi = g_a_numeric(a, z, m0 + 1);
    EXPECT_LE(std::abs(lo.value - hi.value), lo.abs_err + hi.abs_err) << a << " " << z;
  }
  EXPECT_THROW(g_a_numeric(-3.0, 1.0, 1), DomainError);
}

TEST(GaMellin, PsiMatchesEisensteinPeriod) {
  // ψ_a(z) = E(z) − z^{−1−a} E(−1/z) with the q-series, independent of the Mellin line.
  const cplx a(-2.3), z(1.0, 1.0);
  const ComplexVal psi = psi_a_numeric(a, z);
  const cplx e1 = specfn::eisenstein_E(a, z).value;
  const cplx e2 = specfn::eisenstein_E(a, -1.0 / z).value;
  EXPECT_NEAR(std::abs(psi.value - (e1 - std::pow(z, -1.0 - a) * e2)), 0.0, 1e-9);
}

TEST(GaMellin, PolynomialCrossCheck) {
  for (unsigned n : {3u, 5u, 7u}) {
    for (cplx z : {cplx(1.0), cplx(0.5, 0.75), cplx(2.0, -1.0)}) expect_small(verify_g_polynomial(n, z), 1e-9);
  }
  EXPECT_THROW(verify_g_polynomial(4, 1.0), DomainError);
}

TEST(GaMellin, EisensteinPeriod) {
  for (double a : {-3.0, -5.0}) {
    for (cplx z : {cplx(0.0, 1.0), cplx(1.0, 1.0)}) {
      expect_small(verify_eisenstein_period(a, z), 1e-8);
      expect_small(verify_eisenstein_period(a, z, PsiSource::mellin), 1e-8);
    }
  }
  expect_small(verify_eisenstein_period(-2.3, cplx(0.5, 1.5), PsiSource::mellin), 1e-8);
  EXPECT_THROW(verify_eisenstein_period(-3.0, cplx(1.0)), DomainError);
}

TEST(GaMellin, PsiAtMinusThree) {
  const ComplexVal psi = psi_a_numeric(-3.0, 1.0);
  const cplx want(0.0, -pi * pi * pi / (30 * specfn::riemann_zeta(3.0).value.real()));
  EXPECT_NEAR(std::abs(psi.value - want), 0.0, 1e-10);
  const cplx poly = exact::psi_polynomial(3).evaluate_unweighted(cplx(2.0 / 3.0)) / specfn::riemann_zeta(3.0).value;
  EXPECT_NEAR(std::abs(psi_a_numeric(-3.0, 2.0 / 3.0).value - poly), 0.0, 1e-10);
}

TEST(GaMellin, Guards) {
  EXPECT_THROW(g_a_numeric(-2.5, cplx(-1.0)), DomainError);
  EXPECT_THROW(g_a_numeric(-2.0, cplx(1.0)), PoleError);
  EXPECT_THROW(psi_a_numeric(0.0, cplx(1.0)), PoleError);
  EXPECT_THROW(psi_a_numeric(2.0, cplx(1.0)), DomainError);
}

TEST(PsiReciprocity, PolynomialAndMellin) {
  for (double a : {-3.0, -5.0}) {
    for (auto [h, k] : {std::pair{2L, 3L}, {3L, 5L}}) {
      expect_small(verify_thm11(a, h, k), 1e-10);
      expect_small(verify_thm11(a, h, k, PsiSource::mellin), 1e-10);
    }
  }
  EXPECT_NEAR(verify_thm11(-3.0, 2, 3).lhs.re(), -0.52953106264709569435, 1e-13);
  EXPECT_NEAR(verify_thm11(-5.0, 3, 5).lhs.re(), -0.35996118633057275761, 1e-13);
  // Non-integer a only has the Mellin route.
  expect_small(verify_thm11(-2.5, 2, 3, PsiSource::mellin), 1e-9);
  EXPECT_THROW(verify_thm11(-2.5, 2, 3), DomainError);
}

TEST(HigherReciprocity, Residuals) {
  expect_small(verify_thm31(2.5, {2, 3}, {0, 0, 0}), 1e-10);
  expect_small(verify_thm31(3.5, {2, 3}, {1, 0, 0}), 1e-9);
  expect_small(verify_thm31(3.5, {2, 3}, {0, 1, 0}), 1e-9);
  expect_small(verify_thm31(2.5, {2, 3}, {0, 1, 1}), 1e-9);
  expect_small(verify_thm31(2.5, {2, 3, 5}, {0, 0, 0, 0}), 1e-9);
  expect_small(verify_thm31(cplx(3.0, 0.5), {3, 4}, {1, 0, 1}), 1e-9);
  EXPECT_THROW(verify_thm31(2.5, {2, 4}, {0, 0, 0}), DomainError);
  EXPECT_THROW(verify_thm31(2.5, {2}, {0, 0}), DomainError);
}

TEST(HigherReciprocity, ReducesToCotCot) {
  // For d = 2 and m = 0 the left side is (hk)^{a−1}/π times the two-term cot-cot left side.
  const cplx a = 2.5;
  const ComplexVal higher = higher_lhs(a, {2, 3}, {0, 0, 0});
  const Residual r12 = verify_thm12(a, 2, 3);
  EXPECT_NEAR(std::abs(higher.value - std::pow(6.0, a - 1.0) / pi * r12.lhs.value), 0.0, 1e-13);
}

TEST(HigherReciprocityIntegerA, Residuals) {
  expect_small(verify_thm32(3, {2, 3}, {0, 0, 0}), 1e-10);
  expect_small(verify_thm32(4, {3, 4}, {1, 0, 0}), 1e-9);
  expect_small(verify_thm32(5, {2, 5}, {0, 1, 1}), 1e-8);
  expect_small(verify_thm32(2, {2, 3, 5}, {0, 0, 0, 0}), 1e-10);
  EXPECT_THROW(verify_thm32(4, {2, 3}, {0, 0, 0}), DomainError);
  EXPECT_THROW(verify_thm32(1, {2, 3}, {1, 0, 0}), DomainError);
}

TEST(HigherClosedFormIntegral, Residuals) {
  expect_small(verify_cor33(3, {1, 1}, {0, 0, 0}), 1e-10);
  expect_small(verify_cor33(5, {2, 3}, {0, 0, 0}), 1e-9);
  expect_small(verify_cor33(4, {2, 3}, {0, 1, 0}), 1e-9);
  expect_small(verify_cor33(2, {2, 3, 5}, {0, 0, 0, 0}), 1e-9);
  expect_small(verify_cor33(3, {2, 3, 5}, {1, 0, 0, 0}), 1e-9);
  EXPECT_THROW(verify_cor33(4, {2, 3}, {0, 0, 0}), DomainError);
}
