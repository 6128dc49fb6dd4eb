#include <gtest/gtest.h>

#include <numbers>
#include <numeric>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/specfn.hpp"
#include "bcsum/sums.hpp"

using namespace bcsum;
using namespace bcsum::sums;

namespace {

constexpr double pi = std::numbers::pi;

double cot(double w) { return std::cos(w) / std::sin(w); }

}  // namespace

TEST(BCSumSpec, Validation) {
  EXPECT_THROW(BCSumSpec::make(-1.0, 5, {2}, {0, 0}), PoleError);
  EXPECT_THROW(BCSumSpec::make(1.0, 5, {2}, {2, 0}), PoleError);  // −a + m0 = 1
  EXPECT_THROW(BCSumSpec::make(2.0, 6, {4}, {0, 0}), DomainError);
  EXPECT_THROW(BCSumSpec::make(2.0, 6, {5}, {0}), DomainError);
  EXPECT_NO_THROW(BCSumSpec::make(2.0, 6, {5, 7}, {0, 1, 2}));
  EXPECT_THROW(RationalArg::make(2, 4), DomainError);
  EXPECT_THROW(RationalArg::make(1, 1), DomainError);
}

TEST(BCSum, TrivialAndSignRule) {
  EXPECT_EQ(bc_sum(cplx(2.5, 1.0), 1, 1).value, cplx(0.0));
  EXPECT_EQ(bc_sum(-3.0, -2, 5).value, -bc_sum(-3.0, 2, 5).value);
  EXPECT_THROW(bc_sum(2.0, 2, 4), DomainError);
  EXPECT_THROW(bc_sum(-1.0, 1, 3), PoleError);
}

TEST(BCSum, MatchesExactCMinusN) {
  for (unsigned n : {3u, 5u, 7u}) {
    for (auto [h, k] : {std::pair{1L, 2L}, {2L, 3L}, {3L, 5L}, {5L, 7L}, {7L, 12L}, {4L, 9L}}) {
      const auto num = bc_sum(-double(n), h, k);
      const cplx ex = exact::exact_c_minus_n(n, h, k).to_complex();
      EXPECT_LE(std::abs(num.value - ex), 1e-10) << n << " " << h << "/" << k;
      EXPECT_LE(std::abs(num.value - ex), num.abs_err + 1e-15 * std::abs(ex));
    }
  }
}

TEST(BCSum, VasyuninCase) {
  for (auto [h, k] : {std::pair{1L, 3L}, {2L, 5L}, {5L, 8L}}) {
    double direct = 0.0;
    for (long m = 1; m < k; ++m) direct += cot(pi * m * h / k) * (0.5 - double(m) / k);
    EXPECT_NEAR(bc_sum(0.0, h, k).re(), direct, 1e-13);
  }
}

TEST(BCSum, CotangentDerivativeReduction) {
  // c₋ₙ(h/k) = π^n/(2kⁿ(n−1)!) Σ cot(πmh/k) cot^{(n−1)}(πm/k), derivative evaluated at the point
  for (unsigned n : {3u, 5u}) {
    for (auto [h, k] : {std::pair{1L, 4L}, {3L, 7L}, {5L, 9L}}) {
      double sum = 0.0;
      for (long m = 1; m < k; ++m) {
        sum += cot(pi * m * h / k) * specfn::cot_derivative(n - 1, exact::Rational(m, k)).re();
      }
      const double expect = std::pow(pi, n) / (2 * std::pow(double(k), n) * exact::factorial(n - 1).get_d()) * sum;
      EXPECT_NEAR(bc_sum(-double(n), h, k).re(), expect, 1e-11 * (1 + std::abs(expect)));
    }
  }
}

TEST(BCSumGeneral, ReducesToPlainSum) {
  for (const cplx a : {cplx(2.5, 0.0), cplx(-3.0, 0.0), cplx(2.0, 1.0)}) {
    const auto g = bc_sum_general(BCSumSpec::make(a, 7, {3}, {0, 0}));
    EXPECT_EQ(g.value, bc_sum(a, 3, 7).value);
    EXPECT_EQ(bc_sum_higher(a, 7, {3}).value, g.value);
  }
  EXPECT_EQ(bc_sum_general(BCSumSpec::make(2.5, 1, {3, 4}, {1, 2, 0})).value, cplx(0.0));
}

TEST(BCSumGeneral, FiniteDifferenceOracle) {
  // m = (1, 1, 0): derivatives in x of ζ(−a, x) and in w of cot(w), both by central differences
  const cplx a(2.5, 0.0);
  const long k0 = 7, k1 = 2, k2 = 3;
  const double h = 1e-4;
  cplx expect = 0.0;
  for (long l = 1; l < k0; ++l) {
    const double x = double(l) / k0;
    const cplx dz = (specfn::hurwitz_zeta(-a, x + h).value - specfn::hurwitz_zeta(-a, x - h).value) / (2 * h);
    const double w = pi * k1 * x;
    const double dcot = (cot(w + h) - cot(w - h)) / (2 * h);
    expect += dz * dcot * cot(pi * k2 * x);
  }
  expect *= std::pow(double(k0), a);
  const auto got = bc_sum_general(BCSumSpec::make(a, k0, {k1, k2}, {1, 1, 0}));
  EXPECT_LT(std::abs(got.value - expect), 1e-6 * (1 + std::abs(expect)));
}

TEST(BCSumHigher, Examples) {
  EXPECT_NEAR(std::abs(bc_sum_higher(3.0, 2, {1, 1}).value), 0.0, 1e-15);
  const cplx a = 2.5;
  cplx direct = 0.0;
  for (long m = 1; m < 5; ++m) {
    direct += specfn::hurwitz_zeta(-a, m / 5.0).value * cot(pi * 2 * m / 5.0) * cot(pi * 3 * m / 5.0);
  }
  direct *= std::pow(5.0, a);
  EXPECT_LT(std::abs(bc_sum_higher(a, 5, {2, 3}).value - direct), 1e-12);
}

TEST(CotangentSumC, Values) {
  EXPECT_NEAR(std::abs(cotangent_sum_C(0, 0, RationalArg::make(1, 2)).value), 0.0, 1e-16);
  EXPECT_THROW(cotangent_sum_C(1, 1, {1, 1}), DomainError);
  // for k ≥ 1 the Lerch form and the cotangent form coincide
  for (long q : {2L, 3L, 5L, 7L}) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned k = 1; k <= 4; ++k) {
          const auto c = cotangent_sum_C(a, k, {p, q});
          const auto f = cotangent_sum_phi(a, k, {p, q});
          EXPECT_LT(std::abs(c.value - f.value), 1e-10 * (1 + std::abs(c.value)));
        }
      }
    }
  }
}
