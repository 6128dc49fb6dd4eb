#include <gtest/gtest.h>

#include "bcsum/error.hpp"
#include "bcsum/estermann.hpp"
#include "bcsum/specfn.hpp"

using namespace bcsum;
using namespace bcsum::estermann;

namespace {

PrecisionConfig loose(double target) {
  PrecisionConfig cfg;
  cfg.target_abs_err = target;
  return cfg;
}

}  // namespace

TEST(EstermannSeries, BruteForceAlternating) {
  // q = 2, a = 0: Σ d(n) (−1)^n n^{−3}, summed naively with trial division.
  cplx brute = 0.0;
  for (long n = 1; n <= 100000; ++n) {
    brute += specfn::divisor_sigma(0.0, n).value * (n % 2 ? -1.0 : 1.0) / std::pow(static_cast<double>(n), 3);
  }
  const ComplexVal v = estermann_series({3.0, RationalArg::make(1, 2), 0.0}, loose(1e-8));
  EXPECT_LE(std::abs(v.value - brute), v.abs_err + 1e-8);
  EXPECT_NEAR(v.im(), 0.0, 1e-12);
}

TEST(EstermannSeries, ConjugateSymmetry) {
  const auto cfg = loose(1e-9);
  const ComplexVal a = estermann_series({3.5, RationalArg::make(2, 5), 0.5}, cfg);
  const ComplexVal b = estermann_series({3.5, RationalArg::make(-2, 5), 0.5}, cfg);
  EXPECT_LE(std::abs(a.value - std::conj(b.value)), a.abs_err + b.abs_err);
}

TEST(EstermannSeries, Guards) {
  EXPECT_THROW(estermann_series({2.0, RationalArg::make(1, 3), 1.0}), DomainError);
  EXPECT_THROW(estermann_series({1.0, RationalArg::make(1, 3), -1.0}), DomainError);
  PrecisionConfig few;
  few.max_terms = 100;
  EXPECT_THROW(estermann_series({3.0, RationalArg::make(1, 3), 0.0}, few), PrecisionError);
}

TEST(EstermannHurwitz, AgreesWithSeries) {
  const auto cfg = loose(1e-8);
  struct Point {
    cplx s;
    long p, q;
    cplx a;
  };
  for (const Point& pt : {Point{4.0, 1, 3, 1.0}, Point{cplx(3.5, 1.0), 2, 5, 0.5}, Point{2.8, 1, 4, -0.7},
                          Point{5.0, 3, 7, cplx(2.0, 1.0)}}) {
    const EstermannPoint e{pt.s, RationalArg::make(pt.p, pt.q), pt.a};
    const ComplexVal series = estermann_series(e, cfg);
    const ComplexVal hurwitz = estermann_hurwitz(e);
    EXPECT_LE(std::abs(series.value - hurwitz.value), series.abs_err + hurwitz.abs_err) << pt.s << " " << pt.a;
  }
}

TEST(EstermannHurwitz, HandExpandedTwoByTwo) {
  // q = 2, s = 3, a = 0: 2^{−6} Σ_{m,n ∈ {1,2}} (−1)^{mn} ζ(3, m/2) ζ(3, n/2).
  const double z1 = specfn::hurwitz_zeta(3.0, 0.5).value.real();
  const double z2 = specfn::hurwitz_zeta(3.0, 1.0).value.real();
  const double want = (-z1 * z1 + 2 * z1 * z2 + z2 * z2) / 64.0;
  EXPECT_NEAR(estermann_hurwitz({3.0, RationalArg::make(1, 2), 0.0}).re(), want, 1e-14);
  EXPECT_THROW(estermann_hurwitz({1.0, RationalArg::make(1, 2), 0.0}), PoleError);
  EXPECT_THROW(estermann_hurwitz({2.5, RationalArg::make(1, 2), 1.5}), PoleError);
}

TEST(EstermannNonpositive, Values) {
  EXPECT_NEAR(std::abs(estermann_nonpositive(0, RationalArg::make(1, 2), 0).value - 0.25), 0.0, 1e-15);
  EXPECT_THROW(estermann_nonpositive(2, RationalArg::make(1, 3), 0, Route::dual), DomainError);
}

TEST(EstermannNonpositive, RoutesAgree) {
  for (long q : {2L, 3L, 5L}) {
    for (long p : {1L, q - 1}) {
      if (p == q - 1 && q == 2) continue;
      for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned k = 0; k <= 4; ++k) {
          const RouteCheck c = verify_thm44(k, RationalArg::make(p, q), a);
          EXPECT_TRUE(c.pass()) << a << " " << k << " " << p << "/" << q;
          EXPECT_LE(c.worst(), 1e-9);
        }
      }
    }
  }
}

TEST(DualDisplays, Examples) {
  for (auto [s, a, q] : {std::tuple{2, 3, 3L}, {0, 1, 2L}, {1, 1, 5L}, {4, 0, 3L}}) {
    const RouteCheck c = verify_prop43(static_cast<double>(s), RationalArg::make(1, q), static_cast<double>(a));
    EXPECT_TRUE(c.pass()) << s << " " << a << " " << q;
    EXPECT_LE(c.worst(), 1e-9);
  }
  EXPECT_THROW(verify_prop43(0.5, RationalArg::make(1, 3), 1.0), DomainError);
}

TEST(LerchBernoulli, CotangentForm) {
  for (auto [p, q] : {std::pair{1L, 3L}, {1L, 5L}, {2L, 7L}}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const Residual r = verify_lemma41(k, RationalArg::make(p, q));
      EXPECT_LE(r.abs(), 1e-10) << k << " " << p << "/" << q;
      EXPECT_TRUE(r.pass());
    }
  }
}

TEST(Distribution, Residuals) {
  for (auto [s, z, n, p, q] : {std::tuple{cplx(2.5), cplx(0.7), 1L, 1L, 3L}, {cplx(3.0, 1.0), cplx(1.2), 2L, 1L, 5L},
                               {cplx(3.0, 1.0), cplx(1.2), 2L, 2L, 5L}, {cplx(2.5), cplx(0.7), 3L, 1L, 3L},
                               {cplx(2.2), cplx(0.5, 0.4), 1L, 3L, 4L}}) {
    const Residual r = verify_lemma42(s, z, n, RationalArg::make(p, q));
    EXPECT_LE(r.abs(), 1e-9) << s << " " << z << " " << n << " " << q;
    EXPECT_TRUE(r.pass());
  }
  EXPECT_THROW(verify_lemma42(1.0, 0.5, 1, RationalArg::make(1, 3)), DomainError);
}

TEST(CotangentSumSwap, Predictions) {
  for (unsigned a = 0; a <= 4; ++a) {
    const Residual r = verify_cor45(a, 0, RationalArg::make(2, 5));
    EXPECT_LE(r.abs(), 1e-9);
  }
  for (auto [a, k, q] : {std::tuple{2u, 4u, 5L}, {3u, 3u, 7L}, {1u, 3u, 5L}, {3u, 1u, 2L}}) {
    const Residual r = verify_cor45(a, k, RationalArg::make(1, q));
    EXPECT_LE(r.abs(), 1e-9);
    EXPECT_TRUE(r.pass());
  }
  // (q^k − q^a) ζ(−k) ζ(−a) at a = 1, k = 3, q = 5: (125 − 5)(1/120)(−1/12) = −1/12.
  EXPECT_NEAR(verify_cor45(1, 3, RationalArg::make(1, 5)).rhs.re(), -1.0 / 12, 1e-15);
  EXPECT_NEAR(verify_cor45(1, 3, RationalArg::make(1, 5)).lhs.re(), -1.0 / 12, 1e-12);
}

TEST(CotangentSumC, OddOrderIsReal) {
  for (unsigned k : {1u, 3u}) {
    for (unsigned a = 0; a <= 3; ++a) {
      const ComplexVal c = sums::cotangent_sum_C(a, k, RationalArg::make(2, 7));
      EXPECT_LE(std::abs(c.im()), c.abs_err + 1e-15);
    }
  }
}
