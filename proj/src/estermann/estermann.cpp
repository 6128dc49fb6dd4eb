#include "bcsum/estermann.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/parallel.hpp"
#include "bcsum/specfn.hpp"

namespace bcsum::estermann {

using exact::Rational;

namespace {

constexpr double pi = std::numbers::pi;

bool is_nonneg_integer(cplx v) { return v.imag() == 0.0 && v.real() >= 0 && v.real() == std::floor(v.real()); }

// Σ_{n>N} d(n) n^{−σ} by partial summation with Σ_{n≤x} d(n) ≤ x(1 + log x).
double divisor_tail(double sigma, double n) {
  const double r = sigma - 1.0;
  return sigma * std::pow(n, -r) * ((1.0 + std::log(n)) / r + 1.0 / (r * r));
}

ComplexVal zeta_neg(unsigned k) {
  return {exact::zeta_neg_int(k).to_double(), kEps * std::abs(exact::zeta_neg_int(k).to_double())};
}

ComplexVal q_power(long q, unsigned e) {
  const double v = std::pow(static_cast<double>(q), e);
  return {v, 0.0};
}

}  // namespace

ComplexVal estermann_series(const EstermannPoint& pt, const PrecisionConfig& cfg) {
  cfg.validate();
  const double sigma = pt.s.real() - std::max(0.0, pt.a.real());
  if (!(pt.s.real() > 1.0) || !(sigma > 1.0)) {
    throw DomainError("the Estermann series needs Re(s) > max(1, Re(a) + 1)");
  }
  const double goal = 0.5 * cfg.target_abs_err;
  double lo = 1.0, hi = 2.0;
  while (divisor_tail(sigma, hi) > goal) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e18) break;
  }
  for (int it = 0; it < 200 && hi - lo > 0.5; ++it) {
    const double mid = 0.5 * (lo + hi);
    (divisor_tail(sigma, mid) > goal ? lo : hi) = mid;
  }
  if (!(hi <= static_cast<double>(cfg.max_terms))) {
    throw PrecisionError("Estermann series needs about " + std::to_string(static_cast<long long>(hi)) +
                         " terms, above max_terms");
  }
  const long N = std::max(1L, static_cast<long>(std::ceil(hi)));
  const double tail = divisor_tail(sigma, static_cast<double>(N));

  std::vector<cplx> sig(static_cast<std::size_t>(N) + 1, 0.0);
  for (long d = 1; d <= N; ++d) {
    const cplx dp = std::exp(pt.a * std::log(static_cast<double>(d)));
    for (long m = d; m <= N; m += d) sig[m] += dp;
  }
  const long p = pt.x.p, q = pt.x.q;
  std::vector<cplx> phase(static_cast<std::size_t>(q));
  for (long r = 0; r < q; ++r) phase[r] = specfn::e_of(Rational(r, q));
  const long step = ((p % q) + q) % q;
  cplx total = 0.0;
  double mag = 0.0;
  long r = 0;
  for (long n = 1; n <= N; ++n) {
    r = (r + step) % q;
    const cplx term = sig[n] * phase[r] * std::exp(-pt.s * std::log(static_cast<double>(n)));
    total += term;
    mag += std::abs(term);
  }
  const double log_n = std::log(static_cast<double>(N) + 1);
  return {total, tail + kEps * mag * (8 + (std::abs(pt.s) + std::abs(pt.a)) * log_n)};
}

ComplexVal estermann_hurwitz(const EstermannPoint& pt, const PrecisionConfig& cfg) {
  cfg.validate();
  if (pt.s == 1.0 || pt.s - pt.a == 1.0) throw PoleError("Hurwitz representation sits on a zeta pole");
  const long p = pt.x.p, q = pt.x.q;
  const auto rows = parallel_map(static_cast<std::size_t>(q), [&](std::size_t i) {
    const long m = static_cast<long>(i) + 1;
    const ComplexVal zm = specfn::hurwitz_zeta(pt.s - pt.a, static_cast<double>(m) / q, cfg);
    ComplexVal row;
    for (long n = 1; n <= q; ++n) {
      const ComplexVal zn = specfn::hurwitz_zeta(pt.s, static_cast<double>(n) / q, cfg);
      row += ComplexVal(specfn::e_of(Rational(m * n * p, q)), 2 * kEps) * zn;
    }
    return zm * row;
  });
  ComplexVal total;
  for (const ComplexVal& r : rows) total += r;
  const cplx scale = std::exp((pt.a - 2.0 * pt.s) * std::log(static_cast<double>(q)));
  return ComplexVal(scale, 4 * kEps * std::abs(scale) * (1 + std::abs(pt.a - 2.0 * pt.s))) * total;
}

ComplexVal estermann_nonpositive(unsigned k, RationalArg x, unsigned a, Route route, const PrecisionConfig& cfg) {
  if (x.q <= 1) throw DomainError("Estermann closed forms need q > 1");
  if (route == Route::dual && a == 0) throw DomainError("the dual closed form needs a >= 1");
  const unsigned first = route == Route::primary ? a : k;
  const unsigned second = route == Route::primary ? k : a;
  const ComplexVal c = sums::cotangent_sum_C(first, second, x, cfg);
  if (k == 0) return c - ComplexVal(0.5) * zeta_neg(a);
  return c + q_power(x.q, first) * zeta_neg(k) * zeta_neg(a);
}

Residual verify_lemma41(unsigned k, RationalArg x) {
  if (k == 0) throw DomainError("formula needs k >= 1");
  const cplx lambda = specfn::e_of(Rational(x.p, x.q));
  const ComplexVal lhs = specfn::apostol_bernoulli(k, 0.0, lambda);
  const Rational theta(x.p, x.q);
  ComplexVal rhs = ComplexVal(static_cast<double>(k)) / ComplexVal(std::pow(cplx(0.0, 2.0), static_cast<int>(k))) *
                   specfn::cot_derivative(k - 1, theta);
  if (k == 1) rhs -= ComplexVal(0.5);
  return make_residual(lhs, rhs);
}

Residual verify_lemma42(cplx s, cplx z, long n, RationalArg x, const PrecisionConfig& cfg) {
  if (!(s.real() > 1)) throw DomainError("verify_lemma42 needs Re(s) > 1");
  if (!(z.real() > 0)) throw DomainError("verify_lemma42 needs Re(z) > 0");
  const long q = x.q;
  ComplexVal lhs;
  for (long m = 0; m < q; ++m) {
    const cplx phase = specfn::e_of(Rational(m * n * x.p, q));
    lhs += ComplexVal(phase, 2 * kEps) * specfn::hurwitz_zeta(s, z + static_cast<double>(m) / q, cfg);
  }
  const cplx qs = std::exp(s * std::log(static_cast<double>(q)));
  const ComplexVal rhs = ComplexVal(qs, 4 * kEps * std::abs(qs) * (1 + std::abs(s))) *
                         specfn::lerch_phi(s, static_cast<double>(q) * z, specfn::e_of(Rational(n * x.p, q)), cfg);
  return make_residual(lhs, rhs);
}

RouteCheck verify_prop43(cplx s, RationalArg x, cplx a, const PrecisionConfig& cfg) {
  if (!is_nonneg_integer(s) || !is_nonneg_integer(a)) {
    throw DomainError("the two displays are checked at nonnegative integers s and a only");
  }
  if (x.q <= 1) throw DomainError("need q > 1");
  const auto si = static_cast<unsigned>(s.real()), ai = static_cast<unsigned>(a.real());
  const ComplexVal zz = zeta_neg(si) * zeta_neg(ai);
  const ComplexVal first = sums::cotangent_sum_phi(ai, si, x, cfg) + q_power(x.q, ai) * zz;
  const ComplexVal second = sums::cotangent_sum_phi(si, ai, x, cfg) + q_power(x.q, si) * zz;
  const ComplexVal e = estermann_hurwitz({-s, x, a - s}, cfg);
  return {make_residual(e, first), make_residual(first, second)};
}

RouteCheck verify_thm44(unsigned k, RationalArg x, unsigned a, const PrecisionConfig& cfg) {
  const ComplexVal primary = estermann_nonpositive(k, x, a, Route::primary, cfg);
  const ComplexVal e = estermann_hurwitz({-static_cast<double>(k), x, static_cast<double>(a) - k}, cfg);
  RouteCheck out{make_residual(primary, e), std::nullopt};
  if (a >= 1) out.routes = make_residual(primary, estermann_nonpositive(k, x, a, Route::dual, cfg));
  return out;
}

Residual verify_cor45(unsigned a, unsigned k, RationalArg x, const PrecisionConfig& cfg) {
  if (x.q <= 1) throw DomainError("need q > 1");
  const ComplexVal lhs = sums::cotangent_sum_C(a, k, x, cfg) - sums::cotangent_sum_C(k, a, x, cfg);
  Rational predicted(0);
  if (a != 0 && k != 0) {
    // Sign as forced by the two closed forms for E(−k, x, a−k).
    predicted = (Rational(x.q).pow(k) - Rational(x.q).pow(a)) * exact::zeta_neg_int(k) * exact::zeta_neg_int(a);
  }
  const double v = predicted.to_double();
  return make_residual(lhs, ComplexVal(v, kEps * std::abs(v)));
}

}  // namespace bcsum::estermann
