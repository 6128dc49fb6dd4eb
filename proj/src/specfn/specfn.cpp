#include "bcsum/specfn.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <string>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/kernels.hpp"

namespace bcsum {

void PrecisionConfig::validate() const {
  if (working_digits < 15 || working_digits > 16) {
    throw DomainError("working_digits must be 15 or 16 (binary64 arithmetic), got " +
                      std::to_string(working_digits));
  }
  if (!(target_abs_err > 0.0)) throw DomainError("target_abs_err must be positive");
  if (target_abs_err < std::pow(10.0, -working_digits + 2)) {
    throw DomainError("target_abs_err below 10^(2 - working_digits)");
  }
  if (max_terms <= 0) throw DomainError("max_terms must be positive");
}

}  // namespace bcsum

namespace bcsum::specfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kMaxEulerMaclaurin = 60;  // up to B_120

// B_{2k}/(2k)! for k = 0..kMaxEulerMaclaurin.
const std::vector<double>& even_bernoulli_over_factorial() {
  static const std::vector<double> table = [] {
    std::vector<double> out;
    for (unsigned k = 0; k <= kMaxEulerMaclaurin; ++k) {
      const exact::Rational r =
          exact::bernoulli_number(2 * k) / exact::Rational(exact::factorial(2 * k), exact::Integer(1));
      out.push_back(r.to_double());
    }
    return out;
  }();
  return table;
}

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()) && s.real() > -1e6;
}

// −B_{n+1}(x)/(n+1) differentiated m times, at real x.
ComplexVal hurwitz_neg_int_deriv(unsigned n, unsigned m, double x) {
  const auto poly = exact::bernoulli_polynomial(n + 1);
  double value = 0.0, mag = 0.0;
  for (int j = poly.degree(); j >= static_cast<int>(m); --j) {
    // d^m/dx^m x^j = j!/(j−m)! x^{j−m}
    const exact::Rational falling = exact::Rational(exact::factorial(j), exact::factorial(j - m));
    const double c = (falling * poly.coefficients[j]).to_double() / static_cast<double>(n + 1);
    const double term = c * std::pow(x, j - static_cast<int>(m));
    value -= term;
    mag += std::abs(term);
  }
  return {value, 4 * kEps * (poly.degree() + 2) * mag};
}

ComplexVal hurwitz_em(cplx s, cplx x, long n_shift, const PrecisionConfig& cfg, double& truncation) {
  cplx head = 0.0;
  double head_mag = 0.0;
  if (x.imag() == 0.0) {
    const auto ps = kernels::twisted_power_sum(s, x.real(), 0.0, n_shift);
    head = ps.sum;
    head_mag = ps.abs_sum;
  } else {
    for (long j = 0; j < n_shift; ++j) {
      const cplx term = std::exp(-s * std::log(x + static_cast<double>(j)));
      head += term;
      head_mag += std::abs(term);
    }
  }
  const cplx w = x + static_cast<double>(n_shift);
  const cplx lw = std::log(w);
  const cplx w_ms = std::exp(-s * lw);
  cplx total = head + w * w_ms / (s - 1.0) + 0.5 * w_ms;
  double mag = head_mag + std::abs(w * w_ms / (s - 1.0)) + 0.5 * std::abs(w_ms);
  const auto& b = even_bernoulli_over_factorial();
  // T_k = B_{2k}/(2k)! (s)_{2k−1} w^{−s−2k+1}
  cplx poch = s;
  cplx wpow = w_ms / w;
  truncation = std::abs(b[1] * poch * wpow);
  for (unsigned k = 1; k <= kMaxEulerMaclaurin; ++k) {
    const cplx term = b[k] * poch * wpow;
    const double at = std::abs(term);
    // the asymptotic series turns around once |s+2k| exceeds 2πw
    if (std::abs(s + static_cast<double>(2 * k)) > 2 * kPi * std::abs(w)) break;
    total += term;
    mag += at;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    wpow /= w * w;
    const double next = std::abs(b[std::min(k + 1, kMaxEulerMaclaurin)] * poch * wpow);
    // remainder bounded by the first omitted term times |s+2K+1|/(Re s+2K+1)
    const double sigma = s.real() + 2 * k + 1;
    const double amplification = sigma > 0 ? std::abs(s + static_cast<double>(2 * k + 1)) / sigma : 1e6;
    truncation = next * amplification;
    if (next == 0.0 || truncation < 1e-3 * std::min(cfg.target_abs_err, kEps * std::abs(total))) break;
  }
  // each power carries a relative error of order eps·|s log(x+j)|
  return {total, truncation + kEps * mag * (4 + std::abs(s) * std::abs(lw))};
}

}  // namespace

ComplexVal hurwitz_zeta(cplx s, double x, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta needs x > 0");
  if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta has a pole at s = 1");
  if (is_nonpositive_integer(s) && s.real() > -200) {
    return hurwitz_neg_int_deriv(static_cast<unsigned>(-s.real()), 0, x);
  }
  // For Re s < 0 the head terms grow like (x+N)^{−Re s}, so keep the shift as small as
  // the asymptotic tail allows (ratio |s+2k|²/(2π(x+N))² ≤ 1/4 at the start).
  const double w_start = s.real() < 0 ? 6.0 + std::abs(s) / kPi : cfg.working_digits + std::abs(s);
  long n_shift = std::max(0L, static_cast<long>(std::ceil(w_start - x)));
  for (;;) {
    double truncation = 0.0;
    const ComplexVal out = hurwitz_em(s, x, n_shift, cfg, truncation);
    if (truncation <= cfg.target_abs_err) return out;
    if (2 * n_shift + 16 > cfg.max_terms) {
      throw PrecisionError("hurwitz_zeta did not reach the target error within max_terms");
    }
    n_shift = 2 * n_shift + 16;
  }
}

ComplexVal hurwitz_zeta(cplx s, cplx x, const PrecisionConfig& cfg) {
  if (x.imag() == 0.0) return hurwitz_zeta(s, x.real(), cfg);
  cfg.validate();
  if (!(x.real() > 0.0)) throw DomainError("hurwitz_zeta needs Re(x) > 0");
  if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta has a pole at s = 1");
  if (is_nonpositive_integer(s) && s.real() > -200) {
    const auto k = static_cast<unsigned>(-s.real());
    const auto poly = exact::bernoulli_polynomial(k + 1);
    double mag = 0.0;
    for (int j = 0; j <= poly.degree(); ++j) mag += std::abs(poly.coefficients[j].to_double()) * std::pow(std::abs(x), j);
    return {-poly(x) / static_cast<double>(k + 1), 4 * kEps * (k + 3) * mag};
  }
  const double w_start = s.real() < 0 ? 6.0 + std::abs(s) / kPi : cfg.working_digits + std::abs(s);
  long n_shift = std::max(0L, static_cast<long>(std::ceil(w_start - x.real())));
  for (;;) {
    double truncation = 0.0;
    const ComplexVal out = hurwitz_em(s, x, n_shift, cfg, truncation);
    if (truncation <= cfg.target_abs_err) return out;
    if (2 * n_shift + 16 > cfg.max_terms) {
      throw PrecisionError("hurwitz_zeta did not reach the target error within max_terms");
    }
    n_shift = 2 * n_shift + 16;
  }
}

ComplexVal hurwitz_zeta_x_deriv(unsigned m, cplx s, double x, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta_x_deriv needs x > 0");
  if (is_nonpositive_integer(s) && s.real() > -200) {
    return hurwitz_neg_int_deriv(static_cast<unsigned>(-s.real()), m, x);
  }
  if (s + static_cast<double>(m) == cplx(1.0, 0.0)) {
    throw PoleError("derivative of hurwitz zeta hits the pole at s + m = 1");
  }
  ComplexVal out = hurwitz_zeta(s + static_cast<double>(m), x, cfg);
  const cplx factor = (m % 2 ? -1.0 : 1.0) * exact::rising_factorial(s, m);
  return out * ComplexVal(factor, 2 * m * kEps * std::abs(factor));
}

ComplexVal riemann_zeta(cplx s, const PrecisionConfig& cfg) {
  cfg.validate();
  if (s == cplx(1.0, 0.0)) throw PoleError("riemann_zeta has a pole at s = 1");
  if (is_nonpositive_integer(s) && s.real() > -200) {
    return {exact::zeta_neg_int(static_cast<unsigned>(-s.real())).to_double(), 0.0};
  }
  if (s.real() >= 0.0) return hurwitz_zeta(s, 1.0, cfg);
  // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
  const cplx pre = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) * std::sin(kPi * s / 2.0);
  const double pre_err = kEps * std::abs(pre) * (4 + 2 * std::abs(s) * (std::log(2 * kPi) + kPi));
  return ComplexVal(pre, pre_err) * complex_gamma(1.0 - s, cfg) * hurwitz_zeta(1.0 - s, 1.0, cfg);
}

ComplexVal complex_gamma(cplx s, const PrecisionConfig& cfg) {
  cfg.validate();
  if (is_nonpositive_integer(s)) throw PoleError("complex_gamma has a pole at a nonpositive integer");
  if (s.real() < 0.5) {
    // Γ(s) = π / (sin(πs) Γ(1−s))
    const cplx sn = std::sin(kPi * s);
    const ComplexVal g = complex_gamma(1.0 - s, cfg);
    const double sn_err = kEps * std::abs(std::cos(kPi * s)) * kPi * (1 + std::abs(s)) + kEps * std::abs(sn);
    return ComplexVal(kPi) / (ComplexVal(sn, sn_err) * g);
  }
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const cplx z = s - 1.0;
  cplx a = p[0];
  for (int i = 1; i < 9; ++i) a += p[i] / (z + static_cast<double>(i));
  const cplx t = z + g + 0.5;
  const cplx lt = std::log(t);
  const cplx value = std::sqrt(2 * kPi) * std::exp((z + 0.5) * lt - t) * a;
  const double rel = 4e-15 + 2 * kEps * (std::abs((z + 0.5) * lt) + std::abs(t));
  return {value, rel * std::abs(value)};
}

std::vector<double> CotDerivPolynomial::to_double() const {
  std::vector<double> out;
  for (const auto& c : coefficients) out.push_back(c.get_d());
  return out;
}

cplx CotDerivPolynomial::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

CotDerivPolynomial cot_deriv_poly(unsigned m) {
  std::vector<exact::Integer> p{0, 1};
  for (unsigned step = 0; step < m; ++step) {
    std::vector<exact::Integer> d(p.size() > 1 ? p.size() - 1 : 1, 0);
    for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = p[j] * static_cast<unsigned long>(j);
    std::vector<exact::Integer> next(d.size() + 2, 0);
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[j] -= d[j];
      next[j + 2] -= d[j];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    p = std::move(next);
  }
  return {std::move(p)};
}

namespace {

ComplexVal cot_derivative_reduced(unsigned m, double r, double theta_err) {
  // r ∈ (−1/2, 1/2], r ≠ 0
  const double c = std::cos(kPi * r) / std::sin(kPi * r);
  const auto pm = cot_deriv_poly(m);
  const auto pm1 = cot_deriv_poly(m + 1);
  double value = 0.0, mag = 0.0;
  for (int j = pm.degree(); j >= 0; --j) {
    value = value * c + pm.coefficients[j].get_d();
  }
  for (int j = 0; j <= pm.degree(); ++j) mag += std::abs(pm.coefficients[j].get_d()) * std::pow(std::abs(c), j);
  const double slope = std::abs(pm1(cplx(c, 0.0)));
  return {value, 2 * (pm.degree() + 2) * kEps * mag + slope * kPi * (theta_err + kEps * std::abs(r))};
}

}  // namespace

ComplexVal cot_derivative(unsigned m, double theta, const PrecisionConfig& cfg) {
  cfg.validate();
  if (theta == std::round(theta)) throw PoleError("cot_derivative evaluated at a pole (integer multiple of pi)");
  const double r = theta - std::round(theta);
  return cot_derivative_reduced(m, r, kEps * std::abs(theta));
}

ComplexVal cot_derivative(unsigned m, const exact::Rational& theta, const PrecisionConfig& cfg) {
  cfg.validate();
  if (theta.is_integer()) throw PoleError("cot_derivative evaluated at a pole (integer multiple of pi)");
  exact::Rational r = theta.frac();
  if (r > exact::Rational(1, 2)) r -= exact::Rational(1);
  return cot_derivative_reduced(m, r.to_double(), 0.0);
}

cplx cot_complex(cplx w) {
  const double x = w.real(), y = w.imag();
  const double e = std::exp(-2.0 * std::abs(y));
  const double one_minus_e = -std::expm1(-2.0 * std::abs(y));
  const double sx = std::sin(x);
  const double d = one_minus_e * one_minus_e + 4.0 * e * sx * sx;
  const double re = 2.0 * e * std::sin(2.0 * x) / d;
  const double im = (y >= 0 ? -1.0 : 1.0) * one_minus_e * (1.0 + e) / d;
  return {re, im};
}

cplx cot_derivative_complex(unsigned m, cplx w) { return cot_deriv_poly(m)(cot_complex(w)); }

ComplexVal polygamma(unsigned n, double x, const PrecisionConfig& cfg) {
  if (n == 0) throw DomainError("polygamma needs n >= 1");
  if (!(x > 0.0)) throw DomainError("polygamma needs x > 0");
  const double f = (n % 2 ? 1.0 : -1.0) * exact::factorial(n).get_d();
  return ComplexVal(f) * hurwitz_zeta(static_cast<double>(n + 1), x, cfg);
}

std::vector<cplx> apostol_bernoulli_numbers(unsigned k, cplx lambda) {
  if (std::abs(lambda - 1.0) < 1e-15) {
    throw DomainError("apostol_bernoulli needs lambda != 1 (use the classical Bernoulli polynomial)");
  }
  // b_n (λ−1) = [n=1] − λ Σ_{j<n} C(n,j) b_j
  std::vector<cplx> b(k + 1, 0.0);
  for (unsigned n = 1; n <= k; ++n) {
    cplx acc = n == 1 ? 1.0 : 0.0;
    for (unsigned j = 1; j < n; ++j) acc -= lambda * exact::binomial(n, j).get_d() * b[j];
    b[n] = acc / (lambda - 1.0);
  }
  return b;
}

ComplexVal apostol_bernoulli(unsigned k, cplx z, cplx lambda) {
  const auto b = apostol_bernoulli_numbers(k, lambda);
  // magnitudes through the same recurrence, for the rounding budget
  std::vector<double> mb(k + 1, 0.0);
  const double inv = 1.0 / std::abs(lambda - 1.0);
  for (unsigned n = 1; n <= k; ++n) {
    double acc = n == 1 ? 1.0 : 0.0;
    for (unsigned j = 1; j < n; ++j) acc += std::abs(lambda) * exact::binomial(n, j).get_d() * mb[j];
    mb[n] = acc * inv;
  }
  cplx value = 0.0;
  double mag = 0.0;
  for (unsigned j = 0; j <= k; ++j) {
    const double c = exact::binomial(k, j).get_d();
    value += c * b[j] * std::pow(z, static_cast<int>(k - j));
    mag += c * mb[j] * std::pow(std::abs(z), static_cast<int>(k - j));
  }
  return {value, 4 * kEps * (k + 2) * (k + 2) * mag};
}

cplx e_of(double x) {
  const double r = x - std::round(x);
  return {std::cos(2 * kPi * r), std::sin(2 * kPi * r)};
}

cplx e_of(const exact::Rational& x) { return e_of(x.frac().to_double()); }

ComplexVal lerch_phi(cplx s, cplx z, cplx lambda, const PrecisionConfig& cfg) {
  cfg.validate();
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw DomainError("lerch_phi needs |lambda| = 1");
  const bool lambda_one = std::abs(lambda - 1.0) < 1e-15;
  if (is_nonpositive_integer(s)) {
    const unsigned k = static_cast<unsigned>(-s.real());
    if (lambda_one) {
      const auto poly = exact::bernoulli_polynomial(k + 1);
      const cplx v = -poly(z) / static_cast<double>(k + 1);
      double mag = 0.0;
      for (int j = 0; j <= poly.degree(); ++j) mag += std::abs(poly.coefficients[j].to_double()) * std::pow(std::abs(z), j);
      return {v, 4 * kEps * (k + 3) * mag};
    }
    const ComplexVal b = apostol_bernoulli(k + 1, z, lambda);
    return {-b.value / static_cast<double>(k + 1), b.abs_err / (k + 1)};
  }
  if (!(s.real() > 1.0)) {
    throw DomainError("lerch_phi supports Re(s) > 1 or nonpositive integer s only");
  }
  if (!(z.real() > 0.0)) throw DomainError("lerch_phi needs Re(z) > 0");
  if (lambda_one) return hurwitz_zeta(s, z, cfg);
  const double theta = std::arg(lambda);
  const double r = std::abs(theta);  // distance of log λ to the nearest 2πi n is ≥ min(r, 2π − r)
  const double radius = std::min(r, 2 * kPi - r);
  const long n_direct = std::min(cfg.max_terms, 32 + static_cast<long>(std::ceil(4.0 * (40.0 + std::abs(s)) / radius)));
  cplx head;
  double mag;
  if (z.imag() == 0.0) {
    const auto ps = kernels::twisted_power_sum(s, z.real(), theta, n_direct);
    head = ps.sum;
    mag = ps.abs_sum;
  } else {
    head = 0.0;
    mag = 0.0;
    for (long n = 0; n < n_direct; ++n) {
      const cplx term = std::pow(lambda, static_cast<double>(n)) * std::exp(-s * std::log(z + static_cast<double>(n)));
      head += term;
      mag += std::abs(term);
    }
  }
  // Boole tail: Σ_{n≥N} λⁿ f(n) = −λ^N Σ_{k≥1} (b_k/k!) f^{(k−1)}(N), f(y) = (z+y)^{−s}
  constexpr unsigned kMaxTail = 120;
  std::vector<cplx> c(kMaxTail + 1, 0.0);  // b_n/n!
  for (unsigned n = 1; n <= kMaxTail; ++n) {
    cplx acc = n == 1 ? 1.0 : 0.0;
    double inv_fact = 1.0;
    for (unsigned j = n; j-- > 1;) {
      inv_fact /= static_cast<double>(n - j);
      acc -= lambda * c[j] * inv_fact;
    }
    c[n] = acc / (lambda - 1.0);
  }
  const cplx w = z + static_cast<double>(n_direct);
  cplx deriv = std::exp(-s * std::log(w));  // f^{(k−1)}(N), k = 1
  cplx tail = 0.0;
  double last = 0.0;
  bool converged = false;
  for (unsigned k = 1; k <= kMaxTail; ++k) {
    const cplx term = c[k] * deriv;
    tail += term;
    mag += std::abs(term);
    last = std::abs(term);
    if (last < 1e-3 * std::min(cfg.target_abs_err, kEps * std::abs(head))) {
      converged = true;
      break;
    }
    deriv *= -(s + static_cast<double>(k - 1)) / w;
  }
  if (!converged && last > cfg.target_abs_err) throw PrecisionError("lerch_phi tail did not converge");
  const cplx lam_n = std::exp(cplx(0.0, theta * static_cast<double>(n_direct)));
  return {head - lam_n * tail, last + 8 * kEps * mag};
}

ComplexVal divisor_sigma(cplx a, long n) {
  if (n < 1) throw DomainError("divisor_sigma needs n >= 1");
  cplx total = 0.0;
  double mag = 0.0;
  auto add = [&](long d) {
    const cplx term = std::exp(a * std::log(static_cast<double>(d)));
    total += term;
    mag += std::abs(term);
  };
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    add(d);
    if (d * d != n) add(n / d);
  }
  return {total, kEps * mag * (4 + 2 * std::abs(a) * std::log(static_cast<double>(n) + 1))};
}

ComplexVal eisenstein_E(cplx a, cplx z, long truncation, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(z.imag() > 0.0)) throw DomainError("eisenstein_E needs Im(z) > 0");
  if (a.imag() == 0.0 && a.real() > 0 && a.real() == std::floor(a.real()) &&
      static_cast<long>(a.real()) % 2 == 0) {
    throw DomainError("eisenstein_E undefined: zeta(-a) = 0 at positive even a");
  }
  if (a == cplx(-1.0, 0.0)) throw PoleError("eisenstein_E undefined: zeta(-a) has a pole at a = -1");
  const ComplexVal zeta_ma = riemann_zeta(-a, cfg);
  const double q = std::exp(-2 * kPi * z.imag());
  const double p = std::max(0.0, a.real()) + 0.5;
  // σ_a(n) ≤ n^{max(0,Re a)} d(n) ≤ 2 n^{max(0,Re a)+1/2}
  auto bound = [&](long n) { return 2.0 * std::pow(static_cast<double>(n), p) * std::pow(q, static_cast<double>(n)); };
  auto tail_bound = [&](long n_last) {
    double total = 0.0;
    for (long n = n_last + 1;; ++n) {
      const double b = bound(n);
      total += b;
      if (b < 1e-3 * total || b == 0.0) {
        const double ratio = bound(n + 1) / b;
        return ratio < 1.0 ? total + b * ratio / (1.0 - ratio) : total;
      }
    }
  };
  const double scale = 2.0 / zeta_ma.abs();
  long n_terms = truncation;
  if (n_terms <= 0) {
    n_terms = 1;
    while (scale * tail_bound(n_terms) > cfg.target_abs_err / 4) {
      if (++n_terms > cfg.max_terms) throw PrecisionError("eisenstein_E q-series needs more than max_terms");
    }
  }
  cplx sum = 0.0;
  double err = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    const ComplexVal sig = divisor_sigma(a, n);
    const cplx qn = std::exp(cplx(0.0, 2 * kPi * static_cast<double>(n)) * z);
    sum += sig.value * qn;
    err += sig.abs_err * std::abs(qn) + 4 * kEps * std::abs(sig.value * qn) * (1 + n * std::abs(z));
  }
  ComplexVal series(sum, err + tail_bound(n_terms));
  return ComplexVal(1.0) + ComplexVal(2.0) / zeta_ma * series;
}

}  // namespace bcsum::specfn
