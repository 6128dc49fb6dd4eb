#include "bcsum/recip.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/kernels.hpp"
#include "bcsum/specfn.hpp"
#include "bcsum/sums.hpp"
#include "quadrature.hpp"

namespace bcsum::recip {

using exact::ExactScaled;
using exact::Integer;
using exact::Rational;

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

ComplexVal power_of(double base, cplx a) {
  const cplx v = std::exp(a * std::log(base));
  return {v, kEps * std::abs(v) * (2 + std::abs(a) * std::abs(std::log(base)))};
}

ComplexVal exact_value(const ExactScaled& x) {
  const cplx v = x.to_complex();
  return {v, 4 * kEps * std::abs(v)};
}

bool is_real_integer(cplx a) { return a.imag() == 0.0 && a.real() == std::round(a.real()); }

void check_moduli(const std::vector<long>& ks) {
  if (ks.empty()) throw DomainError("need at least one cotangent factor");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) throw DomainError("moduli must be positive integers");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(ks[i], ks[j]) != 1) {
        throw DomainError("moduli " + std::to_string(ks[j]) + " and " + std::to_string(ks[i]) +
                          " are not coprime");
      }
    }
  }
}

void check_parity(long n, const std::vector<long>& ks, const std::vector<unsigned>& ms) {
  long total = n + static_cast<long>(ks.size());
  for (unsigned m : ms) total += m;
  if (total % 2 == 0) {
    throw DomainError("m0 + n + d + sum of m_j must be odd (got " + std::to_string(total) + ")");
  }
}

void check_higher_shape(const std::vector<long>& ks, const std::vector<unsigned>& ms) {
  if (ks.size() < 2) throw DomainError("the higher reciprocity laws need d >= 2 moduli");
  if (ms.size() != ks.size() + 1) throw DomainError("derivative list must be m0..md, one longer than the moduli");
  check_moduli(ks);
}

// All (l_0..l_{parts−1}) ≥ 0 with the given sum.
void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (unsigned v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(target_abs_err > 0) || !std::isfinite(target_abs_err)) {
    throw DomainError("quadrature target must be a positive finite number");
  }
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be >= 0 (0 picks a default)");
  if (!(truncation_height >= 0) || !std::isfinite(truncation_height)) {
    throw DomainError("truncation height must be >= 0 (0 picks a default)");
  }
}

ComplexVal line_integral_cot_product(const std::vector<long>& ks, const std::vector<unsigned>& ms, cplx p,
                                     const QuadratureConfig& quad, Orientation orient) {
  quad.validate();
  check_moduli(ks);
  if (ms.size() != ks.size()) throw DomainError("need one derivative order per cotangent factor");
  if (!(p.real() > 1)) throw DomainError("the line integral needs Re(power) > 1");

  const long kmax = *std::max_element(ks.begin(), ks.end());
  const long kmin = *std::min_element(ks.begin(), ks.end());
  const double eps = quad.epsilon > 0 ? quad.epsilon : 0.5 / static_cast<double>(kmax);
  if (eps >= 1.0 / static_cast<double>(kmax)) {
    throw DomainError("epsilon must lie below 1/max(k) = " + std::to_string(1.0 / static_cast<double>(kmax)));
  }

  kernels::LineIntegrand li;
  li.eps = eps;
  li.power = p;
  bool plain = true;
  detail::LineProblem prob;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const double k = static_cast<double>(ks[j]);
    std::vector<double> poly = specfn::cot_deriv_poly(ms[j]).to_double();
    const double chain = std::pow(pi * k, ms[j]);
    for (double& c : poly) c *= chain;
    li.factors.push_back({k, std::move(poly)});
    plain = plain && ms[j] == 0;
    for (int n = -1; n <= 1; ++n) prob.singularities.push_back(I * (n / k - eps));
  }
  // Limits of ∏cot(πk_j z) as Im z → ±∞; a derivative factor sends the product to 0.
  const int d = static_cast<int>(ks.size());
  if (plain) {
    li.top = std::pow(-I, d);
    li.bottom = std::pow(I, d);
  }

  prob.f = [&li](const double* t, std::size_t n, cplx* out) {
    kernels::eval_line_integrand(li, t, n, out);
    for (std::size_t i = 0; i < n; ++i) out[i] *= -I;  // dz = −i dt going down
  };
  prob.breaks = {0.0};
  prob.decay_rate = 2 * pi * static_cast<double>(kmin);
  prob.value_rel_err = 64 * kEps * (1 + std::abs(p));

  ComplexVal total = detail::integrate_line(prob, quad).value;
  if (plain && d % 2 == 1) {
    const cplx comp = (li.top - li.bottom) * std::pow(cplx(eps, 0.0), 1.0 - p) / (1.0 - p);
    total += ComplexVal(comp, 8 * kEps * std::abs(comp));
  }
  return orient == Orientation::downward ? total : -total;
}

ComplexVal line_integral_cotcot(cplx a, long h, long k, const QuadratureConfig& quad, Orientation orient) {
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) throw DomainError("need positive coprime h and k");
  if (!(a.real() > 1)) throw DomainError("line_integral_cotcot needs Re(a) > 1");
  return line_integral_cot_product({h, k}, {0, 0}, a, quad, orient);
}

Residual verify_thm12(cplx a, long h, long k, const QuadratureConfig& quad, Orientation orient,
                      const PrecisionConfig& cfg) {
  const ComplexVal integral = line_integral_cotcot(a, h, k, quad, orient);
  const ComplexVal lhs = power_of(static_cast<double>(h), 1.0 - a) * sums::bc_sum(-a, h, k, cfg) +
                         power_of(static_cast<double>(k), 1.0 - a) * sums::bc_sum(-a, k, h, cfg);
  const double hk = static_cast<double>(h) * static_cast<double>(k);
  const ComplexVal rhs = ComplexVal(a) * specfn::riemann_zeta(a + 1.0, cfg) / (ComplexVal(pi) * power_of(hk, a)) +
                         power_of(hk, 1.0 - a) / ComplexVal(2.0 * I) * integral;
  return make_residual(lhs, rhs);
}

ExactScaled closed_form_integral(unsigned n, long h, long k) {
  if (n <= 1 || n % 2 == 0) throw DomainError("n must be an odd integer > 1");
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) throw DomainError("need positive coprime h and k");
  const Rational conv =
      exact::bernoulli_convolution(n, Rational(h), Rational(k), exact::BernoulliConvention::zeroed);
  const ExactScaled prefactor =
      ExactScaled(Rational(2), 1, 1).pow(static_cast<int>(n)) *
      ExactScaled(Rational(2) / (Rational(h * k) * Rational(exact::factorial(n + 1), Integer(1))));
  return prefactor * ExactScaled(conv);
}

Residual verify_cor23(unsigned n, long h, long k, const QuadratureConfig& quad) {
  const ExactScaled closed = closed_form_integral(n, h, k);
  return make_residual(line_integral_cotcot(static_cast<double>(n), h, k, quad), exact_value(closed));
}

ComplexVal g_a_numeric(cplx a, cplx z, int M, const QuadratureConfig& quad, const PrecisionConfig& cfg) {
  quad.validate();
  cfg.validate();
  if (z == 0.0 || (z.imag() == 0.0 && z.real() < 0)) {
    throw DomainError("g_a needs z off the closed negative real axis");
  }
  if (is_real_integer(a) && a.real() < 0 && std::fmod(a.real(), 2.0) == 0.0) {
    throw PoleError("g_a has a zeta pole in its Bernoulli sum at negative even a");
  }
  const int m_min = static_cast<int>(std::ceil(-std::min(0.0, a.real()) / 2.0));
  if (M < 0) M = m_min;
  if (M < m_min) throw DomainError("M must be at least " + std::to_string(m_min) + " for this a");
  const double c = -0.5 - 2.0 * M;
  const cplx two_pi_z = 2 * pi * z;

  ComplexVal total;
  for (int n = 1; n <= M; ++n) {
    const Rational b = exact::bernoulli_number(2 * n) / Rational(exact::factorial(2 * n), Integer(1));
    const double sign = n % 2 ? -1.0 : 1.0;
    const ComplexVal zeta = specfn::riemann_zeta(1.0 - 2.0 * n - a, cfg);
    const cplx pw = std::pow(two_pi_z, 2 * n - 1);
    total += ComplexVal(2.0 * sign * b.to_double() * pw, 4 * kEps * std::abs(pw * b.to_double())) * zeta;
  }

  // cos(πa/2) vanishes identically at odd integer a, and with it the integral.
  if (is_real_integer(a) && std::fmod(std::abs(a.real()), 2.0) == 1.0) return total;

  // 1/sin(π(s−a)/2) has poles at s = a + 2j; for j < 0 the trivial zeros of
  // ζ(s−a) cancel them, leaving s = a, a+2, ... and the pole of ζ(s−a) at 1+a.
  const double shift = c - a.real();
  const double near_even = shift < 0 ? shift : shift - 2.0 * std::round(shift / 2.0);
  const double d_sin = std::hypot(near_even, a.imag());
  const double d_zeta = std::hypot(shift - 1.0, a.imag());
  if (std::min(d_sin, d_zeta) < 0.25) {
    throw AbscissaShiftError("the line Re s = " + std::to_string(c) + " passes within 1/4 of a pole; retry with M = " +
                             std::to_string(M + 1));
  }

  detail::LineProblem prob;
  const cplx cos_a = std::cos(pi * a / 2.0);
  const cplx log_w = std::log(two_pi_z);
  prob.f = [&](const double* t, std::size_t n, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) {
      const cplx s(c, t[i]);
      const cplx v = specfn::riemann_zeta(s, cfg).value * specfn::riemann_zeta(s - a, cfg).value *
                     specfn::complex_gamma(s, cfg).value * cos_a / std::sin(pi * (s - a) / 2.0) *
                     std::exp(-s * log_w);
      out[i] = v / pi;
    }
  };
  auto add_pole = [&](cplx s) { prob.singularities.push_back(-I * (s - c)); };
  add_pole(1.0);
  add_pole(1.0 + a);
  for (int j = 0; j <= 2; ++j) add_pole(a + 2.0 * j);
  for (int n = -2; n <= 2; ++n) {
    if (std::round(c) + n <= 0) add_pole(std::round(c) + n);
  }
  prob.decay_rate = pi - std::abs(std::arg(z));
  if (prob.decay_rate <= 0.05) throw DomainError("z is too close to the negative real axis for the Mellin integral");
  prob.poly_power = std::max(0.0, 0.5 - c + a.real()) + 1.0;
  prob.cap = 0.25;
  prob.value_rel_err = 1e3 * cfg.target_abs_err;

  return total + detail::integrate_line(prob, quad).value;
}

ComplexVal psi_a_numeric(cplx a, cplx z, int M, const QuadratureConfig& quad, const PrecisionConfig& cfg) {
  if (a == 0.0) throw PoleError("psi_a needs a != 0 (zeta(1 - a) pole)");
  if (is_real_integer(a) && a.real() > 0 && std::fmod(a.real(), 2.0) == 0.0) {
    throw DomainError("psi_a needs zeta(-a) != 0; a is a positive even integer");
  }
  const ComplexVal zeta_ma = specfn::riemann_zeta(-a, cfg);
  const ComplexVal g = g_a_numeric(a, z, M, quad, cfg);
  ComplexVal out = ComplexVal(I / (pi * z)) * specfn::riemann_zeta(1.0 - a, cfg) / zeta_ma;
  if (!(is_real_integer(a) && std::fmod(std::abs(a.real()), 2.0) == 1.0)) {
    const cplx zp = std::pow(z, -1.0 - a);
    out -= ComplexVal(I * zp * specfn::cot_complex(pi * a / 2.0), 16 * kEps * std::abs(zp));
  }
  out += ComplexVal(I) * g / zeta_ma;
  return out;
}

Residual verify_thm11(cplx a, long h, long k, PsiSource source, const QuadratureConfig& quad,
                      const PrecisionConfig& cfg) {
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) throw DomainError("need positive coprime h and k");
  const double hd = static_cast<double>(h), kd = static_cast<double>(k);
  const ComplexVal lhs = sums::bc_sum(a, h, k, cfg) -
                         power_of(kd / hd, 1.0 + a) * sums::bc_sum(a, -k, h, cfg) +
                         power_of(kd, a) * ComplexVal(a) * specfn::riemann_zeta(1.0 - a, cfg) / ComplexVal(pi * hd);
  ComplexVal rhs;
  if (source == PsiSource::polynomial) {
    const bool odd_negative = is_real_integer(a) && a.real() < -1 && std::fmod(-a.real(), 2.0) == 1.0;
    if (!odd_negative) throw DomainError("the polynomial period function needs a = -n with n odd > 1");
    // ζ(−a) cancels the implicit 1/ζ(n) of the polynomial.
    const auto n = static_cast<unsigned>(-a.real());
    const ExactScaled psi = exact::psi_polynomial(n).evaluate_unweighted(Rational(h, k));
    rhs = exact_value(-ExactScaled::imag_unit() * psi);
  } else {
    rhs = ComplexVal(-I) * specfn::riemann_zeta(-a, cfg) * psi_a_numeric(a, cplx(hd / kd, 0.0), -1, quad, cfg);
  }
  return make_residual(lhs, rhs);
}

Residual verify_g_polynomial(unsigned n, cplx z, const QuadratureConfig& quad, const PrecisionConfig& cfg) {
  if (n < 3 || n % 2 == 0) throw DomainError("the polynomial g needs an odd n > 1");
  const cplx poly = exact::g_polynomial(n).evaluate_unweighted(z);
  const ComplexVal lhs(poly, 16 * kEps * std::abs(poly));
  return make_residual(lhs, g_a_numeric(-static_cast<double>(n), z, -1, quad, cfg));
}

Residual verify_eisenstein_period(cplx a, cplx z, PsiSource source, const QuadratureConfig& quad,
                                  const PrecisionConfig& cfg) {
  if (!(z.imag() > 0)) throw DomainError("the q-series needs Im(z) > 0");
  ComplexVal lhs;
  if (source == PsiSource::polynomial) {
    const bool odd_negative = is_real_integer(a) && a.real() < -1 && std::fmod(-a.real(), 2.0) == 1.0;
    if (!odd_negative) throw DomainError("the polynomial period function needs a = -n with n odd > 1");
    const auto n = static_cast<unsigned>(-a.real());
    lhs = ComplexVal(exact::psi_polynomial(n).evaluate_unweighted(z), 16 * kEps * std::abs(z)) /
          specfn::riemann_zeta(static_cast<double>(n), cfg);
  } else {
    lhs = psi_a_numeric(a, z, -1, quad, cfg);
  }
  const cplx zp = std::pow(z, -1.0 - a);
  const ComplexVal rhs = specfn::eisenstein_E(a, z, 0, cfg) -
                         ComplexVal(zp, 4 * kEps * std::abs(zp)) * specfn::eisenstein_E(a, -1.0 / z, 0, cfg);
  return make_residual(lhs, rhs);
}

ExactScaled laurent_coeff_cot(long k, unsigned m, int l) {
  if (k < 1) throw DomainError("modulus must be positive");
  const int mi = static_cast<int>(m);
  if (l == -(mi + 1)) {
    const Rational c = Rational(exact::factorial(m), Integer(k));
    return ExactScaled(m % 2 ? -c : c, -1, 0);
  }
  if (l < 0) return {};
  const auto n = static_cast<unsigned>(l + mi + 1);
  const Rational b = exact::bernoulli_number(n, exact::BernoulliConvention::zeroed);
  if (b.is_zero()) return {};
  const Rational c = Rational(2).pow(static_cast<long>(n)) * b * Rational(k).pow(static_cast<long>(l + mi)) *
                     exact::rising_factorial(Rational(l + 1), m) / Rational(exact::factorial(n), Integer(1));
  return ExactScaled(c, l + mi, static_cast<int>(n));
}

LaurentCoeffs::LaurentCoeffs(cplx a, std::vector<long> ks, std::vector<unsigned> ms)
    : a_(a), ks_(std::move(ks)), ms_(std::move(ms)) {
  if (ms_.size() != ks_.size() + 1) throw DomainError("derivative list must be m0..md, one longer than the moduli");
  for (long k : ks_) {
    if (k < 1) throw DomainError("moduli must be positive integers");
  }
}

int LaurentCoeffs::support_lower(std::size_t j) const {
  return j == 0 ? 0 : -static_cast<int>(ms_.at(j)) - 1;
}

ComplexVal LaurentCoeffs::zeta(int l, const PrecisionConfig& cfg) const {
  if (l < 0) return {};
  const unsigned order = ms_[0] + static_cast<unsigned>(l);
  const cplx s = a_ + static_cast<double>(order);
  if (s == 1.0) throw PoleError("a + m0 + l0 = 1 lands on the pole of zeta");
  ComplexVal v = ComplexVal(exact::rising_factorial(a_, order)) * specfn::riemann_zeta(s, cfg) /
                 ComplexVal(exact::factorial(static_cast<unsigned>(l)).get_d());
  return order % 2 ? -v : v;
}

ExactScaled LaurentCoeffs::cot(std::size_t j, int l) const {
  if (j == 0 || j > ks_.size()) throw DomainError("cotangent factors are numbered 1..d");
  return laurent_coeff_cot(ks_[j - 1], ms_[j], l);
}

ExactScaled LaurentCoeffs::cot_convolution(int total) const {
  const std::size_t d = ks_.size();
  // Only l = −(m_j+1) and l ≥ 0 carry weight, so every later factor can lower
  // the running sum by at most m_j + 1.
  std::vector<int> slack(d + 1, 0);
  for (std::size_t j = d; j-- > 0;) slack[j] = slack[j + 1] + static_cast<int>(ms_[j + 1]) + 1;

  std::function<ExactScaled(std::size_t, int)> rec = [&](std::size_t j, int remaining) -> ExactScaled {
    if (j + 1 == d) return cot(j + 1, remaining);
    ExactScaled acc;
    const int high = remaining + slack[j + 1];
    auto add = [&](int l) {
      const ExactScaled c = cot(j + 1, l);
      if (!c.is_zero()) acc += c * rec(j + 1, remaining - l);
    };
    if (support_lower(j + 1) <= high) add(support_lower(j + 1));
    for (int l = 0; l <= high; ++l) add(l);
    return acc;
  };
  return rec(0, total);
}

ComplexVal LaurentCoeffs::residue_at_one(const PrecisionConfig& cfg) const {
  int top = static_cast<int>(ks_.size()) - 1;
  for (std::size_t j = 1; j < ms_.size(); ++j) top += static_cast<int>(ms_[j]);
  ComplexVal total;
  for (int l0 = 0; l0 <= top; ++l0) {
    const ExactScaled conv = cot_convolution(-l0 - 1);
    if (conv.is_zero()) continue;
    total += zeta(l0, cfg) * exact_value(conv);
  }
  return total;
}

ComplexVal higher_lhs(cplx a, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const PrecisionConfig& cfg) {
  check_higher_shape(ks, ms);
  const std::size_t d = ks.size();
  ComplexVal total;
  for (std::size_t j = 0; j < d; ++j) {
    const unsigned mj = ms[j + 1];
    std::vector<long> others;
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < d; ++t) {
      if (t != j) {
        others.push_back(ks[t]);
        idx.push_back(t);
      }
    }
    const ComplexVal outer = power_of(static_cast<double>(ks[j]), a - 1.0) / ComplexVal(mj % 2 ? -pi : pi);
    std::vector<unsigned> cur;
    compositions(mj, d, cur, [&](const std::vector<unsigned>& ls) {
      // ls[0] raises m0, ls[i] raises the derivative of factor idx[i−1].
      Integer multinomial = exact::factorial(mj);
      double weight = 1.0;
      std::vector<unsigned> new_ms{ms[0] + ls[0]};
      for (std::size_t i = 1; i < ls.size(); ++i) {
        multinomial /= exact::factorial(ls[i]);
        const std::size_t t = idx[i - 1];
        weight *= std::pow(pi * static_cast<double>(ks[t]), static_cast<int>(ls[i] + ms[t + 1]));
        new_ms.push_back(ms[t + 1] + ls[i]);
      }
      multinomial /= exact::factorial(ls[0]);
      const ComplexVal c =
          sums::bc_sum_general(sums::BCSumSpec::make(-a, ks[j], others, std::move(new_ms)), cfg);
      total += ComplexVal(multinomial.get_d() * weight) * outer * c;
    });
  }
  return total;
}

Residual verify_thm31(cplx a, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const QuadratureConfig& quad, const PrecisionConfig& cfg) {
  check_higher_shape(ks, ms);
  if (!(a.real() > 1)) throw DomainError("verify_thm31 needs Re(a) > 1");
  const std::vector<unsigned> factor_ms(ms.begin() + 1, ms.end());
  const ComplexVal integral = line_integral_cot_product(ks, factor_ms, a + static_cast<double>(ms[0]), quad);
  const ComplexVal lhs = higher_lhs(a, ks, ms, cfg);
  ComplexVal weight = ComplexVal(exact::rising_factorial(a, ms[0])) / ComplexVal(2 * pi * I);
  if (ms[0] % 2) weight = -weight;
  const ComplexVal rhs = -LaurentCoeffs(a, ks, ms).residue_at_one(cfg) + weight * integral;
  return make_residual(lhs, rhs);
}

Residual verify_thm32(long n, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const PrecisionConfig& cfg) {
  check_higher_shape(ks, ms);
  if (n <= 1) throw DomainError("verify_thm32 needs an integer n > 1");
  check_parity(n, ks, ms);
  const cplx a = static_cast<double>(n);
  const LaurentCoeffs coeffs(a, ks, ms);
  const ComplexVal lhs = higher_lhs(a, ks, ms, cfg);
  const ExactScaled conv = coeffs.cot_convolution(static_cast<int>(n + ms[0]) - 1);
  ExactScaled weight(exact::rising_factorial(Rational(n), ms[0]) / Rational(2));
  if (ms[0] % 2 == 0) weight = -weight;
  const ComplexVal rhs = -coeffs.residue_at_one(cfg) + exact_value(weight * conv);
  return make_residual(lhs, rhs);
}

Residual verify_cor33(long n, const std::vector<long>& ks, const std::vector<unsigned>& ms,
                      const QuadratureConfig& quad) {
  if (ms.size() != ks.size() + 1) throw DomainError("derivative list must be m0..md, one longer than the moduli");
  check_moduli(ks);
  if (n < 1) throw DomainError("verify_cor33 needs an integer n >= 1");
  check_parity(n, ks, ms);
  const long p = n + static_cast<long>(ms[0]);
  if (p <= 1) throw DomainError("verify_cor33 needs n + m0 > 1");
  const std::vector<unsigned> factor_ms(ms.begin() + 1, ms.end());
  const ComplexVal lhs = line_integral_cot_product(ks, factor_ms, static_cast<double>(p), quad);
  const ExactScaled conv = LaurentCoeffs(static_cast<double>(n), ks, ms).cot_convolution(static_cast<int>(p) - 1);
  return make_residual(lhs, exact_value(-ExactScaled(Rational(1), 1, 1) * conv));
}

}  // namespace bcsum::recip
