#include "bcsum/exact.hpp"

#include <mutex>

#include "bcsum/error.hpp"

namespace bcsum::exact {

namespace {

// B_n = Σ_{k=0}^{n} 1/(k+1) Σ_{j=0}^{k} (−1)^j C(k,j) j^n, which yields B₁ = −1/2.
Rational bernoulli_explicit(unsigned n) {
  Rational total(0);
  for (unsigned k = 0; k <= n; ++k) {
    Integer inner = 0;
    for (unsigned j = 0; j <= k; ++j) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), j, n);  // 0^0 = 1
      Integer term = binomial(k, j) * power;
      if (j % 2) inner -= term;
      else inner += term;
    }
    total += Rational(inner, Integer(k + 1));
  }
  return total;
}

void check_coprime(long h, long k) {
  if (h == 0 || k <= 0) throw DomainError("moduli must be nonzero with k > 0");
  if (gcd(h < 0 ? -h : h, k) != 1) {
    throw DomainError("h = " + std::to_string(h) + " and k = " + std::to_string(k) +
                      " are not coprime");
  }
}

void check_odd_n(unsigned n) {
  if (n <= 1 || n % 2 == 0) {
    throw DomainError("n must be an odd integer > 1 (got " + std::to_string(n) + ")");
  }
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(1, 2);
}

}  // namespace

Rational bernoulli_number(unsigned n, BernoulliConvention conv) {
  if (n == 1) return conv == BernoulliConvention::zeroed ? Rational(0) : Rational(-1, 2);
  if (n % 2 == 1) return Rational(0);
  // Append-only cache; values are immutable once inserted.
  static std::mutex mutex;
  static std::vector<Rational> cache;
  std::lock_guard lock(mutex);
  while (cache.size() <= n) cache.push_back(bernoulli_explicit(static_cast<unsigned>(cache.size())));
  return cache[n];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RationalPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

RationalPolynomial bernoulli_polynomial(unsigned n) {
  RationalPolynomial p;
  p.coefficients.resize(n + 1, Rational(0));
  for (unsigned j = 0; j <= n; ++j) {
    p.coefficients[n - j] = Rational(binomial(n, j)) * bernoulli_number(j);
  }
  return p;
}

Rational periodic_bernoulli(unsigned n, const Rational& x) {
  if (n == 1) return sawtooth(x);
  return bernoulli_polynomial(n)(x.frac());
}

Rational rising_factorial(const Rational& x, unsigned n) {
  Rational out(1);
  for (unsigned l = 0; l < n; ++l) out *= x + Rational(static_cast<long>(l));
  return out;
}

std::complex<double> rising_factorial(std::complex<double> x, unsigned n) {
  std::complex<double> out = 1.0;
  for (unsigned l = 0; l < n; ++l) out *= x + static_cast<double>(l);
  return out;
}

Rational zeta_neg_int(unsigned k) {
  // B_{k+1}(1) rather than B_{k+1}: they differ only at k = 0, where ζ(0) = −1/2.
  return hurwitz_neg_int(k, Rational(1));
}

Rational hurwitz_neg_int(unsigned k, const Rational& x) {
  if (x.sign() <= 0) throw DomainError("Hurwitz zeta needs x > 0");
  return -bernoulli_polynomial(k + 1)(x) / Rational(static_cast<long>(k) + 1);
}

ExactScaled zeta_even_positive(unsigned two_m) {
  if (two_m == 0 || two_m % 2) throw DomainError("zeta_even_positive needs a positive even argument");
  // ζ(2m) = −(2πi)^{2m} B_{2m} / (2 (2m)!)
  const ExactScaled two_pi_i(Rational(2), 1, 1);
  return -(two_pi_i.pow(static_cast<int>(two_m)) *
           ExactScaled(bernoulli_number(two_m) / Rational(Integer(2 * factorial(two_m)), Integer(1))));
}

Rational dedekind_sum(long h, long k) {
  check_coprime(h, k);
  Rational total(0);
  for (long m = 1; m < k; ++m) {
    total += sawtooth(Rational(m, k)) * sawtooth(Rational(m * h, k));
  }
  return total;
}

Rational dedekind_reciprocity_rhs(long h, long k) {
  return Rational(-1, 4) + (Rational(h, k) + Rational(1, h * k) + Rational(k, h)) / Rational(12);
}

Rational apostol_sum(unsigned n, long h, long k) {
  check_odd_n(n);
  check_coprime(h, k);
  Rational total(0);
  for (long mu = 1; mu < k; ++mu) {
    total += Rational(mu, k) * periodic_bernoulli(n, Rational(h * mu, k));
  }
  return total;
}

ExactScaled exact_c_minus_n(unsigned n, long h, long k) {
  check_odd_n(n);
  if (h < 0) return -exact_c_minus_n(n, -h, k);
  const Rational s = apostol_sum(n, h, k);
  const ExactScaled two_pi_i(Rational(2), 1, 1);
  return two_pi_i.pow(static_cast<int>(n)) / ExactScaled::imag_unit() *
         ExactScaled(s / Rational(factorial(n), Integer(1)));
}

Rational bernoulli_convolution(unsigned n, const Rational& h, const Rational& k,
                               BernoulliConvention conv) {
  Rational total(0);
  for (unsigned m = 0; m <= n + 1; ++m) {
    total += Rational(binomial(n + 1, m)) * bernoulli_number(m, conv) *
             bernoulli_number(n + 1 - m, conv) * h.pow(m) * k.pow(n + 1 - m);
  }
  return total;
}

ExactScaled thm13_rhs(unsigned n, long h, long k, BernoulliConvention conv) {
  check_odd_n(n);
  check_coprime(h, k);
  const Rational bracket = Rational(static_cast<long>(n)) * bernoulli_number(n + 1, conv) +
                           bernoulli_convolution(n, Rational(h), Rational(k), conv);
  const ExactScaled prefactor =
      ExactScaled(Rational(2), 1, 1).pow(static_cast<int>(n)) /
      ExactScaled(Rational(h * k).pow(n) * Rational(factorial(n + 1), Integer(1)), 0, 1);
  return prefactor * ExactScaled(bracket);
}

ExactScaled verify_thm13(unsigned n, long h, long k) {
  const long e = 1 - static_cast<long>(n);
  const ExactScaled lhs = ExactScaled(Rational(h).pow(e)) * exact_c_minus_n(n, h, k) +
                          ExactScaled(Rational(k).pow(e)) * exact_c_minus_n(n, k, h);
  return lhs - thm13_rhs(n, h, k);
}

ExactScaled PeriodPolynomial::evaluate_unweighted(const Rational& z) const {
  if (z.is_zero()) throw DomainError("period polynomial evaluated at z = 0");
  ExactScaled total;
  for (const auto& [exponent, c] : coefficients) total += c * ExactScaled(z.pow(exponent));
  return total;
}

std::complex<double> PeriodPolynomial::evaluate_unweighted(std::complex<double> z) const {
  if (z == 0.0) throw DomainError("period polynomial evaluated at z = 0");
  std::complex<double> total = 0.0;
  for (const auto& [exponent, c] : coefficients) total += c.to_complex() * std::pow(z, exponent);
  return total;
}

PeriodPolynomial psi_polynomial(unsigned n) {
  check_odd_n(n);
  PeriodPolynomial p;
  p.zeta_weight = n;
  const ExactScaled prefactor = ExactScaled(Rational(2), 1, 1).pow(static_cast<int>(n)) /
                                ExactScaled(Rational(factorial(n + 1), Integer(1)));
  for (unsigned m = 0; m <= n + 1; ++m) {
    const Rational c = Rational(binomial(n + 1, m)) * bernoulli_number(m) * bernoulli_number(n + 1 - m);
    p.coefficients[static_cast<int>(m) - 1] = prefactor * ExactScaled(c);
  }
  return p;
}

PeriodPolynomial g_polynomial(unsigned n) {
  check_odd_n(n);
  constexpr auto zeroed = BernoulliConvention::zeroed;
  PeriodPolynomial p;
  const ExactScaled prefactor = ExactScaled(Rational(2), 1, 1).pow(static_cast<int>(n)) /
                                ExactScaled(Rational(factorial(n + 1), Integer(1)), 0, 1);
  for (unsigned m = 0; m <= n; ++m) {
    const Rational c = Rational(binomial(n + 1, m + 1)) * bernoulli_number(m + 1, zeroed) *
                       bernoulli_number(n - m, zeroed);
    p.coefficients[static_cast<int>(m)] = prefactor * ExactScaled(c);
  }
  return p;
}

}  // namespace bcsum::exact
