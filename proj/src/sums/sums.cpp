#include "bcsum/sums.hpp"

#include <numeric>
#include <string>

#include "bcsum/error.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/specfn.hpp"

namespace bcsum::sums {

namespace {

ComplexVal power_of(long base, cplx a) {
  const cplx v = std::exp(a * std::log(static_cast<double>(base)));
  return {v, kEps * std::abs(v) * (2 + std::abs(a) * std::log(static_cast<double>(base) + 1))};
}

void check_pole_free(cplx a, unsigned m0) {
  if (a == cplx(-1.0, 0.0)) throw PoleError("a = -1 puts zeta(-a, x) on its pole at 1");
  if (-a + static_cast<double>(m0) == cplx(1.0, 0.0)) {
    throw PoleError("-a + m0 = 1 puts the zeta derivative on its pole at 1");
  }
}

}  // namespace

RationalArg RationalArg::make(long p, long q, bool need_q_above_one) {
  if (q <= 0) throw DomainError("rational argument needs q > 0");
  if (std::gcd(p, q) != 1) throw DomainError("rational argument p/q must be in lowest terms");
  if (need_q_above_one && q == 1) throw DomainError("rational argument needs q > 1");
  return {p, q};
}

BCSumSpec BCSumSpec::make(cplx a, long k0, std::vector<long> k, std::vector<unsigned> m) {
  if (k0 < 1) throw DomainError("k0 must be a positive integer");
  if (m.size() != k.size() + 1) throw DomainError("derivative list must have one more entry than the modulus list");
  for (long kj : k) {
    if (kj < 1) throw DomainError("moduli must be positive integers");
    if (std::gcd(k0, kj) != 1) {
      throw DomainError("k0 = " + std::to_string(k0) + " and k = " + std::to_string(kj) + " are not coprime");
    }
  }
  check_pole_free(a, m[0]);
  return {a, k0, std::move(k), std::move(m)};
}

ComplexVal bc_sum(cplx a, long h, long k, const PrecisionConfig& cfg) {
  cfg.validate();
  if (k < 1 || h == 0) throw DomainError("bc_sum needs k >= 1 and h != 0");
  if (std::gcd(h, k) != 1) throw DomainError("bc_sum needs gcd(h, k) = 1");
  check_pole_free(a, 0);
  if (h < 0) return -bc_sum(a, -h, k, cfg);
  return bc_sum_general(BCSumSpec::make(a, k, {h}, {0, 0}), cfg);
}

ComplexVal bc_sum_general(const BCSumSpec& spec, const PrecisionConfig& cfg) {
  cfg.validate();
  if (spec.k0 == 1) return {0.0, 0.0};
  ComplexVal total;
  for (long l = 1; l < spec.k0; ++l) {
    ComplexVal term = specfn::hurwitz_zeta_x_deriv(spec.m[0], -spec.a, static_cast<double>(l) / spec.k0, cfg);
    for (std::size_t j = 0; j < spec.k.size(); ++j) {
      term *= specfn::cot_derivative(spec.m[j + 1], exact::Rational(spec.k[j] * l, spec.k0), cfg);
    }
    total += term;
  }
  return power_of(spec.k0, spec.a) * total;
}

ComplexVal bc_sum_higher(cplx a, long k0, const std::vector<long>& ks, const PrecisionConfig& cfg) {
  return bc_sum_general(BCSumSpec::make(a, k0, ks, std::vector<unsigned>(ks.size() + 1, 0)), cfg);
}

ComplexVal cotangent_sum_C(unsigned a, unsigned k, RationalArg x, const PrecisionConfig& cfg) {
  cfg.validate();
  x = RationalArg::make(x.p, x.q);
  ComplexVal total;
  for (long m = 1; m < x.q; ++m) {
    const double zeta = exact::hurwitz_neg_int(a, exact::Rational(m, x.q)).to_double();
    total += specfn::cot_derivative(k, exact::Rational(m * x.p, x.q), cfg) * ComplexVal(zeta, kEps * std::abs(zeta));
  }
  // −(2i)^{−(k+1)}
  const cplx pre = -std::pow(cplx(0.0, 2.0), -static_cast<int>(k + 1));
  return ComplexVal(pre) * power_of(x.q, static_cast<double>(a)) * total;
}

ComplexVal cotangent_sum_phi(unsigned a, unsigned s, RationalArg x, const PrecisionConfig& cfg) {
  cfg.validate();
  x = RationalArg::make(x.p, x.q);
  ComplexVal total;
  for (long m = 1; m < x.q; ++m) {
    const cplx lambda = specfn::e_of(exact::Rational(m * x.p, x.q));
    const double zeta = exact::hurwitz_neg_int(a, exact::Rational(m, x.q)).to_double();
    const ComplexVal phi = specfn::lerch_phi(-static_cast<double>(s), 1.0, lambda, cfg);
    total += ComplexVal(lambda, 2 * kEps) * phi * ComplexVal(zeta, kEps * std::abs(zeta));
  }
  return power_of(x.q, static_cast<double>(a)) * total;
}

}  // namespace bcsum::sums
