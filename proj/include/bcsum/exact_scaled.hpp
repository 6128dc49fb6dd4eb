#pragma once

#include <complex>
#include <string>

#include "bcsum/rational.hpp"

namespace bcsum::exact {

/// coeff · π^pi_power · i^i_power, kept symbolic so that identities whose
/// transcendental part factors out can be checked with zero tolerance.
///
/// Normal form: i_power ∈ {0, 1} (i² = −1 is folded into the sign of coeff)
/// and zero is always (0, 0, 0). Equality compares normal forms.
class ExactScaled {
 public:
  ExactScaled() = default;
  ExactScaled(Rational coeff, int pi_power = 0, int i_power = 0);  // NOLINT

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  int i_power() const { return i_power_; }
  bool is_zero() const { return coeff_.is_zero(); }

  /// Same π and i powers (or one side zero), so that + and − stay exact.
  bool commensurable_with(const ExactScaled& o) const;

  ExactScaled& operator*=(const ExactScaled& o);
  ExactScaled& operator/=(const ExactScaled& o);
  /// Throws DomainError when the operands are not commensurable.
  ExactScaled& operator+=(const ExactScaled& o);
  ExactScaled& operator-=(const ExactScaled& o);

  friend ExactScaled operator*(ExactScaled a, const ExactScaled& b) { return a *= b; }
  friend ExactScaled operator/(ExactScaled a, const ExactScaled& b) { return a /= b; }
  friend ExactScaled operator+(ExactScaled a, const ExactScaled& b) { return a += b; }
  friend ExactScaled operator-(ExactScaled a, const ExactScaled& b) { return a -= b; }
  ExactScaled operator-() const { return ExactScaled(-coeff_, pi_power_, i_power_); }

  friend bool operator==(const ExactScaled& a, const ExactScaled& b) = default;

  ExactScaled pow(int exponent) const;

  std::complex<double> to_complex() const;
  /// Human-readable form such as "-1/15*pi^3*i".
  std::string to_string() const;

  static ExactScaled pi(int power = 1) { return ExactScaled(Rational(1), power, 0); }
  static ExactScaled imag_unit() { return ExactScaled(Rational(1), 0, 1); }

 private:
  void normalize();

  Rational coeff_{0};
  int pi_power_ = 0;
  int i_power_ = 0;
};

}  // namespace bcsum::exact
