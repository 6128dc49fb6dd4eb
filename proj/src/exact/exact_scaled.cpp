#include "bcsum/exact_scaled.hpp"

#include <cmath>
#include <numbers>

#include "bcsum/error.hpp"

namespace bcsum::exact {

ExactScaled::ExactScaled(Rational coeff, int pi_power, int i_power)
    : coeff_(std::move(coeff)), pi_power_(pi_power), i_power_(i_power) {
  normalize();
}

void ExactScaled::normalize() {
  if (coeff_.is_zero()) {
    pi_power_ = 0;
    i_power_ = 0;
    return;
  }
  int r = i_power_ % 4;
  if (r < 0) r += 4;
  if (r >= 2) {
    coeff_ = -coeff_;
    r -= 2;
  }
  i_power_ = r;
}

bool ExactScaled::commensurable_with(const ExactScaled& o) const {
  return is_zero() || o.is_zero() || (pi_power_ == o.pi_power_ && i_power_ == o.i_power_);
}

ExactScaled& ExactScaled::operator*=(const ExactScaled& o) {
  coeff_ *= o.coeff_;
  pi_power_ += o.pi_power_;
  i_power_ += o.i_power_;
  normalize();
  return *this;
}

ExactScaled& ExactScaled::operator/=(const ExactScaled& o) {
  if (o.is_zero()) throw DomainError("ExactScaled division by zero");
  coeff_ /= o.coeff_;
  pi_power_ -= o.pi_power_;
  i_power_ -= o.i_power_;
  normalize();
  return *this;
}

ExactScaled& ExactScaled::operator+=(const ExactScaled& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!commensurable_with(o)) {
    throw DomainError("cannot add " + to_string() + " and " + o.to_string() + " exactly");
  }
  coeff_ += o.coeff_;
  normalize();
  return *this;
}

ExactScaled& ExactScaled::operator-=(const ExactScaled& o) { return *this += -o; }

ExactScaled ExactScaled::pow(int exponent) const {
  if (exponent < 0) return ExactScaled(Rational(1)) / pow(-exponent);
  ExactScaled out(Rational(1));
  for (int e = 0; e < exponent; ++e) out *= *this;
  return out;
}

std::complex<double> ExactScaled::to_complex() const {
  // Rational part first so that huge numerators and denominators cancel in
  // exact arithmetic before rounding.
  const double mag = coeff_.to_double() * std::pow(std::numbers::pi, pi_power_);
  return i_power_ == 0 ? std::complex<double>(mag, 0.0) : std::complex<double>(0.0, mag);
}

std::string ExactScaled::to_string() const {
  if (is_zero()) return "0";
  std::string out = coeff_.to_string();
  if (pi_power_ == 1) out += "*pi";
  else if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  if (i_power_ == 1) out += "*i";
  return out;
}

}  // namespace bcsum::exact
