#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace bcsum {

using cplx = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Complex value with a first-order absolute error estimate.
struct ComplexVal {
  cplx value{};
  double abs_err = 0.0;

  ComplexVal() = default;
  ComplexVal(cplx v, double err = 0.0) : value(v), abs_err(err) {}  // NOLINT
  ComplexVal(double v, double err = 0.0) : value(v, 0.0), abs_err(err) {}  // NOLINT

  double re() const { return value.real(); }
  double im() const { return value.imag(); }
  double abs() const { return std::abs(value); }

  ComplexVal& operator+=(const ComplexVal& o) {
    value += o.value;
    abs_err += o.abs_err + kEps * std::abs(value);
    return *this;
  }
  ComplexVal& operator-=(const ComplexVal& o) {
    value -= o.value;
    abs_err += o.abs_err + kEps * std::abs(value);
    return *this;
  }
  ComplexVal& operator*=(const ComplexVal& o) {
    abs_err = std::abs(value) * o.abs_err + std::abs(o.value) * abs_err + abs_err * o.abs_err;
    value *= o.value;
    abs_err += 2 * kEps * std::abs(value);
    return *this;
  }
  ComplexVal& operator/=(const ComplexVal& o) {
    const double d = std::abs(o.value);
    value /= o.value;
    abs_err = (abs_err + std::abs(value) * o.abs_err) / d + 2 * kEps * std::abs(value);
    return *this;
  }

  friend ComplexVal operator+(ComplexVal a, const ComplexVal& b) { return a += b; }
  friend ComplexVal operator-(ComplexVal a, const ComplexVal& b) { return a -= b; }
  friend ComplexVal operator*(ComplexVal a, const ComplexVal& b) { return a *= b; }
  friend ComplexVal operator/(ComplexVal a, const ComplexVal& b) { return a /= b; }
  ComplexVal operator-() const { return {-value, abs_err}; }
};

/// Numeric settings shared by every floating-point routine.
struct PrecisionConfig {
  int working_digits = 16;
  double target_abs_err = 1e-13;
  long max_terms = 1'000'000;

  /// Throws DomainError on inconsistent settings.
  void validate() const;
};

}  // namespace bcsum
