#pragma once

#include <cmath>

#include "bcsum/complex_val.hpp"

namespace bcsum {

/// Signed outcome of a numeric identity check. The caller decides what
/// threshold to apply; pass() compares against the propagated budget.
struct Residual {
  ComplexVal lhs;
  ComplexVal rhs;
  cplx value;
  double budget = 0.0;

  double abs() const { return std::abs(value); }
  bool pass() const { return abs() <= budget; }
};

inline Residual make_residual(const ComplexVal& lhs, const ComplexVal& rhs) {
  Residual r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.value = lhs.value - rhs.value;
  r.budget = lhs.abs_err + rhs.abs_err + 4 * kEps * (std::abs(lhs.value) + std::abs(rhs.value));
  return r;
}

}  // namespace bcsum
