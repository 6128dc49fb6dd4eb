#pragma once

#include <functional>
#include <vector>

#include "bcsum/recip.hpp"

namespace bcsum::recip::detail {

using BatchFn = std::function<void(const double* t, std::size_t n, cplx* out)>;

/// ∫_{−∞}^{∞} f(t) dt for an integrand analytic near the real axis apart from
/// known singularities, with |f(t)| ~ |t|^q e^{−rate|t|} for large |t|.
struct LineProblem {
  BatchFn f;
  std::vector<cplx> singularities;  // t-plane positions, none on the real axis
  std::vector<double> breaks;       // jump points of f
  double decay_rate = 1.0;
  double poly_power = 0.0;
  double cap = 0.5;                 // widest panel
  double value_rel_err = 0.0;       // relative error of a single f value
};

struct LineResult {
  ComplexVal value;
  double height = 0.0;
  double tail = 0.0;
  std::size_t panels = 0;
};

LineResult integrate_line(const LineProblem& prob, const QuadratureConfig& quad);

}  // namespace bcsum::recip::detail
