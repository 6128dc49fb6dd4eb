#pragma once

#include <cstddef>
#include <vector>

#include "bcsum/complex_val.hpp"

namespace bcsum::kernels {

/// Inner-loop implementation. The scalar variant is the reference; avx2 is used
/// when the CPU supports AVX2+FMA and the build enabled it.
enum class Backend { scalar, avx2 };

bool avx2_supported();
/// Throws DomainError when asking for avx2 on a machine or build without it.
void set_backend(Backend b);
Backend active_backend();
const char* backend_name(Backend b);

struct PowerSum {
  cplx sum;
  double abs_sum = 0.0;  // Σ|terms|, for rounding budgets
};

/// Σ_{j<n} e^{iθj} (x+j)^{−s} for real x > 0.
PowerSum twisted_power_sum(cplx s, double x, double theta, long n, Backend b);
inline PowerSum twisted_power_sum(cplx s, double x, double theta, long n) {
  return twisted_power_sum(s, x, theta, n, active_backend());
}

/// One factor P(cot(πk z)) of a cotangent-product integrand; P has real
/// coefficients in ascending order.
struct CotFactor {
  double k = 1.0;
  std::vector<double> poly;
};

/// f(t) = (∏ P_j(cot(πk_j z)) − C(t)) · z^{−power} at z = ε − i t, where
/// C(t) = top for t < 0 (Im z > 0) and bottom otherwise.
struct LineIntegrand {
  double eps = 0.1;
  std::vector<CotFactor> factors;
  cplx power{2.0, 0.0};
  cplx top{0.0, 0.0};
  cplx bottom{0.0, 0.0};
};

void eval_line_integrand(const LineIntegrand& f, const double* t, std::size_t n, cplx* out, Backend b);
inline void eval_line_integrand(const LineIntegrand& f, const double* t, std::size_t n, cplx* out) {
  eval_line_integrand(f, t, n, out, active_backend());
}

}  // namespace bcsum::kernels
