#pragma once

// Plain-data interface between the dispatcher and the per-ISA translation units.
// Nothing here may be an inline function: the AVX2 unit is compiled with wider
// instruction sets and must not export code the scalar path could pick up.

namespace bcsum::kernels::detail {

struct LineParams {
  double eps;
  int n_factors;
  const double* k;
  const int* degree;    // per factor
  const double* coeffs;  // concatenated, degree+1 per factor
  double p_re, p_im;
  double top_re, top_im, bot_re, bot_im;
};

void power_sum_scalar(double s_re, double s_im, double x, double theta, long n, double out[3]);
void line_integrand_scalar(const LineParams& p, const double* t, long n, double* re, double* im);

#ifdef BCSUM_HAVE_AVX2
void power_sum_avx2(double s_re, double s_im, double x, double theta, long n, double out[3]);
void line_integrand_avx2(const LineParams& p, const double* t, long n, double* re, double* im);
#endif

}  // namespace bcsum::kernels::detail
