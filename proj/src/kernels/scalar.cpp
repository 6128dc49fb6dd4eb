#include <cmath>
#include <numbers>

#include "kernel_abi.hpp"

namespace bcsum::kernels::detail {

void power_sum_scalar(double s_re, double s_im, double x, double theta, long n, double out[3]) {
  double acc_re = 0.0, acc_im = 0.0, acc_abs = 0.0;
  for (long j = 0; j < n; ++j) {
    const double l = std::log(x + static_cast<double>(j));
    const double mag = std::exp(-s_re * l);
    const double ph = theta * static_cast<double>(j) - s_im * l;
    acc_re += mag * std::cos(ph);
    acc_im += mag * std::sin(ph);
    acc_abs += mag;
  }
  out[0] = acc_re;
  out[1] = acc_im;
  out[2] = acc_abs;
}

void line_integrand_scalar(const LineParams& p, const double* t, long n, double* re, double* im) {
  constexpr double pi = std::numbers::pi;
  for (long i = 0; i < n; ++i) {
    const double y = -t[i];
    double prod_re = 1.0, prod_im = 0.0;
    const double* c = p.coeffs;
    for (int f = 0; f < p.n_factors; ++f) {
      // cot(u + iv) with e = exp(−2|v|), stable for large |v|
      const double u = pi * p.k[f] * p.eps, v = pi * p.k[f] * y;
      const double e = std::exp(-2.0 * std::abs(v));
      const double om = -std::expm1(-2.0 * std::abs(v));
      const double su = std::sin(u);
      const double d = om * om + 4.0 * e * su * su;
      const double cr = 2.0 * e * std::sin(2.0 * u) / d;
      const double ci = (v >= 0 ? -1.0 : 1.0) * om * (1.0 + e) / d;
      const int deg = p.degree[f];
      double hr = c[deg], hi = 0.0;
      for (int j = deg - 1; j >= 0; --j) {
        const double nr = hr * cr - hi * ci + c[j];
        hi = hr * ci + hi * cr;
        hr = nr;
      }
      c += deg + 1;
      const double nr = prod_re * hr - prod_im * hi;
      prod_im = prod_re * hi + prod_im * hr;
      prod_re = nr;
    }
    if (t[i] < 0) {
      prod_re -= p.top_re;
      prod_im -= p.top_im;
    } else {
      prod_re -= p.bot_re;
      prod_im -= p.bot_im;
    }
    // z^{−p} with z = ε − i t
    const double lr = 0.5 * std::log(p.eps * p.eps + t[i] * t[i]);
    const double li = std::atan2(-t[i], p.eps);
    const double er = -(p.p_re * lr - p.p_im * li);
    const double ei = -(p.p_re * li + p.p_im * lr);
    const double mag = std::exp(er);
    const double wr = mag * std::cos(ei), wi = mag * std::sin(ei);
    re[i] = prod_re * wr - prod_im * wi;
    im[i] = prod_re * wi + prod_im * wr;
  }
}

}  // namespace bcsum::kernels::detail
