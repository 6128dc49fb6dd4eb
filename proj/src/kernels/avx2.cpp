#include <experimental/simd>
#include <numbers>

#include "kernel_abi.hpp"

namespace stdx = std::experimental;

namespace bcsum::kernels::detail {

namespace {

using V = stdx::fixed_size_simd<double, 4>;

}  // namespace

void power_sum_avx2(double s_re, double s_im, double x, double theta, long n, double out[3]) {
  V acc_re = 0.0, acc_im = 0.0, acc_abs = 0.0;
  const V lane([](int i) { return static_cast<double>(i); });
  long j = 0;
  for (; j + 4 <= n; j += 4) {
    const V jj = lane + static_cast<double>(j);
    const V l = stdx::log(x + jj);
    const V mag = stdx::exp(-s_re * l);
    const V ph = theta * jj - s_im * l;
    acc_re += mag * stdx::cos(ph);
    acc_im += mag * stdx::sin(ph);
    acc_abs += mag;
  }
  double tail[3];
  power_sum_scalar(s_re, s_im, x + static_cast<double>(j), theta, n - j, tail);
  // the scalar tail starts its phase at 0, rotate it by θj
  const double c = std::cos(theta * static_cast<double>(j)), s = std::sin(theta * static_cast<double>(j));
  out[0] = stdx::reduce(acc_re) + c * tail[0] - s * tail[1];
  out[1] = stdx::reduce(acc_im) + s * tail[0] + c * tail[1];
  out[2] = stdx::reduce(acc_abs) + tail[2];
}

void line_integrand_avx2(const LineParams& p, const double* t, long n, double* re, double* im) {
  constexpr double pi = std::numbers::pi;
  long i = 0;
  for (; i + 4 <= n; i += 4) {
    const V tv(t + i, stdx::element_aligned);
    const V y = -tv;
    V prod_re = 1.0, prod_im = 0.0;
    const double* c = p.coeffs;
    for (int f = 0; f < p.n_factors; ++f) {
      const double u = pi * p.k[f] * p.eps;
      const V v = (pi * p.k[f]) * y;
      const V e = stdx::exp(-2.0 * stdx::abs(v));
      const V om = -stdx::expm1(-2.0 * stdx::abs(v));
      const double su = std::sin(u);
      const V d = om * om + 4.0 * su * su * e;
      const V cr = 2.0 * std::sin(2.0 * u) * e / d;
      V sign = 1.0;
      stdx::where(v >= 0.0, sign) = -1.0;
      const V ci = sign * om * (1.0 + e) / d;
      const int deg = p.degree[f];
      V hr = c[deg], hi = 0.0;
      for (int j = deg - 1; j >= 0; --j) {
        const V nr = hr * cr - hi * ci + c[j];
        hi = hr * ci + hi * cr;
        hr = nr;
      }
      c += deg + 1;
      const V nr = prod_re * hr - prod_im * hi;
      prod_im = prod_re * hi + prod_im * hr;
      prod_re = nr;
    }
    V cre = p.bot_re, cim = p.bot_im;
    stdx::where(tv < 0.0, cre) = p.top_re;
    stdx::where(tv < 0.0, cim) = p.top_im;
    prod_re -= cre;
    prod_im -= cim;
    const V lr = 0.5 * stdx::log(p.eps * p.eps + tv * tv);
    const V li = stdx::atan2(-tv, V(p.eps));
    const V er = -(p.p_re * lr - p.p_im * li);
    const V ei = -(p.p_re * li + p.p_im * lr);
    const V mag = stdx::exp(er);
    const V wr = mag * stdx::cos(ei), wi = mag * stdx::sin(ei);
    (prod_re * wr - prod_im * wi).copy_to(re + i, stdx::element_aligned);
    (prod_re * wi + prod_im * wr).copy_to(im + i, stdx::element_aligned);
  }
  if (i < n) line_integrand_scalar(p, t + i, n - i, re + i, im + i);
}

}  // namespace bcsum::kernels::detail
