#include <atomic>
#include <vector>

#include "bcsum/error.hpp"
#include "bcsum/kernels.hpp"
#include "kernel_abi.hpp"

namespace bcsum::kernels {

namespace {

Backend detect() { return avx2_supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_supported() {
#ifdef BCSUM_HAVE_AVX2
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) throw DomainError("AVX2 backend not available on this machine");
  current().store(b);
}

Backend active_backend() { return current().load(); }

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

PowerSum twisted_power_sum(cplx s, double x, double theta, long n, Backend b) {
  double out[3];
#ifdef BCSUM_HAVE_AVX2
  if (b == Backend::avx2 && avx2_supported()) {
    detail::power_sum_avx2(s.real(), s.imag(), x, theta, n, out);
    return {{out[0], out[1]}, out[2]};
  }
#endif
  (void)b;
  detail::power_sum_scalar(s.real(), s.imag(), x, theta, n, out);
  return {{out[0], out[1]}, out[2]};
}

void eval_line_integrand(const LineIntegrand& f, const double* t, std::size_t n, cplx* out, Backend b) {
  std::vector<double> k, coeffs;
  std::vector<int> degree;
  for (const auto& factor : f.factors) {
    k.push_back(factor.k);
    degree.push_back(static_cast<int>(factor.poly.size()) - 1);
    coeffs.insert(coeffs.end(), factor.poly.begin(), factor.poly.end());
  }
  const detail::LineParams p{f.eps,          static_cast<int>(f.factors.size()),
                             k.data(),       degree.data(),
                             coeffs.data(),  f.power.real(),
                             f.power.imag(), f.top.real(),
                             f.top.imag(),   f.bottom.real(),
                             f.bottom.imag()};
  std::vector<double> re(n), im(n);
  const long count = static_cast<long>(n);
#ifdef BCSUM_HAVE_AVX2
  if (b == Backend::avx2 && avx2_supported()) {
    detail::line_integrand_avx2(p, t, count, re.data(), im.data());
  } else {
    detail::line_integrand_scalar(p, t, count, re.data(), im.data());
  }
#else
  (void)b;
  detail::line_integrand_scalar(p, t, count, re.data(), im.data());
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = {re[i], im[i]};
}

}  // namespace bcsum::kernels
