#pragma once

#include <vector>

#include "bcsum/complex_val.hpp"

namespace bcsum::sums {

/// x = p/q in lowest terms with q > 0.
struct RationalArg {
  long p = 0;
  long q = 1;

  /// Throws DomainError unless gcd(p, q) = 1, q > 0 and (when asked) q > 1.
  static RationalArg make(long p, long q, bool need_q_above_one = true);
};

/// Matrix data (a; k0 k1..kn; m0 m1..mn) of a generalized Bettin–Conrey sum.
struct BCSumSpec {
  cplx a;
  long k0 = 1;
  std::vector<long> k;       // k1..kn
  std::vector<unsigned> m;   // m0..mn, one longer than k

  /// Validates coprimality and keeps a away from the ζ poles.
  static BCSumSpec make(cplx a, long k0, std::vector<long> k, std::vector<unsigned> m);
};

/// c_a(h/k) = k^a Σ_{m=1}^{k−1} cot(πmh/k) ζ(−a, m/k). A negative h uses
/// c_a(−x) = −c_a(x).
ComplexVal bc_sum(cplx a, long h, long k, const PrecisionConfig& cfg = {});

/// k0^a Σ_l ζ^{(m0)}(−a, l/k0) ∏_j cot^{(m_j)}(πk_j l/k0), with cot^{(m)} the
/// derivative of cot evaluated at the point.
ComplexVal bc_sum_general(const BCSumSpec& spec, const PrecisionConfig& cfg = {});

/// c_a(k0; k1..kn), every derivative order zero.
ComplexVal bc_sum_higher(cplx a, long k0, const std::vector<long>& ks, const PrecisionConfig& cfg = {});

/// C(a,k,x) = −(2i)^{−(k+1)} q^a Σ_{m=1}^{q−1} cot^{(k)}(πmx) ζ(−a, m/q), for every k ≥ 0.
ComplexVal cotangent_sum_C(unsigned a, unsigned k, RationalArg x, const PrecisionConfig& cfg = {});

/// q^a Σ_{m=1}^{q−1} e(mx) Φ(−s, 1, e(mx)) ζ(−a, m/q), the Lerch form of the same
/// family (a, s nonnegative integers).
ComplexVal cotangent_sum_phi(unsigned a, unsigned s, RationalArg x, const PrecisionConfig& cfg = {});

}  // namespace bcsum::sums
