#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bcsum/error.hpp"
#include "bcsum/parallel.hpp"

namespace bcsum::recip::detail {

namespace {

constexpr int kGaussN = 16;

struct GaussRule {
  std::array<double, kGaussN> x{};
  std::array<double, kGaussN> w{};
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    for (int i = 0; i < kGaussN; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kGaussN + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int n = 2; n <= kGaussN; ++n) {
          const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
          p0 = p1;
          p1 = p2;
        }
        dp = kGaussN * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.x[i] = x;
      r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

double eval_abs(const BatchFn& f, double t) {
  cplx v;
  f(&t, 1, &v);
  return std::abs(v);
}

double tail_estimate(const LineProblem& prob, double T) {
  const double rate = prob.decay_rate - prob.poly_power / T;
  if (rate < 0.25 * prob.decay_rate) return HUGE_VAL;
  return (eval_abs(prob.f, T) + eval_abs(prob.f, -T)) / rate;
}

double panel_width(const LineProblem& prob, double t) {
  double d = HUGE_VAL;
  for (cplx s : prob.singularities) d = std::min(d, std::abs(cplx(t, 0.0) - s));
  return std::min(prob.cap, 0.5 * d);
}

std::vector<std::pair<double, double>> make_panels(const LineProblem& prob, double T) {
  std::vector<double> points{-T};
  std::vector<double> breaks = prob.breaks;
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks) {
    if (b > -T && b < T) points.push_back(b);
  }
  points.push_back(T);

  std::vector<std::pair<double, double>> panels;
  for (std::size_t s = 0; s + 1 < points.size(); ++s) {
    const double hi = points[s + 1];
    double x = points[s];
    while (x < hi) {
      const double w = panel_width(prob, x);
      const double next = (x + 1.25 * w >= hi) ? hi : x + w;
      panels.emplace_back(x, next);
      x = next;
    }
  }
  return panels;
}

ComplexVal gauss_panel(const LineProblem& prob, double a, double b) {
  const GaussRule& g = gauss_rule();
  std::array<double, 3 * kGaussN> t{};
  std::array<cplx, 3 * kGaussN> v{};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < kGaussN; ++i) {
    t[i] = mid + half * g.x[i];
    t[kGaussN + i] = mid - 0.5 * half + 0.5 * half * g.x[i];
    t[2 * kGaussN + i] = mid + 0.5 * half + 0.5 * half * g.x[i];
  }
  prob.f(t.data(), t.size(), v.data());
  cplx whole = 0.0, split = 0.0;
  double mag = 0.0;
  for (int i = 0; i < kGaussN; ++i) {
    whole += g.w[i] * half * v[i];
    const cplx s = 0.5 * half * g.w[i] * (v[kGaussN + i] + v[2 * kGaussN + i]);
    split += s;
    mag += 0.5 * half * g.w[i] * (std::abs(v[kGaussN + i]) + std::abs(v[2 * kGaussN + i]));
  }
  return {split, std::abs(split - whole) + mag * (prob.value_rel_err + 4 * kEps)};
}

struct SimpsonState {
  const LineProblem* prob;
  double mag = 0.0;
  double err = 0.0;
};

cplx simpson_rec(SimpsonState& st, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, double tol,
                 int depth) {
  const double m = 0.5 * (a + b);
  const std::array<double, 2> t{0.5 * (a + m), 0.5 * (m + b)};
  std::array<cplx, 2> v{};
  st.prob->f(t.data(), 2, v.data());
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * v[0] + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * v[1] + fb);
  const cplx diff = left + right - whole;
  if (depth >= 40 || (depth >= 2 && std::abs(diff) <= 15.0 * tol)) {
    st.err += std::abs(diff) / 15.0;
    st.mag += (b - a) / 6.0 * (std::abs(fa) + 2.0 * std::abs(v[0]) + 2.0 * std::abs(v[1]) + std::abs(fb));
    return left + right + diff / 15.0;
  }
  return simpson_rec(st, a, m, fa, v[0], fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(st, m, b, fm, v[1], fb, right, 0.5 * tol, depth + 1);
}

ComplexVal simpson_panel(const LineProblem& prob, double a, double b, double tol) {
  const std::array<double, 3> t{a, 0.5 * (a + b), b};
  std::array<cplx, 3> v{};
  prob.f(t.data(), 3, v.data());
  SimpsonState st{&prob};
  const cplx whole = (b - a) / 6.0 * (v[0] + 4.0 * v[1] + v[2]);
  const cplx s = simpson_rec(st, a, b, v[0], v[1], v[2], whole, tol, 0);
  return {s, st.err + st.mag * (prob.value_rel_err + 4 * kEps)};
}

double choose_height(const LineProblem& prob, double goal) {
  double lo = 1.0;
  for (cplx s : prob.singularities) lo = std::max(lo, std::abs(s.real()) + 1.0);
  for (double b : prob.breaks) lo = std::max(lo, std::abs(b) + 1.0);
  if (tail_estimate(prob, lo) <= goal) return lo;
  double hi = 2.0 * lo;
  while (tail_estimate(prob, hi) > goal) {
    lo = hi;
    hi *= 2.0;
    if (hi > 4096.0) throw PrecisionError("vertical-line integrand does not decay fast enough to truncate");
  }
  for (int it = 0; it < 60 && hi - lo > 1e-6 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail_estimate(prob, mid) > goal ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

LineResult integrate_line(const LineProblem& prob, const QuadratureConfig& quad) {
  LineResult out;
  if (quad.truncation_height > 0) {
    out.height = quad.truncation_height;
    out.tail = tail_estimate(prob, out.height);
    if (!(out.tail <= quad.target_abs_err)) {
      throw PrecisionError("tail beyond height " + std::to_string(out.height) + " is about " +
                           std::to_string(out.tail) + ", above the target");
    }
  } else {
    out.height = choose_height(prob, 0.25 * quad.target_abs_err);
    out.tail = tail_estimate(prob, out.height);
  }

  const auto panels = make_panels(prob, out.height);
  out.panels = panels.size();
  const double tol = 0.25 * quad.target_abs_err / static_cast<double>(panels.size());
  const auto parts = parallel_map(panels.size(), [&](std::size_t i) {
    const auto [a, b] = panels[i];
    return quad.rule == PanelRule::gauss_legendre ? gauss_panel(prob, a, b) : simpson_panel(prob, a, b, tol);
  });
  cplx sum = 0.0;
  double err = out.tail;
  for (const ComplexVal& p : parts) {
    sum += p.value;
    err += p.abs_err;
  }
  out.value = {sum, err};
  return out;
}

}  // namespace bcsum::recip::detail
