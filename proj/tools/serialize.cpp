#include "serialize.hpp"

#include <cstdio>

namespace bcsum::cli {

std::string decimal(double v, int digits) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Json to_json(const exact::Rational& r) {
  return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Json to_json(const exact::ExactScaled& x) {
  return Json{{"num", x.coeff().numerator().get_str()},
              {"den", x.coeff().denominator().get_str()},
              {"pi_pow", x.pi_power()},
              {"i_pow", x.i_power()}};
}

Json to_json(const ComplexVal& v, int digits) {
  return Json{{"re", decimal(v.re(), digits)}, {"im", decimal(v.im(), digits)},
              {"abs_err", decimal(v.abs_err, digits)}};
}

Json to_json(cplx v, int digits) { return Json{{"re", decimal(v.real(), digits)}, {"im", decimal(v.imag(), digits)}}; }

Json to_json(const exact::PeriodPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& [power, c] : p.coefficients) {
    if (c.is_zero()) continue;
    Json row = to_json(c);
    row["power"] = power;
    coeffs.push_back(row);
  }
  return Json{{"zeta_weight", p.zeta_weight}, {"coefficients", coeffs}};
}

bool Report::pass() const {
  if (exact) return exact->residual.is_zero();
  return residual.pass() && (!routes || routes->pass());
}

Report Report::numeric(std::string theorem, Json params, const Residual& r) {
  Report out;
  out.theorem = std::move(theorem);
  out.params = std::move(params);
  out.residual = r;
  return out;
}

Report Report::exact_check(std::string theorem, Json params, const exact::ExactScaled& lhs,
                           const exact::ExactScaled& rhs) {
  Report out;
  out.theorem = std::move(theorem);
  out.params = std::move(params);
  out.exact = Exact{lhs, rhs, lhs.commensurable_with(rhs) ? lhs - rhs : lhs};
  const bool zero = lhs == rhs;
  if (zero) out.exact->residual = {};
  const cplx l = lhs.to_complex(), r = rhs.to_complex();
  out.residual.lhs = ComplexVal(l, 4 * kEps * std::abs(l));
  out.residual.rhs = ComplexVal(r, 4 * kEps * std::abs(r));
  out.residual.value = zero ? cplx(0.0) : out.residual.lhs.value - out.residual.rhs.value;
  return out;
}

Json to_json(const Report& r, int digits) {
  Json j{{"theorem", r.theorem},
         {"params", r.params},
         {"lhs", to_json(r.residual.lhs, digits)},
         {"rhs", to_json(r.residual.rhs, digits)},
         {"residual", to_json(ComplexVal(r.residual.value, 0.0), digits)},
         {"budget", decimal(r.residual.budget, digits)},
         {"pass", r.pass()}};
  if (r.routes) {
    j["routes"] = Json{{"residual", to_json(ComplexVal(r.routes->value, 0.0), digits)},
                       {"budget", decimal(r.routes->budget, digits)},
                       {"pass", r.routes->pass()}};
  }
  if (r.exact) {
    j["exact"] = Json{{"lhs", to_json(r.exact->lhs)}, {"rhs", to_json(r.exact->rhs)},
                      {"residual", to_json(r.exact->residual)}};
  }
  return j;
}

std::string flat_params(const Json& params) {
  std::string out;
  for (const auto& [key, value] : params.items()) {
    if (!out.empty()) out += ';';
    out += key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

std::string csv_header() {
  return "theorem,params,lhs_re,lhs_im,lhs_err,rhs_re,rhs_im,rhs_err,residual_re,residual_im,budget,pass";
}

std::string to_csv(const Report& r, int digits) {
  const Residual& x = r.residual;
  std::string params = flat_params(r.params);
  std::string quoted = "\"";
  for (char c : params) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  quoted += '"';
  std::string out = r.theorem + ',' + quoted;
  for (double v : {x.lhs.re(), x.lhs.im(), x.lhs.abs_err, x.rhs.re(), x.rhs.im(), x.rhs.abs_err, x.value.real(),
                   x.value.imag(), x.budget}) {
    out += ',' + decimal(v, digits);
  }
  return out + (r.pass() ? ",true" : ",false");
}

std::string to_text(const Report& r, int digits) {
  std::string out = r.theorem + ' ' + flat_params(r.params) + "  residual " + decimal(r.residual.abs(), digits);
  if (r.exact) {
    out += " (exact " + r.exact->residual.to_string() + ")";
  } else {
    out += " budget " + decimal(r.residual.budget, digits);
  }
  if (r.routes) out += "  routes " + decimal(r.routes->abs(), digits) + " budget " + decimal(r.routes->budget, digits);
  return out + (r.pass() ? "  PASS" : "  FAIL");
}

}  // namespace bcsum::cli
