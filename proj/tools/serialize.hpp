#pragma once

#include <optional>
#include <string>

#include "bcsum/complex_val.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/residual.hpp"
#include "json.hpp"

namespace bcsum::cli {

using Json = nlohmann::ordered_json;

/// Fixed-format decimal with the given number of significant digits; −0 prints as 0.
std::string decimal(double v, int digits);

Json to_json(const exact::Rational& r);
Json to_json(const exact::ExactScaled& x);
Json to_json(const ComplexVal& v, int digits);
Json to_json(cplx v, int digits);
Json to_json(const exact::PeriodPolynomial& p);

/// One verification outcome. Exact checks carry their ExactScaled data and
/// pass only on an exact zero residual.
struct Report {
  std::string theorem;
  Json params = Json::object();
  Residual residual;
  std::optional<Residual> routes;
  struct Exact {
    exact::ExactScaled lhs, rhs, residual;
  };
  std::optional<Exact> exact;

  bool pass() const;
  static Report numeric(std::string theorem, Json params, const Residual& r);
  static Report exact_check(std::string theorem, Json params, const exact::ExactScaled& lhs,
                            const exact::ExactScaled& rhs);
};

Json to_json(const Report& r, int digits);
std::string csv_header();
std::string to_csv(const Report& r, int digits);
std::string to_text(const Report& r, int digits);

/// "k=v;k=v" rendering of a flat params object.
std::string flat_params(const Json& params);

}  // namespace bcsum::cli
