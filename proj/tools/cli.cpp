#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <list>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "args.hpp"
#include "bcsum/error.hpp"
#include "bcsum/estermann.hpp"
#include "bcsum/exact.hpp"
#include "bcsum/parallel.hpp"
#include "bcsum/recip.hpp"
#include "bcsum/sums.hpp"
#include "serialize.hpp"

namespace bcsum::cli {

namespace {

using exact::ExactScaled;
using exact::Rational;
using sums::RationalArg;

struct Settings {
  PrecisionConfig cfg;
  recip::QuadratureConfig quad;
  std::string format = "json";

  int digits() const { return cfg.working_digits - 2; }

  Json echo() const {
    return Json{{"precision_digits", cfg.working_digits},
                {"target_err", decimal(cfg.target_abs_err, digits())},
                {"quad_target_err", decimal(quad.target_abs_err, digits())},
                {"quad_height", decimal(quad.truncation_height, digits())},
                {"quad_rule", quad.rule == recip::PanelRule::gauss_legendre ? "gauss-legendre" : "adaptive-simpson"},
                {"epsilon", decimal(quad.epsilon, digits())}};
  }
};

using Value = std::variant<ExactScaled, ComplexVal, exact::PeriodPolynomial>;

struct Computed {
  Json params;
  Value value;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;
};

using Task = std::function<Report()>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::pair<std::string, std::string>> options;
  std::function<Computed(const Params&, const Settings&)> compute = {};
  std::function<std::vector<Task>(const Params&, const Settings&)> verify = {};
  std::function<Table(const Params&, const Settings&)> table = {};
};

std::string show(cplx z) {
  if (z.imag() == 0.0) return decimal(z.real(), 15);
  const std::string im = decimal(z.imag(), 15);
  const std::string sign = z.imag() < 0 ? "" : "+";
  return z.real() == 0.0 ? im + "i" : decimal(z.real(), 15) + sign + im + "i";
}

std::string show(const RationalArg& x) { return std::to_string(x.p) + "/" + std::to_string(x.q); }

Json list_json(const std::vector<long>& v) { return Json(v); }
Json list_json(const std::vector<unsigned>& v) { return Json(v); }

unsigned one_unsigned(const Params& p, const std::string& key) {
  const long v = p.one_long(key);
  if (v < 0) throw UsageError("--" + key + " needs a nonnegative integer");
  return static_cast<unsigned>(v);
}

recip::PsiSource psi_source(const Params& p) {
  const std::string s = p.get("psi-source", "polynomial");
  if (s == "polynomial") return recip::PsiSource::polynomial;
  if (s == "mellin") return recip::PsiSource::mellin;
  throw UsageError("--psi-source must be polynomial or mellin");
}

recip::Orientation orientation(const Params& p) {
  const std::string s = p.get("orientation", "downward");
  if (s == "downward") return recip::Orientation::downward;
  if (s == "upward") return recip::Orientation::upward;
  throw UsageError("--orientation must be downward or upward");
}

// compute

std::vector<Command> compute_commands() {
  std::vector<Command> out;

  out.push_back({"bernoulli", "Bernoulli number B_n", {{"n", "index"}, {"convention", "standard or zeroed (B1 = 0)"}},
                 [](const Params& p, const Settings&) {
                   const std::string conv = p.get("convention", "standard");
                   if (conv != "standard" && conv != "zeroed") throw UsageError("--convention must be standard or zeroed");
                   const unsigned n = one_unsigned(p, "n");
                   const auto c = conv == "zeroed" ? exact::BernoulliConvention::zeroed : exact::BernoulliConvention::standard;
                   return Computed{Json{{"n", n}, {"convention", conv}}, ExactScaled(exact::bernoulli_number(n, c))};
                 }});

  out.push_back({"dedekind", "Dedekind sum s(h, k)", {{"h", "integer"}, {"k", "modulus"}},
                 [](const Params& p, const Settings&) {
                   const long h = p.one_long("h"), k = p.one_long("k");
                   return Computed{Json{{"h", h}, {"k", k}}, ExactScaled(exact::dedekind_sum(h, k))};
                 }});

  out.push_back({"apostol", "Dedekind-Apostol sum s_n(h, k)", {{"n", "odd order > 1"}, {"h", "integer"}, {"k", "modulus"}},
                 [](const Params& p, const Settings&) {
                   const unsigned n = one_unsigned(p, "n");
                   const long h = p.one_long("h"), k = p.one_long("k");
                   return Computed{Json{{"n", n}, {"h", h}, {"k", k}}, ExactScaled(exact::apostol_sum(n, h, k))};
                 }});

  out.push_back({"bc-sum", "c_a(h/k)", {{"a", "complex"}, {"h", "integer"}, {"k", "modulus"}},
                 [](const Params& p, const Settings& s) {
                   const cplx a = p.one_complex("a");
                   const long h = p.one_long("h"), k = p.one_long("k");
                   return Computed{Json{{"a", show(a)}, {"h", h}, {"k", k}}, sums::bc_sum(a, h, k, s.cfg)};
                 }});

  out.push_back({"bc-sum-general", "generalized sum with matrix (a; k0 k1..kn; m0 m1..mn)",
                 {{"a", "complex"}, {"k0", "modulus"}, {"k", "k1..kn"}, {"m", "m0..mn"}},
                 [](const Params& p, const Settings& s) {
                   const cplx a = p.one_complex("a");
                   const long k0 = p.one_long("k0");
                   const auto ks = p.longs("k");
                   const auto ms = p.unsigneds("m");
                   const auto spec = sums::BCSumSpec::make(a, k0, ks, ms);
                   return Computed{Json{{"a", show(a)}, {"k0", k0}, {"k", list_json(ks)}, {"m", list_json(ms)}},
                                   sums::bc_sum_general(spec, s.cfg)};
                 }});

  out.push_back({"psi-poly", "period polynomial psi_{-n}", {{"n", "odd order > 1"}},
                 [](const Params& p, const Settings&) {
                   const unsigned n = one_unsigned(p, "n");
                   return Computed{Json{{"n", n}}, exact::psi_polynomial(n)};
                 }});

  out.push_back({"g-poly", "polynomial g_{-n}", {{"n", "odd order > 1"}},
                 [](const Params& p, const Settings&) {
                   const unsigned n = one_unsigned(p, "n");
                   return Computed{Json{{"n", n}}, exact::g_polynomial(n)};
                 }});

  out.push_back({"line-integral", "vertical-line integral of cot(pi h z) cot(pi k z) z^-a, or of a cot-derivative product",
                 {{"a", "exponent, Re a > 1"},
                  {"h", "first modulus"},
                  {"k", "second modulus"},
                  {"ks", "moduli k1..kd (instead of h, k)"},
                  {"ms", "derivative orders, one per modulus"},
                  {"orientation", "downward or upward"}},
                 [](const Params& p, const Settings& s) {
                   const cplx a = p.one_complex("a");
                   const auto orient = orientation(p);
                   if (p.has("ks")) {
                     const auto ks = p.longs("ks");
                     const auto ms = p.has("ms") ? p.unsigneds("ms") : std::vector<unsigned>(ks.size(), 0);
                     return Computed{Json{{"a", show(a)}, {"ks", list_json(ks)}, {"ms", list_json(ms)},
                                          {"orientation", p.get("orientation", "downward")}},
                                     recip::line_integral_cot_product(ks, ms, a, s.quad, orient)};
                   }
                   const long h = p.one_long("h"), k = p.one_long("k");
                   return Computed{Json{{"a", show(a)}, {"h", h}, {"k", k}, {"orientation", p.get("orientation", "downward")}},
                                   recip::line_integral_cotcot(a, h, k, s.quad, orient)};
                 }});

  out.push_back({"estermann", "Estermann zeta E(s, p/q, a)",
                 {{"s", "complex"},
                  {"a", "complex"},
                  {"p", "numerator (default 1)"},
                  {"q", "denominator"},
                  {"method", "series, hurwitz or closed-form"},
                  {"route", "primary or dual (closed-form only)"}},
                 [](const Params& p, const Settings& s) {
                   const cplx sv = p.one_complex("s"), a = p.one_complex("a");
                   const auto x = RationalArg::make(p.one_long("p", 1), p.one_long("q"));
                   const std::string method = p.get("method", "hurwitz");
                   Json params{{"s", show(sv)}, {"a", show(a)}, {"x", show(x)}, {"method", method}};
                   const estermann::EstermannPoint pt{sv, x, a};
                   if (method == "series") return Computed{params, estermann::estermann_series(pt, s.cfg)};
                   if (method == "hurwitz") return Computed{params, estermann::estermann_hurwitz(pt, s.cfg)};
                   if (method != "closed-form") throw UsageError("--method must be series, hurwitz or closed-form");
                   // E(−k, x, a'−k) with k = −s and a' = a − s, both nonnegative integers.
                   const cplx shifted = a - sv;
                   const bool ints = sv.imag() == 0 && shifted.imag() == 0 && sv.real() == std::round(sv.real()) &&
                                     shifted.real() == std::round(shifted.real());
                   if (!ints || sv.real() > 0 || shifted.real() < 0) {
                     throw DomainError("closed form needs s = -k and a = a' - k with k, a' nonnegative integers");
                   }
                   const std::string route = p.get("route", "primary");
                   if (route != "primary" && route != "dual") throw UsageError("--route must be primary or dual");
                   params["route"] = route;
                   return Computed{params, estermann::estermann_nonpositive(
                                               static_cast<unsigned>(-sv.real()), x, static_cast<unsigned>(shifted.real()),
                                               route == "dual" ? estermann::Route::dual : estermann::Route::primary, s.cfg)};
                 }});

  out.push_back({"cotangent-sum-C", "C(a, k, p/q)", {{"a", "nonnegative integer"}, {"k", "nonnegative integer"},
                                                     {"p", "numerator (default 1)"}, {"q", "denominator"}},
                 [](const Params& p, const Settings& s) {
                   const unsigned a = one_unsigned(p, "a"), k = one_unsigned(p, "k");
                   const auto x = RationalArg::make(p.one_long("p", 1), p.one_long("q"));
                   return Computed{Json{{"a", a}, {"k", k}, {"x", show(x)}}, sums::cotangent_sum_C(a, k, x, s.cfg)};
                 }});
  return out;
}

// verify

const std::pair<std::string, std::string> kHk{"hk-max", "all coprime pairs with h, k up to this bound"};
const std::pair<std::string, std::string> kPairs{"hk", "explicit pairs h:k,h:k,..."};
const std::pair<std::string, std::string> kH{"h", "list of h"};
const std::pair<std::string, std::string> kK{"k", "list of k"};
const std::pair<std::string, std::string> kP{"p", "list of numerators (default 1)"};
const std::pair<std::string, std::string> kQ{"q", "list of denominators"};

std::vector<Command> verify_commands() {
  std::vector<Command> out;
  auto add = [&](std::string name, std::string help, std::vector<std::pair<std::string, std::string>> opts,
                 std::function<std::vector<Task>(const Params&, const Settings&)> f) {
    Command c;
    c.name = std::move(name);
    c.help = std::move(help);
    c.options = std::move(opts);
    c.verify = std::move(f);
    out.push_back(std::move(c));
  };

  add("thm11", "period-function reciprocity for c_a", {{"a", "list of a (default -3)"}, kH, kK, kHk, kPairs,
                                                         {"psi-source", "polynomial or mellin"}},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto src = psi_source(p);
        for (cplx a : p.complexes("a", "-3")) {
          for (auto [h, k] : p.hk_pairs()) {
            tasks.push_back([=] {
              return Report::numeric("thm11", Json{{"a", show(a)}, {"h", h}, {"k", k}, {"psi_source", p.get("psi-source", "polynomial")}},
                                     recip::verify_thm11(a, h, k, src, s.quad, s.cfg));
            });
          }
        }
        return tasks;
      });

  add("thm12", "two-term reciprocity with the cot-cot line integral",
      {{"a", "list of a, Re a > 1"}, kH, kK, kHk, kPairs, {"orientation", "downward or upward"}},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto orient = orientation(p);
        for (cplx a : p.complexes("a")) {
          for (auto [h, k] : p.hk_pairs()) {
            tasks.push_back([=] {
              return Report::numeric("thm12", Json{{"a", show(a)}, {"h", h}, {"k", k}, {"orientation", p.get("orientation", "downward")}},
                                     recip::verify_thm12(a, h, k, s.quad, orient, s.cfg));
            });
          }
        }
        return tasks;
      });

  add("thm13", "exact odd-n reciprocity", {{"n", "list of odd n > 1"}, kH, kK, kHk, kPairs},
      [](const Params& p, const Settings&) {
        std::vector<Task> tasks;
        for (unsigned n : p.unsigneds("n")) {
          for (auto [h, k] : p.hk_pairs()) {
            tasks.push_back([=] {
              const int e = 1 - static_cast<int>(n);
              const ExactScaled lhs = ExactScaled(Rational(h).pow(e)) * exact::exact_c_minus_n(n, h, k) +
                                      ExactScaled(Rational(k).pow(e)) * exact::exact_c_minus_n(n, k, h);
              return Report::exact_check("thm13", Json{{"n", n}, {"h", h}, {"k", k}}, lhs, exact::thm13_rhs(n, h, k));
            });
          }
        }
        return tasks;
      });

  add("thm14-cross", "g_{-n} polynomial against the Mellin route", {{"n", "list of odd n > 1"}, {"z", "list of z (default 1)"}},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (unsigned n : p.unsigneds("n")) {
          for (cplx z : p.complexes("z", "1")) {
            tasks.push_back([=] {
              return Report::numeric("thm14-cross", Json{{"n", n}, {"z", show(z)}},
                                     recip::verify_g_polynomial(n, z, s.quad, s.cfg));
            });
          }
        }
        return tasks;
      });

  auto vec_params = [](const Params& p) { return std::pair{p.longs("ks"), p.unsigneds("ms")}; };

  add("thm31", "higher reciprocity with the line integral",
      {{"a", "list of a, Re a > 1"}, {"ks", "moduli k1..kd"}, {"ms", "orders m0..md"}},
      [vec_params](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto [ks, ms] = vec_params(p);
        for (cplx a : p.complexes("a")) {
          tasks.push_back([=] {
            return Report::numeric("thm31", Json{{"a", show(a)}, {"ks", list_json(ks)}, {"ms", list_json(ms)}},
                                   recip::verify_thm31(a, ks, ms, s.quad, s.cfg));
          });
        }
        return tasks;
      });

  add("thm32", "higher reciprocity at integer a", {{"n", "list of n > 1"}, {"ks", "moduli k1..kd"}, {"ms", "orders m0..md"}},
      [vec_params](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto [ks, ms] = vec_params(p);
        for (long n : p.longs("n")) {
          tasks.push_back([=] {
            return Report::numeric("thm32", Json{{"n", n}, {"ks", list_json(ks)}, {"ms", list_json(ms)}},
                                   recip::verify_thm32(n, ks, ms, s.cfg));
          });
        }
        return tasks;
      });

  add("cor23", "cot-cot line integral against its closed form", {{"n", "list of odd n > 1"}, kH, kK, kHk, kPairs},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (unsigned n : p.unsigneds("n")) {
          for (auto [h, k] : p.hk_pairs()) {
            tasks.push_back([=] {
              return Report::numeric("cor23", Json{{"n", n}, {"h", h}, {"k", k}}, recip::verify_cor23(n, h, k, s.quad));
            });
          }
        }
        return tasks;
      });

  add("cor33", "higher line integral against its closed form", {{"n", "list of n >= 1"}, {"ks", "moduli k1..kd"}, {"ms", "orders m0..md"}},
      [vec_params](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto [ks, ms] = vec_params(p);
        for (long n : p.longs("n")) {
          tasks.push_back([=] {
            return Report::numeric("cor33", Json{{"n", n}, {"ks", list_json(ks)}, {"ms", list_json(ms)}},
                                   recip::verify_cor33(n, ks, ms, s.quad));
          });
        }
        return tasks;
      });

  add("prop43", "both displays for E(-s, x, a-s) against the Hurwitz double sum",
      {{"s", "list of nonnegative integers"}, {"a", "list of nonnegative integers"}, kP, kQ},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (cplx sv : p.complexes("s")) {
          for (cplx a : p.complexes("a")) {
            for (const RationalArg& x : p.rational_args()) {
              tasks.push_back([=] {
                const auto rc = estermann::verify_prop43(sv, x, a, s.cfg);
                Report r = Report::numeric("prop43", Json{{"s", show(sv)}, {"a", show(a)}, {"x", show(x)}}, rc.oracle);
                r.routes = rc.routes;
                return r;
              });
            }
          }
        }
        return tasks;
      });

  add("thm44", "closed forms for E(-k, x, a-k) against the Hurwitz double sum and each other",
      {{"k", "list of nonnegative integers"}, {"a", "list of nonnegative integers"}, kP, kQ},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (unsigned k : p.unsigneds("k")) {
          for (unsigned a : p.unsigneds("a")) {
            for (const RationalArg& x : p.rational_args()) {
              tasks.push_back([=] {
                const auto rc = estermann::verify_thm44(k, x, a, s.cfg);
                Report r = Report::numeric("thm44", Json{{"k", k}, {"a", a}, {"x", show(x)}}, rc.oracle);
                r.routes = rc.routes;
                return r;
              });
            }
          }
        }
        return tasks;
      });

  add("cor45", "C(a,k,x) - C(k,a,x) against its predicted value",
      {{"a", "list of nonnegative integers"}, {"k", "list of nonnegative integers"}, kP, kQ},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (unsigned a : p.unsigneds("a")) {
          for (unsigned k : p.unsigneds("k")) {
            for (const RationalArg& x : p.rational_args()) {
              tasks.push_back([=] {
                return Report::numeric("cor45", Json{{"a", a}, {"k", k}, {"x", show(x)}},
                                       estermann::verify_cor45(a, k, x, s.cfg));
              });
            }
          }
        }
        return tasks;
      });

  add("lemma41", "Apostol-Bernoulli values at z = 0 against cotangent derivatives", {{"k", "list of k >= 1"}, kP, kQ},
      [](const Params& p, const Settings&) {
        std::vector<Task> tasks;
        for (unsigned k : p.unsigneds("k")) {
          for (const RationalArg& x : p.rational_args()) {
            tasks.push_back([=] {
              return Report::numeric("lemma41", Json{{"k", k}, {"x", show(x)}}, estermann::verify_lemma41(k, x));
            });
          }
        }
        return tasks;
      });

  add("lemma42", "twisted Hurwitz sum against the Lerch transcendent",
      {{"s", "list of s, Re s > 1"}, {"z", "list of z, Re z > 0"}, {"n", "list of integers"}, kP, kQ},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        for (cplx sv : p.complexes("s")) {
          for (cplx z : p.complexes("z")) {
            for (long n : p.longs("n", "1")) {
              for (const RationalArg& x : p.rational_args()) {
                tasks.push_back([=] {
                  return Report::numeric("lemma42", Json{{"s", show(sv)}, {"z", show(z)}, {"n", n}, {"x", show(x)}},
                                         estermann::verify_lemma42(sv, z, n, x, s.cfg));
                });
              }
            }
          }
        }
        return tasks;
      });

  add("eisenstein-period", "period function against the Eisenstein q-series",
      {{"a", "list of a (default -3)"}, {"z", "list of z, Im z > 0"}, {"psi-source", "polynomial or mellin"}},
      [](const Params& p, const Settings& s) {
        std::vector<Task> tasks;
        const auto src = psi_source(p);
        for (cplx a : p.complexes("a", "-3")) {
          for (cplx z : p.complexes("z")) {
            tasks.push_back([=] {
              return Report::numeric("eisenstein-period", Json{{"a", show(a)}, {"z", show(z)}, {"psi_source", p.get("psi-source", "polynomial")}},
                                     recip::verify_eisenstein_period(a, z, src, s.quad, s.cfg));
            });
          }
        }
        return tasks;
      });

  add("dedekind-recip", "exact Dedekind reciprocity", {kH, kK, kHk, kPairs}, [](const Params& p, const Settings&) {
    std::vector<Task> tasks;
    for (auto [h, k] : p.hk_pairs()) {
      tasks.push_back([=] {
        const ExactScaled lhs(exact::dedekind_sum(h, k) + exact::dedekind_sum(k, h));
        return Report::exact_check("dedekind-recip", Json{{"h", h}, {"k", k}}, lhs,
                                   ExactScaled(exact::dedekind_reciprocity_rhs(h, k)));
      });
    }
    return tasks;
  });
  return out;
}

// table

const std::vector<std::string> kCoeffColumns{"num", "den", "pi_pow", "i_pow"};

Json coeff_row(Json row, const ExactScaled& c) {
  const Json coeff = to_json(c);
  for (const auto& [key, value] : coeff.items()) row[key] = value;
  return row;
}

std::vector<Command> table_commands() {
  std::vector<Command> out;
  auto poly_table = [](std::string name, std::function<exact::PeriodPolynomial(unsigned)> make) {
    Command c;
    c.name = name;
    c.help = "coefficients of the " + name + " polynomials";
    c.options = {{"n", "list of odd n > 1"}};
    c.table = [make](const Params& p, const Settings&) {
      Table t{{"n", "power", "zeta_weight", "num", "den", "pi_pow", "i_pow"}, {}};
      for (unsigned n : p.unsigneds("n")) {
        const exact::PeriodPolynomial poly = make(n);
        for (const auto& [power, c] : poly.coefficients) {
          if (c.is_zero()) continue;
          t.rows.push_back(coeff_row(Json{{"n", n}, {"power", power}, {"zeta_weight", poly.zeta_weight}}, c));
        }
      }
      return t;
    };
    return c;
  };
  out.push_back(poly_table("psi", exact::psi_polynomial));
  out.push_back(poly_table("g", exact::g_polynomial));

  Command thm13;
  thm13.name = "thm13";
  thm13.help = "right-hand side of the exact odd-n reciprocity";
  thm13.options = {{"n", "list of odd n > 1"}, kH, kK, kHk, kPairs};
  thm13.table = [](const Params& p, const Settings&) {
    Table t{{"n", "h", "k", "num", "den", "pi_pow", "i_pow"}, {}};
    const auto ns = p.unsigneds("n");
    const auto pairs = ns.empty() ? std::vector<std::pair<long, long>>{} : p.hk_pairs();
    std::vector<std::pair<unsigned, std::pair<long, long>>> items;
    for (unsigned n : ns) {
      for (const auto& hk : pairs) items.emplace_back(n, hk);
    }
    t.rows = parallel_map(items.size(), [&](std::size_t i) {
      const auto [n, hk] = items[i];
      return coeff_row(Json{{"n", n}, {"h", hk.first}, {"k", hk.second}}, exact::thm13_rhs(n, hk.first, hk.second));
    });
    return t;
  };
  out.push_back(std::move(thm13));
  return out;
}

// rendering

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render(const Table& t, const Settings& s) {
  std::ostringstream os;
  if (s.format == "json") {
    Json arr = Json::array();
    for (const Json& row : t.rows) arr.push_back(row);
    os << arr.dump() << '\n';
    return os.str();
  }
  const std::string sep = s.format == "csv" ? "," : " ";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? sep : "") << t.columns[i];
  os << '\n';
  for (const Json& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? sep : "") << cell(row.at(t.columns[i]));
    os << '\n';
  }
  return os.str();
}

std::string render(const std::string& quantity, const Computed& c, const Settings& s) {
  const int d = s.digits();
  std::ostringstream os;
  if (s.format == "json") {
    Json value = std::visit([&](const auto& v) -> Json {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ComplexVal>) {
        return to_json(v, d);
      } else {
        return to_json(v);
      }
    }, c.value);
    os << Json{{"quantity", quantity}, {"params", c.params}, {"value", value}, {"config", s.echo()}}.dump() << '\n';
    return os.str();
  }
  const bool csv = s.format == "csv";
  const std::string params = flat_params(c.params);
  std::visit([&](const auto& v) {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, ComplexVal>) {
      if (csv) {
        os << "quantity,params,re,im,abs_err\n"
           << quantity << ",\"" << params << "\"," << decimal(v.re(), d) << ',' << decimal(v.im(), d) << ','
           << decimal(v.abs_err, d) << '\n';
      } else {
        os << quantity << ' ' << params << " = " << decimal(v.re(), d) << (v.im() < 0 ? " - " : " + ")
           << decimal(std::abs(v.im()), d) << "i  (abs_err " << decimal(v.abs_err, d) << ")\n";
      }
    } else if constexpr (std::is_same_v<T, ExactScaled>) {
      if (csv) {
        os << "quantity,params,num,den,pi_pow,i_pow\n"
           << quantity << ",\"" << params << "\"," << v.coeff().numerator().get_str() << ','
           << v.coeff().denominator().get_str() << ',' << v.pi_power() << ',' << v.i_power() << '\n';
      } else {
        os << quantity << ' ' << params << " = " << v.to_string() << '\n';
      }
    } else {
      if (csv) os << "quantity,params,power,zeta_weight,num,den,pi_pow,i_pow\n";
      else os << quantity << ' ' << params << (v.zeta_weight ? "  (times 1/zeta(" + std::to_string(v.zeta_weight) + "))" : "") << '\n';
      for (const auto& [power, coeff] : v.coefficients) {
        if (coeff.is_zero()) continue;
        if (csv) {
          os << quantity << ",\"" << params << "\"," << power << ',' << v.zeta_weight << ','
             << coeff.coeff().numerator().get_str() << ',' << coeff.coeff().denominator().get_str() << ','
             << coeff.pi_power() << ',' << coeff.i_power() << '\n';
        } else {
          os << "  z^" << power << ": " << coeff.to_string() << '\n';
        }
      }
    }
  }, c.value);
  return os.str();
}

std::string render(const std::vector<Report>& reports, const Settings& s) {
  const int d = s.digits();
  std::ostringstream os;
  if (s.format == "csv") os << csv_header() << '\n';
  std::size_t failed = 0;
  for (const Report& r : reports) {
    if (!r.pass()) ++failed;
    if (s.format == "json") os << to_json(r, d).dump() << '\n';
    else if (s.format == "csv") os << to_csv(r, d) << '\n';
    else os << to_text(r, d) << '\n';
  }
  if (s.format == "text") os << reports.size() << " checks, " << failed << " failed\n";
  return os.str();
}

struct Leaf {
  CLI::App* app = nullptr;
  const Command* command = nullptr;
  std::map<std::string, std::string> storage;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bettin-Conrey sums: exact values, reciprocity checks and tables", "bcsum"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);

  int digits = 16;
  std::optional<double> target, height, epsilon;
  std::string rule = "gauss-legendre", format = "json", out_path;
  bool force = false;
  app.add_option("--precision-digits", digits, "working digits (15 or 16)");
  app.add_option("--target-err", target, "absolute error target for quadrature and series");
  app.add_option("--quad-height", height, "truncation height of vertical-line integrals (0 picks it)");
  app.add_option("--quad-rule", rule, "gauss-legendre or adaptive-simpson");
  app.add_option("--epsilon", epsilon, "abscissa of the vertical line (0 picks it)");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write to this file instead of stdout");
  app.add_flag("--force", force, "overwrite an existing --out file");

  const std::vector<Command> computes = compute_commands(), verifies = verify_commands(), tables = table_commands();
  std::list<Leaf> leaves;
  auto group = [&](const std::string& name, const std::string& help, const std::vector<Command>& cmds) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    for (const Command& c : cmds) {
      Leaf& leaf = leaves.emplace_back();
      leaf.command = &c;
      leaf.app = g->add_subcommand(c.name, c.help);
      for (const auto& [key, help_text] : c.options) leaf.app->add_option("--" + key, leaf.storage[key], help_text);
    }
    return g;
  };
  CLI::App* compute = group("compute", "compute one quantity", computes);
  CLI::App* verify = group("verify", "run a verification sweep", verifies);
  CLI::App* table = group("table", "write a coefficient table", tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Settings s;
    s.format = format;
    s.cfg.working_digits = digits;
    if (target) {
      s.quad.target_abs_err = *target;
      s.cfg.target_abs_err = std::max(*target, std::pow(10.0, 2 - digits));
    }
    if (height) s.quad.truncation_height = *height;
    if (epsilon) s.quad.epsilon = *epsilon;
    if (rule == "gauss-legendre") s.quad.rule = recip::PanelRule::gauss_legendre;
    else if (rule == "adaptive-simpson") s.quad.rule = recip::PanelRule::adaptive_simpson;
    else throw UsageError("--quad-rule must be gauss-legendre or adaptive-simpson");
    s.cfg.validate();
    s.quad.validate();

    if (!out_path.empty() && std::filesystem::exists(out_path) && !force) {
      throw UsageError(out_path + " exists; pass --force to overwrite");
    }

    const Leaf* chosen = nullptr;
    for (const Leaf& leaf : leaves) {
      if (leaf.app->parsed()) chosen = &leaf;
    }
    if (chosen == nullptr) throw UsageError("no command given");
    Params params;
    for (const auto& [key, value] : chosen->storage) {
      if (chosen->app->get_option("--" + key)->count() > 0) params.raw[key] = value;
    }

    std::string text;
    int code = 0;
    if (compute->parsed()) {
      text = render(chosen->command->name, chosen->command->compute(params, s), s);
    } else if (verify->parsed()) {
      const auto tasks = chosen->command->verify(params, s);
      const auto reports = parallel_map(tasks.size(), [&](std::size_t i) { return tasks[i](); });
      for (const Report& r : reports) {
        if (!r.pass()) code = 1;
      }
      text = render(reports, s);
    } else if (table->parsed()) {
      text = render(chosen->command->table(params, s), s);
    }

    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
      if (!f) throw UsageError("cannot write " + out_path);
      f << text;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace bcsum::cli
