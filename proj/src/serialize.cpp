#include "wordmap/serialize.hpp"

namespace wordmap {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::Syntax, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::int64_t int_from_json(const Json& j) {
  if (!j.is_number_integer()) malformed("expected an integer");
  return j.get<std::int64_t>();
}

bool bool_from_json(const Json& j) {
  if (!j.is_boolean()) malformed("expected a boolean");
  return j.get<bool>();
}

template <class Coeff, class F>
UPoly<Coeff> upoly_from_json(const Json& j, F&& coeff) {
  if (!j.is_array()) malformed("expected a coefficient array");
  std::vector<Coeff> c;
  for (const auto& e : j) c.push_back(coeff(e));
  return UPoly<Coeff>(std::move(c));
}

template <class Coeff>
Json upoly_to_json(const UPoly<Coeff>& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(const Rat& v) { return format_rat(v); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) malformed("expected a rational string");
  return parse_rat(j.get<std::string>());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& term : p.terms()) {
    out.push_back({{"el", term.exp.lambda}, {"em", term.exp.mu}, {"c", format_rat(term.coeff)}});
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a term array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    terms.push_back({{int_from_json(field(t, "el")), int_from_json(field(t, "em"))},
                     rat_from_json(field(t, "c"))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const TPoly& p) { return upoly_to_json(p); }
TPoly tpoly_from_json(const Json& j) { return upoly_from_json<LaurentPoly>(j, laurent_from_json); }
Json to_json(const QPoly& p) { return upoly_to_json(p); }
QPoly qpoly_from_json(const Json& j) { return upoly_from_json<Rat>(j, rat_from_json); }

Json to_json(const AssocPolys& ap) { return {{"alpha", to_json(ap.alpha)}, {"beta", to_json(ap.beta)}}; }

AssocPolys assoc_from_json(const Json& j) {
  return {tpoly_from_json(field(j, "alpha")), tpoly_from_json(field(j, "beta"))};
}

Json to_json(const Certificate& cert) {
  const auto& p = cert.params;
  Json out;
  out["params"] = {p.k, p.l, p.m, p.n};
  out["status"] = to_string(cert.status);
  out["lambda"] = cert.lambda ? to_json(*cert.lambda) : Json(nullptr);
  out["mu"] = cert.mu ? to_json(*cert.mu) : Json(nullptr);
  out["h"] = cert.h ? to_json(*cert.h) : Json(nullptr);
  out["checks"] = {{"divides_trace_minus_2", cert.checks.divides_trace_minus_2},
                   {"coprime_t_t1", cert.checks.coprime_t_t1},
                   {"coprime_gamma_minus_1", cert.checks.coprime_gamma_minus_1}};
  out["attempts"] = cert.attempts;
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& params = field(j, "params");
  if (!params.is_array() || params.size() != 4) malformed("\"params\" must hold four integers");
  cert.params = {int_from_json(params[0]), int_from_json(params[1]), int_from_json(params[2]),
                 int_from_json(params[3])};
  const Json& status = field(j, "status");
  if (!status.is_string()) malformed("\"status\" must be a string");
  const auto s = parse_cert_status(status.get<std::string>());
  if (!s) malformed("unknown status " + status.get<std::string>());
  cert.status = *s;
  if (j.contains("lambda") && !j["lambda"].is_null()) cert.lambda = rat_from_json(j["lambda"]);
  if (j.contains("mu") && !j["mu"].is_null()) cert.mu = rat_from_json(j["mu"]);
  if (j.contains("h") && !j["h"].is_null()) cert.h = qpoly_from_json(j["h"]);
  const Json& checks = field(j, "checks");
  cert.checks.divides_trace_minus_2 = bool_from_json(field(checks, "divides_trace_minus_2"));
  cert.checks.coprime_t_t1 = bool_from_json(field(checks, "coprime_t_t1"));
  cert.checks.coprime_gamma_minus_1 = bool_from_json(field(checks, "coprime_gamma_minus_1"));
  cert.attempts = static_cast<int>(int_from_json(field(j, "attempts")));
  return cert;
}

Json to_json(const GaussRat& z) { return {{"re", format_rat(z.re)}, {"im", format_rat(z.im)}}; }

Json to_json(const GMat& m) {
  return Json::array({Json::array({to_json(m.a11), to_json(m.a12)}),
                      Json::array({to_json(m.a21), to_json(m.a22)})});
}

Json to_json(const Witness& w) {
  const auto& p = w.word_params;
  Json out;
  out["word"] = {p.k, p.l, p.m, p.n};
  out["lambda"] = format_rat(w.lambda);
  out["mu"] = format_rat(w.mu);
  out["factor"] = to_json(w.factor);
  out["exact"] = w.exact;
  out["t0"] = w.exact ? to_json(w.t0.re) : to_json(w.t0);
  out["t0_decimal"] = format_gauss(w.t0, 30);
  out["g"] = to_json(w.g);
  out["u"] = to_json(w.u);
  out["residual"] = format_rat(w.residual);
  out["residual_decimal"] = format_gauss(GaussRat(w.residual), 6);
  if (w.modular) {
    const auto& mc = *w.modular;
    out["modular"] = {{"modulus", to_json(mc.modulus)},
                      {"trace_minus_2_mod", to_json(mc.trace_minus_2_mod)},
                      {"beta_product_inverse", to_json(mc.beta_product_inverse)},
                      {"coprime_t_t1", mc.coprime_t_t1},
                      {"invertible", mc.invertible},
                      {"valid", mc.valid()}};
  } else {
    out["modular"] = nullptr;
  }
  return out;
}

}  // namespace wordmap
