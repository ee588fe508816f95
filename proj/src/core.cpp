#include <sstream>

#include "wordmap/certify.hpp"

namespace wordmap {

namespace {

LaurentPoly power_minus_one(LaurentPoly base) { return base - LaurentPoly(1); }

// Divides every coefficient of p by the Laurent polynomial d.
TPoly divide_coefficients(const TPoly& p, const LaurentPoly& d) {
  return p.map([&](const LaurentPoly& c) { return divide_exact(c, d); });
}

}  // namespace

std::string to_string(const DCParams& p) {
  std::ostringstream os;
  os << '(' << p.k << ',' << p.l << ',' << p.m << ',' << p.n << ')';
  return os.str();
}

LaurentPoly prefactor_numerator(const DCParams& p) {
  return power_minus_one(LaurentPoly::lambda(2 * p.k)) * power_minus_one(LaurentPoly::mu(2 * p.l)) *
         power_minus_one(LaurentPoly::lambda(2 * p.m)) * power_minus_one(LaurentPoly::mu(2 * p.n));
}

LaurentPoly prefactor_denominator(const DCParams& p) {
  return LaurentPoly::monomial(1, 2 * (p.k + p.m), 2 * (p.l + p.n));
}

CorePolys core_polys(const DCParams& params, std::stop_token stop) {
  if (params.trivial()) throw Error(ErrorCode::TrivialWord, "word " + to_string(params) + " is trivial");
  CorePolys core;
  core.prefactor_num = prefactor_numerator(params);
  core.prefactor_den = prefactor_denominator(params);
  core.assoc = assoc_polys(params.cyclic_pairs(), std::move(stop));

  const TPoly tt1 = t_times_t_plus_one<TPoly>();
  const TPoly gamma = gamma_of(core.assoc);
  const TPoly trace = gamma + sigma(gamma);
  const LaurentPoly num_sq = core.prefactor_num * core.prefactor_num;
  const LaurentPoly den_sq = core.prefactor_den * core.prefactor_den;

  // (num/den)^2 -> multiply by den^2 then divide by num^2; num/den^2 likewise.
  auto peel = [&](const TPoly& p, const TPoly& tpow, const LaurentPoly& scale_num) {
    const TPoly q = exact_div(p, tpow);
    return divide_coefficients(q.map([&](const LaurentPoly& c) { return c * den_sq; }), scale_num);
  };
  core.tau = peel(trace - TPoly(2), tt1 * tt1, num_sq);
  core.gamma_inner = peel(gamma - TPoly(1), tt1, core.prefactor_num);
  core.alpha_core = peel(core.assoc.alpha - TPoly(1), tt1, core.prefactor_num);
  core.beta_core = peel(core.assoc.beta, tt1, core.prefactor_num);
  return core;
}

std::optional<SpecializedCore> specialized_core(const DCParams& params, const Rat& lambda0,
                                                const Rat& mu0) {
  const Rat num = prefactor_numerator(params).evaluate(lambda0, mu0);
  if (sgn(num) == 0) return std::nullopt;
  const Rat den = prefactor_denominator(params).evaluate(lambda0, mu0);
  const PairList pairs = params.cyclic_pairs();
  const QAssocPolys ap = assoc_polys_at(pairs, lambda0, mu0);
  const QAssocPolys ap_sigma = assoc_polys_at(pairs, Rat(1 / lambda0), Rat(1 / mu0));

  SpecializedCore s;
  s.gamma = gamma_of(ap);
  s.trace = s.gamma + gamma_of(ap_sigma);
  const QPoly tt1 = t_times_t_plus_one<QPoly>();
  const Rat tau_scale = den * den / (num * num);
  const Rat gamma_scale = den * den / num;
  s.tau = scale(exact_div(s.trace - QPoly(2), tt1 * tt1), tau_scale);
  s.gamma_inner = scale(exact_div(s.gamma - QPoly(1), tt1), gamma_scale);
  return s;
}

}  // namespace wordmap
