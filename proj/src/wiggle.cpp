#include "wordmap/wiggle.hpp"

namespace wordmap {

namespace {

void require_nonzero(const Rat& lambda0, const Rat& mu0) {
  if (sgn(lambda0) == 0 || sgn(mu0) == 0) {
    throw Error(ErrorCode::ZeroParameter, "lambda and mu must be nonzero");
  }
}

}  // namespace

SymbolicGenerators symbolic_generators() {
  return SymbolicGenerators::build(LaurentPoly::lambda(), LaurentPoly::lambda(-1),
                                   LaurentPoly::mu(), LaurentPoly::mu(-1));
}

SymbolicGenerators sigma_partner_generators() {
  using P = TPoly;
  SymbolicGenerators g;
  g.x = {P(LaurentPoly::lambda(-1)), P(LaurentPoly::lambda_bar(1)) * P::t(), P(),
         P(LaurentPoly::lambda())};
  g.y = {P(LaurentPoly::mu(-1)), P(), P(LaurentPoly::mu_bar(1)), P(LaurentPoly::mu())};
  return g;
}

RationalGenerators rational_generators(const Rat& lambda0, const Rat& mu0) {
  require_nonzero(lambda0, mu0);
  return RationalGenerators::build(lambda0, Rat(1 / lambda0), mu0, Rat(1 / mu0));
}

AssocPolys assoc_polys(const PairList& pairs, std::stop_token stop) {
  static const SymbolicGenerators gens = symbolic_generators();
  const auto p = recursion_product(pairs, gens, std::move(stop));
  return {p.a11, p.a21};
}

AssocPolys assoc_polys(const Word& w, std::stop_token stop) {
  return assoc_polys(to_pairs(w), std::move(stop));
}

AssocPolys assoc_polys(const CyclicForm& cf, std::stop_token stop) {
  if (std::holds_alternative<Trivial>(cf)) return {TPoly(1), TPoly()};
  if (const auto* gp = std::get_if<GeneratorPower>(&cf)) {
    return assoc_polys(Word::generator(gp->gen, gp->exponent), std::move(stop));
  }
  return assoc_polys(std::get<Reduced>(cf).pairs, std::move(stop));
}

QAssocPolys assoc_polys_at(const PairList& pairs, const Rat& lambda0, const Rat& mu0) {
  const auto p = recursion_product(pairs, rational_generators(lambda0, mu0));
  return {p.a11, p.a21};
}

AssocPolys recursion_step(const AssocPolys& ap, std::int64_t a, std::int64_t b) {
  static const SymbolicGenerators gens = symbolic_generators();
  const auto step = pow_unimodular(gens.y, b) * pow_unimodular(gens.x, a);
  return {step.a11 * ap.alpha + step.a12 * ap.beta, step.a21 * ap.alpha + step.a22 * ap.beta};
}

TPoly trace_poly(const AssocPolys& ap) {
  const TPoly gamma = gamma_of(ap);
  return gamma + sigma(gamma);
}

WiggleValue eval_normal_form(const AssocPolys& ap, const Rat& lambda0, const Rat& mu0,
                             const QMat& g) {
  require_nonzero(lambda0, mu0);
  const QMat xi = xi_of(g);
  const Rat t = xi.a11;
  const TPoly gamma = gamma_of(ap);
  auto at = [&](const TPoly& p) { return horner(specialize(p, lambda0, mu0), t); };
  WiggleValue v;
  v.t_value = t;
  v.matrix = {at(gamma), at(ap.beta) * xi.a12, -at(sigma(ap.beta)) * xi.a21, at(sigma(gamma))};
  return v;
}

QMat eval_direct(const Word& w, const Rat& lambda0, const Rat& mu0, const QMat& g) {
  require_nonzero(lambda0, mu0);
  require_unimodular(g);
  const QMat x = QMat::diagonal(lambda0, 1 / lambda0);
  const QMat yg = conjugate(QMat::diagonal(mu0, 1 / mu0), g);
  QMat result = QMat::identity();
  for (const auto& s : w.syllables()) {
    result = result * pow_unimodular(s.gen == Gen::X ? x : yg, s.exponent);
  }
  return result;
}

IdentityReport verify_identities(const PairList& pairs, std::stop_token stop) {
  static const SymbolicGenerators gens = symbolic_generators();
  static const SymbolicGenerators partner = sigma_partner_generators();
  IdentityReport report;

  const auto product = recursion_product(pairs, gens, stop);
  const AssocPolys ap{product.a11, product.a21};
  const TPoly gamma = gamma_of(ap);
  const TPoly lhs = gamma * sigma(gamma) - ap.beta * sigma(ap.beta) * t_times_t_plus_one<TPoly>();
  report.determinant_identity = lhs == TPoly(1);
  if (!report.determinant_identity) {
    report.failures.push_back("determinant identity: gamma*gamma^s - beta*beta^s*t(t+1) = " +
                              to_string(lhs));
  }

  const auto lower = recursion_product(pairs, partner, stop);
  report.sigma_symmetry = lower.a11 == sigma(ap.alpha) && lower.a21 == -sigma(ap.beta);
  if (!report.sigma_symmetry) {
    report.failures.push_back("sigma symmetry: partner recursion does not give (alpha^s, -beta^s)");
  }

  report.unimodular_recursion = det(product) == TPoly(1);
  if (!report.unimodular_recursion) {
    report.failures.push_back("recursion product determinant is not 1");
  }
  return report;
}

IdentityReport verify_identities(const Word& w, std::stop_token stop) {
  return verify_identities(to_pairs(w), std::move(stop));
}

}  // namespace wordmap
