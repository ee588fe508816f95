#pragma once

#include <cstdint>
#include <stop_token>
#include <string>
#include <vector>

#include "wordmap/conjugation.hpp"
#include "wordmap/mat2.hpp"
#include "wordmap/upoly.hpp"
#include "wordmap/words.hpp"

namespace wordmap {

/// The 2x2 recursion matrices over Coeff[t]:
///   X = ((l, (l - 1/l) t), (0, 1/l)),  Y = ((m, 0), (m - 1/m, 1/m)).
/// Both have determinant 1.
template <class Coeff>
struct GeneratorMatrices {
  Mat2<UPoly<Coeff>> x;
  Mat2<UPoly<Coeff>> y;

  /// Upper-left entries of the diagonal blocks; `l_inv`, `m_inv` are the inverses.
  static GeneratorMatrices build(const Coeff& l, const Coeff& l_inv, const Coeff& m,
                                 const Coeff& m_inv) {
    using P = UPoly<Coeff>;
    const P t = P::t();
    GeneratorMatrices g;
    g.x = {P(l), P(Coeff(l - l_inv)) * t, P(), P(l_inv)};
    g.y = {P(m), P(), P(Coeff(m - m_inv)), P(m_inv)};
    return g;
  }
};

using SymbolicGenerators = GeneratorMatrices<LaurentPoly>;
using RationalGenerators = GeneratorMatrices<Rat>;

/// X, Y over R0[t] with symbolic lambda, mu.
SymbolicGenerators symbolic_generators();
/// Lower-right entries of the diagonal blocks: the diagonal parts are inverted
/// but the bar factors keep their sign.
SymbolicGenerators sigma_partner_generators();
/// X, Y with lambda = lambda0, mu = mu0. Throws Error(ZeroParameter).
RationalGenerators rational_generators(const Rat& lambda0, const Rat& mu0);

/// prod_{i=n..1} Y^{b_i} X^{a_i}: applying it to (1, 0)^T yields (alpha, beta).
template <class Coeff>
Mat2<UPoly<Coeff>> recursion_product(const PairList& pairs, const GeneratorMatrices<Coeff>& gens,
                                     std::stop_token stop = {}) {
  auto product = Mat2<UPoly<Coeff>>::identity();
  for (const auto& [a, b] : pairs) {
    if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "recursion cancelled");
    if (a != 0) product = pow_unimodular(gens.x, a) * product;
    if (b != 0) product = pow_unimodular(gens.y, b) * product;
  }
  return product;
}

/// The associated polynomials (alpha, beta): the wiggle value at g is
/// ((gamma, beta p), (-beta^sigma q, gamma^sigma)) with gamma = alpha + beta t,
/// evaluated at t = det xi_g where xi_g = ((t, p), (q, -t)).
template <class Poly>
struct BasicAssocPolys {
  Poly alpha;
  Poly beta;
  friend bool operator==(const BasicAssocPolys&, const BasicAssocPolys&) = default;
};

using AssocPolys = BasicAssocPolys<TPoly>;
using QAssocPolys = BasicAssocPolys<QPoly>;

AssocPolys assoc_polys(const PairList& pairs, std::stop_token stop = {});
AssocPolys assoc_polys(const Word& w, std::stop_token stop = {});
AssocPolys assoc_polys(const CyclicForm& cf, std::stop_token stop = {});
/// Same recursion run directly over Q at (lambda0, mu0).
QAssocPolys assoc_polys_at(const PairList& pairs, const Rat& lambda0, const Rat& mu0);

/// One recursion step: the polynomials of w * x^a y^b from those of w.
AssocPolys recursion_step(const AssocPolys& ap, std::int64_t a, std::int64_t b);

template <class Poly>
Poly gamma_of(const BasicAssocPolys<Poly>& ap) {
  return ap.alpha + ap.beta * Poly::t();
}

/// gamma + gamma^sigma: the trace of the wiggle value as a polynomial in t.
TPoly trace_poly(const AssocPolys& ap);

/// t(t + 1)
template <class Poly>
Poly t_times_t_plus_one() {
  return Poly::t() * (Poly::t() + Poly(1));
}

struct WiggleValue {
  QMat matrix;
  Rat t_value;
};

/// Assembles the wiggle value from the normal form.
/// Throws Error(ZeroParameter) or Error(NotUnimodular).
WiggleValue eval_normal_form(const AssocPolys& ap, const Rat& lambda0, const Rat& mu0,
                             const QMat& g);

/// Brute force w(x, g^-1 y g) with x = diag(lambda0, 1/lambda0), y = diag(mu0, 1/mu0).
QMat eval_direct(const Word& w, const Rat& lambda0, const Rat& mu0, const QMat& g);

struct IdentityReport {
  bool determinant_identity = false;  // gamma gamma^s - beta beta^s t(t+1) = 1
  bool sigma_symmetry = false;        // sigma-partner recursion gives (alpha^s, -beta^s)
  bool unimodular_recursion = false;  // det of the recursion product is 1
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

IdentityReport verify_identities(const PairList& pairs, std::stop_token stop = {});
IdentityReport verify_identities(const Word& w, std::stop_token stop = {});

}  // namespace wordmap
