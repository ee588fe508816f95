#include "wordmap/witness.hpp"

#include <algorithm>

namespace wordmap {

namespace {

Rat power_of_ten(int e) {
  Rat r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= 10;
  return e >= 0 ? r : Rat(1 / r);
}

// Upper bound on |z|.
Rat abs_upper(const GaussRat& z) { return sqrt_upper(z.norm()); }

GMat to_gmat(const QMat& m) { return m.map([](const Rat& v) { return GaussRat(v); }); }

}  // namespace

ModularCertificate modular_certificate(const QPoly& h1, const QAssocPolys& ap,
                                       const QAssocPolys& ap_sigma) {
  ModularCertificate mc;
  mc.modulus = h1;
  const QPoly trace = gamma_of(ap) + gamma_of(ap_sigma);
  mc.trace_minus_2_mod = divmod(trace - QPoly(2), h1).second;
  mc.coprime_t_t1 = gcd_q(h1, t_times_t_plus_one<QPoly>()).degree() == 0;
  if (auto inv = inverse_mod(ap.beta * ap_sigma.beta, h1)) {
    mc.invertible = true;
    mc.beta_product_inverse = std::move(*inv);
  }
  return mc;
}

Witness build_witness(const Certificate& cert, const WitnessOptions& options) {
  if (!cert.certified() || !cert.h || !cert.lambda || !cert.mu) {
    throw Error(ErrorCode::Precondition,
                std::string("witness needs a certified certificate, status is ") + to_string(cert.status));
  }
  Witness w;
  w.word_params = cert.word_params();
  w.lambda = *cert.lambda;
  w.mu = *cert.mu;
  const PairList pairs = w.word_params.cyclic_pairs();

  const auto rational = rational_roots(*cert.h);
  if (!rational.empty()) {
    const Rat t0 = rational.front();
    w.exact = true;
    w.factor = integer_primitive(QPoly::t() - QPoly(t0));
    w.t0 = t0;
    const QMat g = matrix_with_xi_det(t0);
    const QMat u = eval_normal_form(assoc_polys(pairs), w.lambda, w.mu, g).matrix;
    if (trace(u) != 2 || det(u) != 1 || u == QMat::identity()) {
      throw Error(ErrorCode::Precondition, "certificate root does not give a non-trivial unipotent");
    }
    w.g = to_gmat(g);
    w.u = to_gmat(u);
    w.residual = 0;
    return w;
  }

  // No rational root: h has no linear factor, so it is irreducible when deg h <= 3.
  w.exact = false;
  w.factor = *cert.h;
  const QAssocPolys ap = assoc_polys_at(pairs, w.lambda, w.mu);
  const QAssocPolys ap_sigma = assoc_polys_at(pairs, Rat(1 / w.lambda), Rat(1 / w.mu));
  w.modular = modular_certificate(w.factor, ap, ap_sigma);

  auto roots = approximate_roots(w.factor, options.precision_digits);
  std::stable_sort(roots.begin(), roots.end(), [](const GaussRat& a, const GaussRat& b) {
    return abs(a.im) < abs(b.im);
  });
  const GaussRat t = roots.front();
  w.t0 = t;
  w.g = {GaussRat(1), GaussRat(1), t, t + GaussRat(1)};
  // xi_g = ((bc, bd), (-ac, -bc)) with p = bd, q = -ac.
  const GaussRat p = w.g.a12 * w.g.a22;
  const GaussRat q = -(w.g.a11 * w.g.a21);
  const GaussRat tv = w.g.a12 * w.g.a21;
  w.u = {horner(gamma_of(ap), tv), horner(ap.beta, tv) * p, -(horner(ap_sigma.beta, tv) * q),
         horner(gamma_of(ap_sigma), tv)};
  w.residual = std::max(abs_upper(trace(w.u) - GaussRat(2)), abs_upper(det(w.u) - GaussRat(1)));
  const Rat tolerance = options.tolerance.value_or(power_of_ten(-(options.precision_digits - 10)));
  if (w.residual > tolerance) {
    throw Error(ErrorCode::PrecisionExhausted,
                "residual exceeds tolerance at " + std::to_string(options.precision_digits) +
                    " digits; raise the precision");
  }
  return w;
}

}  // namespace wordmap
