#pragma once

#include <optional>

#include "wordmap/certify.hpp"
#include "wordmap/roots.hpp"

namespace wordmap {

/// Exact facts about a factor h1 of the certificate polynomial, valid at every root of h1.
struct ModularCertificate {
  QPoly modulus;               // h1
  QPoly trace_minus_2_mod;     // (T - 2) mod h1, expected 0
  QPoly beta_product_inverse;  // (beta beta^sigma)^-1 mod h1
  bool coprime_t_t1 = false;   // gcd(h1, t(t+1)) = 1
  bool invertible = false;     // beta beta^sigma is a unit mod h1

  bool valid() const { return trace_minus_2_mod.is_zero() && coprime_t_t1 && invertible; }
};

/// A g with Wiggle(g) = u a non-trivial unipotent. For a rational t0 every
/// field is exact and residual = 0; otherwise t0, g, u are evaluated exactly at
/// a dyadic approximation of an algebraic root and residual bounds
/// |tr u - 2| and |det u - 1| from above.
struct Witness {
  DCParams word_params;  // the word the witness is for (swapped when the certificate is)
  Rat lambda;
  Rat mu;
  QPoly factor;  // h1
  bool exact = false;
  GaussRat t0;
  GMat g;
  GMat u;
  Rat residual;
  std::optional<ModularCertificate> modular;
};

struct WitnessOptions {
  int precision_digits = 64;
  /// Largest acceptable residual; defaults to 10^-(precision_digits - 10).
  std::optional<Rat> tolerance;
};

/// Throws Error(Precondition) unless the certificate is certified, and
/// Error(PrecisionExhausted) if the residual exceeds the tolerance.
Witness build_witness(const Certificate& cert, const WitnessOptions& options = {});

ModularCertificate modular_certificate(const QPoly& h1, const QAssocPolys& ap,
                                       const QAssocPolys& ap_sigma);

}  // namespace wordmap
