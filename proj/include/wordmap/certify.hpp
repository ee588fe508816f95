#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stop_token>
#include <string>

#include "wordmap/upoly.hpp"
#include "wordmap/wiggle.hpp"
#include "wordmap/words.hpp"

namespace wordmap {

/// Exponents of the double commutator [[x^k, y^l], [x^m, y^n]].
struct DCParams {
  std::int64_t k = 0, l = 0, m = 0, n = 0;

  /// Trivial in the free group iff some exponent is 0 or (k, l) = (m, n).
  bool trivial() const { return k == 0 || l == 0 || m == 0 || n == 0 || (k == m && l == n); }
  /// Parameters of the generator-swapped word, which is conjugate to a double commutator.
  DCParams swapped() const { return {l, k, n, m}; }
  PairList cyclic_pairs() const { return double_commutator_cyclic_pairs(k, l, m, n); }
  friend bool operator==(const DCParams&, const DCParams&) = default;
};

std::string to_string(const DCParams& p);

/// The cofactors left after peeling the closed-form prefactors:
///   T - 2     = (num/den)^2 t^2 (t+1)^2 tau
///   gamma - 1 = (num/den^2) t (t+1) gamma_inner
///   alpha - 1 = (num/den^2) t (t+1) alpha_core,  beta = (num/den^2) t (t+1) beta_core
/// with num = (l^2k - 1)(m^2l - 1)(l^2m - 1)(m^2n - 1), den = l^2(k+m) m^2(l+n).
struct CorePolys {
  LaurentPoly prefactor_num;
  LaurentPoly prefactor_den;
  TPoly tau;
  TPoly gamma_inner;
  TPoly alpha_core;
  TPoly beta_core;
  AssocPolys assoc;
};

LaurentPoly prefactor_numerator(const DCParams& p);
LaurentPoly prefactor_denominator(const DCParams& p);

/// Symbolic cofactors of the cyclic word w_{k,l,m,n}. Throws Error(TrivialWord),
/// or Error(InexactDivision) if the factored shape does not hold.
CorePolys core_polys(const DCParams& params, std::stop_token stop = {});

/// tau and gamma_inner specialized at (lambda0, mu0), computed over Q directly.
struct SpecializedCore {
  QPoly trace;        // T(t)
  QPoly gamma;        // gamma(t)
  QPoly tau;
  QPoly gamma_inner;
};

/// Returns nullopt when the prefactor vanishes at (lambda0, mu0).
std::optional<SpecializedCore> specialized_core(const DCParams& params, const Rat& lambda0,
                                                const Rat& mu0);

enum class CertStatus { Certified, SwappedCertified, TrivialWord, Inconclusive };

const char* to_string(CertStatus s);
std::optional<CertStatus> parse_cert_status(std::string_view s);

struct CertChecks {
  bool divides_trace_minus_2 = false;  // h | (T - 2) at the specialization
  bool coprime_t_t1 = false;           // gcd(h, t(t+1)) = 1
  bool coprime_gamma_minus_1 = false;  // gcd(h, gamma - 1) = 1
  bool all() const { return divides_trace_minus_2 && coprime_t_t1 && coprime_gamma_minus_1; }
  friend bool operator==(const CertChecks&, const CertChecks&) = default;
};

/// Proof object: every root of h is a t = det xi_g at which the wiggle of the
/// certified word is a non-trivial unipotent.
struct Certificate {
  DCParams params;
  CertStatus status = CertStatus::Inconclusive;
  std::optional<Rat> lambda;
  std::optional<Rat> mu;
  std::optional<QPoly> h;  // squarefree, primitive integer coefficients
  CertChecks checks;
  int attempts = 0;

  bool certified() const {
    return status == CertStatus::Certified || status == CertStatus::SwappedCertified;
  }
  /// The parameters of the word h refers to (swapped for SwappedCertified).
  DCParams word_params() const {
    return status == CertStatus::SwappedCertified ? params.swapped() : params;
  }
};

struct CertifyOptions {
  std::uint64_t seed = 0;
  int max_attempts = 5;
  /// Used for the first attempt of each branch when both are set.
  std::optional<Rat> lambda;
  std::optional<Rat> mu;
  std::function<void(const std::string&)> log;
};

/// Uniform over p/q with 0 < |p| <= 100, 1 <= q <= 100, portable across standard libraries.
Rat sample_rational(std::mt19937_64& rng);

/// Outcome of a single specialization; h is empty when it degenerates.
struct Attempt {
  Rat lambda;
  Rat mu;
  std::optional<QPoly> h;
  CertChecks checks;
};

/// Steps (2)-(5) of the search at one specialization.
Attempt attempt_certification(const DCParams& params, const Rat& lambda0, const Rat& mu0,
                              const std::function<void(const std::string&)>& log = {});

/// Seeded search for a certificate; see README for the algorithm.
Certificate certify(const DCParams& params, const CertifyOptions& options = {});

/// Re-derives the three facts from the certificate alone: rebuilds the word
/// from its text form, recomputes T and gamma at the recorded specialization.
CertChecks check_certificate(const Certificate& cert);

/// Text form of w_{k,l,m,n}, parseable by parse_word.
std::string cyclic_word_text(const DCParams& p);

}  // namespace wordmap
