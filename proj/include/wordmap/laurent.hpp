#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/rational.hpp"

namespace wordmap {

/// Exponent pair (e_lambda, e_mu) of a Laurent monomial, ordered lexicographically.
struct Exponent {
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(Exponent a, Exponent b) { return {a.lambda + b.lambda, a.mu + b.mu}; }
  friend Exponent operator-(Exponent a, Exponent b) { return {a.lambda - b.lambda, a.mu - b.mu}; }
};

/// Bivariate Laurent polynomial in lambda, mu over the rationals.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Rat coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rat& c);  // NOLINT(google-explicit-constructor): constants embed
  LaurentPoly(int c) : LaurentPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(const Rat& c, std::int64_t e_lambda, std::int64_t e_mu);
  static LaurentPoly lambda(std::int64_t e = 1) { return monomial(1, e, 0); }
  static LaurentPoly mu(std::int64_t e = 1) { return monomial(1, 0, e); }
  /// lambda^a - lambda^-a, the bar of diag(lambda, lambda^-1)^a.
  static LaurentPoly lambda_bar(std::int64_t a);
  static LaurentPoly mu_bar(std::int64_t b);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;
  /// Lexicographically largest term; precondition: nonzero.
  const Term& leading_term() const { return terms_.back(); }
  Rat coeff(Exponent e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  Rat evaluate(const Rat& lambda0, const Rat& mu0) const;

 private:
  std::vector<Term> terms_;
};

/// Only monomials are units; throws Error(NotAUnit) otherwise.
LaurentPoly unit_inverse(const LaurentPoly& p);

/// p^e for e >= 0; negative e only for monomials.
LaurentPoly pow(const LaurentPoly& p, std::int64_t e);

/// Substitutes lambda -> 1/lambda, mu -> 1/mu.
LaurentPoly sigma(const LaurentPoly& p);

/// Exact quotient f / g in the Laurent ring, or nullopt when g does not divide f.
std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Exact quotient; throws Error(InexactDivision).
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Renders in lambda/mu notation, e.g. "λ^2μ^-1 - 3".
std::string to_string(const LaurentPoly& p);

}  // namespace wordmap
