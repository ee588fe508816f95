#pragma once

#include <algorithm>
#include <optional>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/laurent.hpp"
#include "wordmap/rational.hpp"

namespace wordmap {

// Coefficient-ring hooks. Every ring used as a UPoly coefficient provides
// is_zero, exact_quotient and coefficient_string overloads.
inline bool is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline Rat exact_quotient(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) throw Error(ErrorCode::InexactDivision, "division by zero");
  return a / b;
}
inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  return divide_exact(a, b);
}
inline std::string coefficient_string(const Rat& c) { return c.get_str(); }
inline std::string coefficient_string(const LaurentPoly& c) { return to_string(c); }

/// Dense univariate polynomial in t, coefficients stored low to high.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
template <class Coeff>
class UPoly {
 public:
  using coefficient_type = Coeff;

  UPoly() = default;
  UPoly(Coeff c) {  // NOLINT(google-explicit-constructor): constants embed
    if (!wordmap::is_zero(c)) coeffs_.push_back(std::move(c));
  }
  UPoly(int c) : UPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * t^degree
  static UPoly monomial(Coeff c, int degree) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly t() { return monomial(Coeff(1), 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range.
  Coeff coeff(int i) const {
    if (i < 0 || i > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Coeff& leading() const { return coeffs_.back(); }

  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return UPoly<Out>(std::move(out));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (wordmap::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (wordmap::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UPoly(std::move(out));
  }
  friend UPoly scale(UPoly p, const Coeff& c) {
    if (wordmap::is_zero(c)) return {};
    for (auto& x : p.coeffs_) x = x * c;
    p.trim();
    return p;
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && wordmap::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Polynomials in t over the Laurent ring R0 (alpha, beta, gamma, tau live here).
using TPoly = UPoly<LaurentPoly>;
/// Polynomials in t over the rationals (specializations).
using QPoly = UPoly<Rat>;

/// Horner evaluation at any value type that a coefficient converts into.
template <class Coeff, class Value>
Value horner(const UPoly<Coeff>& p, const Value& x) {
  Value acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Value(p.coefficients()[static_cast<std::size_t>(i)]);
  return acc;
}

template <class Coeff>
UPoly<Coeff> derivative(const UPoly<Coeff>& p) {
  if (p.degree() <= 0) return {};
  std::vector<Coeff> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(Coeff(p.coefficients()[static_cast<std::size_t>(i)] * Rat(i)));
  return UPoly<Coeff>(std::move(out));
}

template <class Coeff>
UPoly<Coeff> pow(const UPoly<Coeff>& p, unsigned e) {
  UPoly<Coeff> result(1);
  UPoly<Coeff> base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Coefficientwise lambda -> 1/lambda, mu -> 1/mu; t is fixed.
TPoly sigma(const TPoly& p);

/// Evaluates every Laurent coefficient at (lambda0, mu0). Throws Error(ZeroParameter).
QPoly specialize(const TPoly& p, const Rat& lambda0, const Rat& mu0);

/// Exact quotient f / g in Coeff[t]; throws Error(InexactDivision) on a nonzero
/// remainder or a non-exact coefficient division.
template <class Coeff>
UPoly<Coeff> exact_div(const UPoly<Coeff>& f, const UPoly<Coeff>& g) {
  if (g.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw Error(ErrorCode::InexactDivision, "divisor degree exceeds dividend degree");
  std::vector<Coeff> rem = f.coefficients();
  const int dg = g.degree();
  std::vector<Coeff> quot(static_cast<std::size_t>(f.degree() - dg + 1), Coeff(0));
  for (int i = f.degree(); i >= dg; --i) {
    auto& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    Coeff q = exact_quotient(top, g.leading());
    for (int j = 0; j <= dg; ++j) {
      rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coefficients()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(i - dg)] = std::move(q);
  }
  for (int i = 0; i < dg; ++i) {
    if (!is_zero(rem[static_cast<std::size_t>(i)])) {
      throw Error(ErrorCode::InexactDivision, "polynomial division leaves a nonzero remainder");
    }
  }
  return UPoly<Coeff>(std::move(quot));
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed without division.
template <class Coeff>
UPoly<Coeff> pseudo_remainder(const UPoly<Coeff>& f, const UPoly<Coeff>& g) {
  if (f.degree() < g.degree()) return f;
  std::vector<Coeff> rem = f.coefficients();
  const int dg = g.degree();
  const Coeff& lc = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    Coeff top = rem[static_cast<std::size_t>(i)];
    for (int j = 0; j <= i; ++j) rem[static_cast<std::size_t>(j)] = rem[static_cast<std::size_t>(j)] * lc;
    if (!is_zero(top)) {
      for (int j = 0; j <= dg; ++j) {
        rem[static_cast<std::size_t>(i - dg + j)] -= top * g.coefficients()[static_cast<std::size_t>(j)];
      }
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(dg, 0)));
  return UPoly<Coeff>(std::move(rem));
}

/// Quotient and remainder over the rationals.
std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g);
QPoly monic(const QPoly& f);
/// Monic gcd over Q; gcd(f, 0) = monic(f). Precondition: not both zero.
QPoly gcd_q(const QPoly& f, const QPoly& g);
/// f / gcd(f, f'), monic.
QPoly squarefree_part(const QPoly& f);
/// Inverse of a modulo m when gcd(a, m) = 1, reduced below deg m; nullopt otherwise.
std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& m);
/// Scales to coprime integer coefficients with positive leading coefficient.
QPoly integer_primitive(const QPoly& f);

template <class Coeff>
std::string to_string(const UPoly<Coeff>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const auto& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = coefficient_string(c);
    if (i == 0) {
      os << "(" << cs << ")";
    } else {
      if (cs != "1") os << "(" << cs << ")·";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace wordmap
