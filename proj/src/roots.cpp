#include "wordmap/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re;
  Real im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rat to_rat(const Real& r) {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), r.backend().data());
  return q;
}

// Value and derivative by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Real>& c, const Complex& z) {
  Complex p{c.back(), Real(0)};
  Complex dp{Real(0), Real(0)};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + Complex{c[i], Real(0)};
  }
  return {p, dp};
}

std::size_t decimal_length(const BigInt& v) { return BigInt(abs(v)).get_str().size(); }

std::vector<Rat> convergents(const Rat& x, const BigInt& max_den) {
  std::vector<Rat> out;
  BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  BigInt num = x.get_num(), den = x.get_den();
  while (den != 0) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const BigInt h = a * h1 + h2;
    const BigInt k = a * k1 + k2;
    if (k > max_den) break;
    out.push_back(Rat(h, k));
    h2 = h1, h1 = h, k2 = k1, k1 = k;
    const BigInt r = num - a * den;
    num = den;
    den = r;
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

}  // namespace

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  const Rat d = b.norm();
  if (sgn(d) == 0) throw Error(ErrorCode::Precondition, "division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string format_gauss(const GaussRat& z, int digits) {
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  const std::string re = to_real(z.re).str(digits, std::ios_base::scientific);
  if (z.is_real()) return re;
  const Real im = to_real(z.im);
  const std::string im_abs = Real(boost::multiprecision::abs(im)).str(digits, std::ios_base::scientific);
  return re + (im < 0 ? " - " : " + ") + im_abs + "i";
}

Rat sqrt_upper(const Rat& x, unsigned bits) {
  if (sgn(x) < 0) throw Error(ErrorCode::Precondition, "square root of a negative number");
  if (sgn(x) == 0) return 0;
  const BigInt& den = x.get_den();
  BigInt scaled = x.get_num() * den;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  s += 1;
  BigInt d = den;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  Rat r(s, d);
  r.canonicalize();
  return r;
}

std::vector<GaussRat> approximate_roots(const QPoly& p, int digits) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::Precondition, "root isolation needs a positive degree");
  if (digits < 1) throw Error(ErrorCode::Precondition, "precision must be positive");
  PrecisionScope scope(static_cast<unsigned>(digits + 30));

  std::vector<Real> c;
  for (const auto& q : p.coefficients()) c.push_back(to_real(q));
  if (n == 1) return {GaussRat(Rat(-p.coeff(0) / p.coeff(1)))};

  // Start on a circle enclosing all roots (Cauchy bound), slightly rotated off the axes.
  Real radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, Real(boost::multiprecision::abs(c[i] / c[n])));
  radius += 1;
  std::vector<Complex> z;
  const Real two_pi = 2 * boost::multiprecision::acos(Real(-1));
  for (int k = 0; k < n; ++k) {
    const Real angle = two_pi * k / n + Real(0.4);
    z.push_back({radius * cos(angle), radius * sin(angle)});
  }

  const Real tol = boost::multiprecision::pow(Real(10), -(digits + 5));
  const int max_iterations = 200 + 20 * n + digits;
  int settled = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      const auto [value, slope] = eval_with_derivative(c, z[k]);
      if (value.re == 0 && value.im == 0) continue;
      const Complex newton = value / slope;
      Complex repulsion{Real(0), Real(0)};
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion = repulsion + Complex{Real(1), Real(0)} / (z[k] - z[j]);
      }
      const Complex step = newton / (Complex{Real(1), Real(0)} - newton * repulsion);
      z[k] = z[k] - step;
      worst = std::max(worst, Real(abs(step) / std::max(Real(1), abs(z[k]))));
    }
    if (worst < tol) {
      if (++settled >= 2) {
        std::vector<GaussRat> roots;
        for (const auto& r : z) roots.emplace_back(to_rat(r.re), to_rat(r.im));
        return roots;
      }
    } else {
      settled = 0;
    }
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "root iteration did not settle at " + std::to_string(digits) + " digits");
}

std::vector<Rat> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::Precondition, "rational roots of the zero polynomial");
  QPoly f = integer_primitive(squarefree_part(p));
  std::vector<Rat> roots;
  if (f.degree() >= 1 && sgn(f.coeff(0)) == 0) {
    roots.emplace_back(0);
    f = integer_primitive(exact_div(f, QPoly::t()));
  }
  if (f.degree() == 1) {
    roots.push_back(Rat(-f.coeff(0) / f.coeff(1)));
  } else if (f.degree() > 1) {
    // A root a/b has b | lc; an error below 1/(2 lc^2) makes a/b a convergent.
    const BigInt lc = abs(f.leading().get_num());
    BigInt bound = 1;
    for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, BigInt(abs(f.coeff(i).get_num())));
    const int digits = static_cast<int>(2 * decimal_length(lc) + decimal_length(bound)) + 20;
    for (const auto& z : approximate_roots(f, digits)) {
      for (const auto& q : convergents(z.re, lc)) {
        if (sgn(horner(f, q)) == 0 && std::find(roots.begin(), roots.end(), q) == roots.end()) {
          roots.push_back(q);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace wordmap
