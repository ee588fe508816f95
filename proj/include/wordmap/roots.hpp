#pragma once

#include <vector>

#include "wordmap/mat2.hpp"
#include "wordmap/rational.hpp"
#include "wordmap/upoly.hpp"

namespace wordmap {

/// Exact complex number with rational parts.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(int r) : re(r), im(0) {}

  bool is_real() const { return sgn(im) == 0; }
  /// |z|^2
  Rat norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

/// Division by a nonzero Gaussian rational.
GaussRat operator/(const GaussRat& a, const GaussRat& b);

using GMat = Mat2<GaussRat>;

std::string format_gauss(const GaussRat& z, int digits = 20);

/// Rational r >= 0 with r^2 >= x, accurate to about 2^-bits relative.
Rat sqrt_upper(const Rat& x, unsigned bits = 256);

/// Approximations of all complex roots of a squarefree p (deg >= 1) by Aberth
/// iteration at `digits` decimal digits, returned as dyadic Gaussian rationals.
/// Throws Error(PrecisionExhausted) if the iteration does not settle.
std::vector<GaussRat> approximate_roots(const QPoly& p, int digits);

/// All rational roots of p, exactly, in increasing order.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace wordmap
