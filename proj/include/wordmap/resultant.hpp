#pragma once

#include <utility>
#include <vector>

#include "wordmap/upoly.hpp"

namespace wordmap {

namespace detail {

template <class Coeff>
Coeff power(const Coeff& base, int e) {
  Coeff r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace detail

/// Resultant with respect to t, normalized as
///   res(f, g) = lc(f)^deg(g) * prod_{f(a) = 0} g(a),
/// i.e. the determinant of the Sylvester matrix. Computed with the
/// subresultant PRS, which only ever divides exactly in Coeff.
template <class Coeff>
Coeff resultant(UPoly<Coeff> a, UPoly<Coeff> b) {
  if (a.is_zero() || b.is_zero()) return Coeff(0);
  Coeff sign(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = Coeff(-1);
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * detail::power(b.leading(), a.degree());

  Coeff g(1);
  Coeff h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    UPoly<Coeff> r = pseudo_remainder(a, b);
    if (r.is_zero()) return Coeff(0);
    a = std::move(b);
    const Coeff divisor = g * detail::power(h, delta);
    b = r.map([&](const Coeff& c) { return exact_quotient(c, divisor); });
    g = a.leading();
    // h <- g^delta / h^(delta - 1); unchanged when delta = 0
    if (delta > 0) h = exact_quotient(detail::power(g, delta), detail::power(h, delta - 1));
    if (b.degree() == 0) {
      const int da = a.degree();
      const Coeff num = detail::power(b.leading(), da);
      return sign * exact_quotient(num, detail::power(h, da - 1));
    }
  }
}

/// Same resultant via fraction-free (Bareiss) elimination on the Sylvester matrix.
template <class Coeff>
Coeff resultant_bareiss(const UPoly<Coeff>& f, const UPoly<Coeff>& g) {
  if (f.is_zero() || g.is_zero()) return Coeff(0);
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return Coeff(1);
  std::vector<std::vector<Coeff>> s(static_cast<std::size_t>(size),
                                    std::vector<Coeff>(static_cast<std::size_t>(size), Coeff(0)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  }
  Coeff sign(1);
  Coeff prev(1);
  for (int k = 0; k < size - 1; ++k) {
    if (is_zero(s[k][k])) {
      int p = k + 1;
      while (p < size && is_zero(s[p][k])) ++p;
      if (p == size) return Coeff(0);
      std::swap(s[k], s[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = exact_quotient(s[i][j] * s[k][k] - s[i][k] * s[k][j], prev);
      }
      s[i][k] = Coeff(0);
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

}  // namespace wordmap
