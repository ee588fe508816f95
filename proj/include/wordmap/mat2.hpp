#pragma once

#include <cstdint>
#include <string>

#include "wordmap/error.hpp"

namespace wordmap {

/// 2x2 matrix over a commutative ring. Entries are named row/column,
/// so `a12` is the entry in row 1, column 2.
template <class Ring>
struct Mat2 {
  Ring a11{0}, a12{0}, a21{0}, a22{0};

  static Mat2 identity() { return {Ring(1), Ring(0), Ring(0), Ring(1)}; }
  static Mat2 diagonal(Ring d1, Ring d2) { return {std::move(d1), Ring(0), Ring(0), std::move(d2)}; }

  template <class F>
  auto map(F&& f) const -> Mat2<std::decay_t<decltype(f(a11))>> {
    return {f(a11), f(a12), f(a21), f(a22)};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend Mat2 operator*(const Ring& s, const Mat2& x) {
    return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <class Ring>
Ring trace(const Mat2<Ring>& m) {
  return m.a11 + m.a22;
}

template <class Ring>
Ring det(const Mat2<Ring>& m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

/// adj(m), so that m * adj(m) = det(m) * 1.
template <class Ring>
Mat2<Ring> adjugate(const Mat2<Ring>& m) {
  return {m.a22, -m.a12, -m.a21, m.a11};
}

/// m^e for a determinant-one matrix; negative powers go through the adjugate.
template <class Ring>
Mat2<Ring> pow_unimodular(const Mat2<Ring>& m, std::int64_t e) {
  Mat2<Ring> base = e < 0 ? adjugate(m) : m;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Mat2<Ring> result = Mat2<Ring>::identity();
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace wordmap
