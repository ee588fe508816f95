#pragma once

#include "wordmap/mat2.hpp"
#include "wordmap/rational.hpp"

namespace wordmap {

using QMat = Mat2<Rat>;

/// Throws Error(NotUnimodular) unless det(g) = 1.
void require_unimodular(const QMat& g);

/// xi_g = g^-1 E11 g - E11 = ((bc, bd), (-ac, -bc)) for g = ((a, b), (c, d)).
/// Every diagonal x satisfies x^g = x + xbar * xi_g. Throws Error(NotUnimodular).
QMat xi_of(const QMat& g);

/// g = ((1, 1), (t0, 1 + t0)): det g = 1 and det xi_g = t0.
QMat matrix_with_xi_det(const Rat& t0);

/// g^-1 m g for det(g) = 1.
QMat conjugate(const QMat& m, const QMat& g);

}  // namespace wordmap
