#include "wordmap/conjugation.hpp"

#include "wordmap/error.hpp"

namespace wordmap {

void require_unimodular(const QMat& g) {
  if (det(g) != 1) {
    throw Error(ErrorCode::NotUnimodular, "matrix determinant is " + Rat(det(g)).get_str() + ", expected 1");
  }
}

QMat xi_of(const QMat& g) {
  require_unimodular(g);
  const Rat bc = g.a12 * g.a21;
  return {bc, g.a12 * g.a22, -(g.a11 * g.a21), -bc};
}

QMat matrix_with_xi_det(const Rat& t0) { return {Rat(1), Rat(1), t0, Rat(1 + t0)}; }

QMat conjugate(const QMat& m, const QMat& g) { return adjugate(g) * m * g; }

}  // namespace wordmap
