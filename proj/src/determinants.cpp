#include "tensoralg/determinants.hpp"

#include <cmath>
#include <string>

#include "format.hpp"
#include "linalg.hpp"

namespace tensoralg {

namespace {

void require_mixed(const TensorObject& t, const char* op) {
  if (t.rank() != 2 || t.slots()[0] != Variance::Up ||
      t.slots()[1] != Variance::Down) {
    throw ShapeError(std::string(op) +
                     " needs a rank-(1,1) object with slots [up,down], got " +
                     t.signature_string());
  }
}

double det_components(const TensorObject& t) {
  if (t.dim() <= kEpsilonDeterminantMaxDim) {
    return detail::det_by_permutation_sign(t.components(), t.dim());
  }
  return detail::det_by_elimination(t.components(), t.dim());
}

}  // namespace

double determinant(const TensorObject& t) {
  require_mixed(t, "determinant");
  return det_components(t);
}

double determinant_by_elimination(const TensorObject& t) {
  require_mixed(t, "determinant_by_elimination");
  return detail::det_by_elimination(t.components(), t.dim());
}

double component_determinant(const TensorObject& t) {
  if (t.rank() != 2) {
    throw ShapeError("component_determinant needs a rank-2 object, got " +
                     t.signature_string());
  }
  return det_components(t);
}

bool is_singular(const TensorObject& t) {
  return detail::is_singular(component_determinant(t), t.components(),
                             t.dim());
}

TensorObject inverse(const TensorObject& t) {
  require_mixed(t, "inverse");
  const double det = det_components(t);
  if (detail::is_singular(det, t.components(), t.dim())) {
    throw SingularError("matrix is singular (|det| = " +
                            detail::format_number(std::abs(det)) + ")",
                        std::abs(det));
  }
  return TensorObject(t.dim(), t.slots(), 0,
                      detail::lu_inverse(t.components(), t.dim()));
}

TensorObject matmul(const TensorObject& x, const TensorObject& y) {
  require_mixed(x, "matmul");
  require_mixed(y, "matmul");
  if (x.dim() != y.dim()) {
    throw ShapeError("matmul: dim mismatch");
  }
  return TensorObject(x.dim(), x.slots(), x.weight() + y.weight(),
                      detail::matmul(x.components(), y.components(), x.dim()));
}

}  // namespace tensoralg
