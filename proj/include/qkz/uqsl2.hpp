#pragma once

#include "qkz/sl2rep.hpp"

namespace qkz {

// Tensor product of quantum-group modules on the same multi-index basis as
// the classical TensorSpace, with q = exp(i*pi/p).
struct QTensorSpace {
  TensorSpace base;
  QValue q;
};

QTensorSpace q_space(const TensorSpace& base, const Rational& p);
QTensorSpace q_at_level(const QTensorSpace& sp, int level);

// Coproduct actions on the level block. act_eq maps level l to l-1, act_fq
// maps l to l+1, act_qh is the diagonal of q^(mult*h).
CxMat act_eq(const QTensorSpace& sp);
CxMat act_fq(const QTensorSpace& sp);
CxMat act_qh(const QTensorSpace& sp, int mult = 1);

// Numerical kernel of act_eq on the level block, cross-checked against the
// classical singular dimension. Columns are an orthonormal basis.
CxMat q_singular_basis(const QTensorSpace& sp);

// Span of (f_q)^k applied to the singular block at level l-k, landing in the
// level-l block. Each image column is checked to be singular.
CxMat fq_power_image(const QTensorSpace& sp, int k);

// dim sing_l minus the rank of the (f_q)^k image (the space the
// hypergeometric solutions are identified with).
int quotient_dimension(const QTensorSpace& sp, int k);

}  // namespace qkz
