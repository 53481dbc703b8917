#include "qkz/uqsl2.hpp"

namespace qkz {

namespace {

// Iterated coproduct: the term acting on factor i carries q^{-h} on factors
// before i and q^h on factors after i. On a basis vector both are diagonal
// with factor-j eigenvalue q^{lambda_j - l_j}.
Cx coproduct_prefactor(const QTensorSpace& sp, const MultiIndex& lbar, int i) {
  Rational expo = 0;
  for (int j = 0; j < sp.base.n(); ++j) {
    if (j == i) continue;
    Rational wt = sp.base.lambdas[j] - lbar[j];
    expo += (j < i) ? -wt : wt;
  }
  return q_power(sp.q, expo);
}

}  // namespace

QTensorSpace q_space(const TensorSpace& base, const Rational& p) {
  return QTensorSpace{base, make_qvalue(p)};
}

QTensorSpace q_at_level(const QTensorSpace& sp, int level) {
  return QTensorSpace{at_level(sp.base, level), sp.q};
}

CxMat act_eq(const QTensorSpace& sp) {
  std::vector<MultiIndex> dom = basis(sp.base);
  std::vector<MultiIndex> cod = basis_at(sp.base, sp.base.level - 1);
  CxMat out = CxMat::Zero(static_cast<int>(cod.size()),
                          static_cast<int>(dom.size()));
  for (int c = 0; c < static_cast<int>(dom.size()); ++c) {
    MultiIndex lbar = dom[c];
    for (int i = 0; i < sp.base.n(); ++i) {
      if (lbar[i] == 0) continue;
      MultiIndex target = lbar;
      target[i] -= 1;
      int r = basis_index(cod, target);
      if (r < 0) continue;
      Cx coeff = q_number(sp.q, Rational(lbar[i])) *
                 q_number(sp.q, 2 * sp.base.lambdas[i] - lbar[i] + 1);
      out(r, c) += coproduct_prefactor(sp, lbar, i) * coeff;
    }
  }
  return out;
}

CxMat act_fq(const QTensorSpace& sp) {
  std::vector<MultiIndex> dom = basis(sp.base);
  std::vector<MultiIndex> cod = basis_at(sp.base, sp.base.level + 1);
  CxMat out = CxMat::Zero(static_cast<int>(cod.size()),
                          static_cast<int>(dom.size()));
  for (int c = 0; c < static_cast<int>(dom.size()); ++c) {
    MultiIndex lbar = dom[c];
    for (int i = 0; i < sp.base.n(); ++i) {
      int cap = sp.base.cap(i);
      if (cap >= 0 && lbar[i] >= cap) continue;
      MultiIndex target = lbar;
      target[i] += 1;
      int r = basis_index(cod, target);
      if (r < 0) continue;
      out(r, c) += coproduct_prefactor(sp, lbar, i);
    }
  }
  return out;
}

CxMat act_qh(const QTensorSpace& sp, int mult) {
  std::vector<MultiIndex> dom = basis(sp.base);
  CxMat out = CxMat::Zero(static_cast<int>(dom.size()),
                          static_cast<int>(dom.size()));
  for (int c = 0; c < static_cast<int>(dom.size()); ++c) {
    Rational wt = 0;
    for (int i = 0; i < sp.base.n(); ++i) {
      wt += sp.base.lambdas[i] - dom[c][i];
    }
    out(c, c) = q_power(sp.q, mult * wt);
  }
  return out;
}

CxMat q_singular_basis(const QTensorSpace& sp) {
  CxMat e = act_eq(sp);
  int cols = static_cast<int>(e.cols());
  if (e.rows() == 0) {
    return CxMat::Identity(cols, cols);
  }
  Svd svd = svd_decompose(e);
  Real tol = tol_rank();
  Real top = svd.singular_values.size() > 0 ? svd.singular_values(0) : Real(0);
  int rank = 0;
  for (int i = 0; i < svd.singular_values.size(); ++i) {
    if (svd.singular_values(i) > tol * top) ++rank;
  }
  if (rank > 0 && rank < svd.singular_values.size() &&
      svd.singular_values(rank) > 0) {
    if (svd.singular_values(rank - 1) <
        Real(100) * svd.singular_values(rank)) {
      throw Error("rank-ambiguity",
                  "singular values do not separate cleanly at the rank "
                  "threshold");
    }
  }
  int expected = singular_dimension(sp.base);
  if (cols - rank != expected) {
    throw Error("rank-ambiguity",
                "numerical kernel dimension disagrees with the exact "
                "singular dimension");
  }
  return CxMat(svd.v.rightCols(cols - rank));
}

CxMat fq_power_image(const QTensorSpace& sp, int k) {
  std::vector<MultiIndex> cod = basis(sp.base);
  if (k > sp.base.level) {
    return CxMat::Zero(static_cast<int>(cod.size()), 0);
  }
  QTensorSpace low = q_at_level(sp, sp.base.level - k);
  CxMat image = q_singular_basis(low);
  for (int step = 0; step < k; ++step) {
    QTensorSpace cur = q_at_level(sp, sp.base.level - k + step);
    image = CxMat(act_fq(cur) * image);
  }
  CxMat e_top = act_eq(sp);
  Real tol = tol_residual();
  for (int c = 0; c < image.cols(); ++c) {
    CxMat col = image.col(c);
    Real res = frobenius_norm(CxMat(e_top * col));
    Real scale = frobenius_norm(col);
    if (scale < 1) scale = 1;
    if (res > tol * scale) {
      throw Error("residual-too-large",
                  "image vector of the lowering power is not singular");
    }
  }
  return image;
}

int quotient_dimension(const QTensorSpace& sp, int k) {
  int dim_sing = static_cast<int>(q_singular_basis(sp).cols());
  if (k <= 0 || k > sp.base.level) return dim_sing;
  CxMat image = fq_power_image(sp, k);
  if (image.cols() == 0) return dim_sing;
  return dim_sing - rank_numeric(image, tol_rank());
}

}  // namespace qkz
