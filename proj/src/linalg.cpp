#include "qkz/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qkz {

namespace {

// Forward elimination, fraction-free row updates, pivoting restricted to the
// first pivot_cols columns. Deterministic: first nonzero pivot in row order.
std::vector<int> eliminate(ExMat& m, int pivot_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < pivot_cols && row < m.rows(); ++col) {
    int found = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) m.row(found).swap(m.row(row));
    ExactComplex pivot = m(row, col);
    for (int j = row + 1; j < m.rows(); ++j) {
      if (m(j, col).is_zero()) continue;
      ExactComplex factor = m(j, col);
      for (int c2 = col; c2 < m.cols(); ++c2)
        m(j, c2) = pivot * m(j, c2) - factor * m(row, c2);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<int> echelon_in_place(ExMat& m) {
  return eliminate(m, static_cast<int>(m.cols()));
}

int rank_exact(const ExMat& m) {
  ExMat work = m;
  return static_cast<int>(echelon_in_place(work).size());
}

ExMat nullspace_exact(const ExMat& m) {
  ExMat work = m;
  std::vector<int> pivots = echelon_in_place(work);
  int n = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  ExMat basis(n, static_cast<int>(free_cols.size()));
  basis.setConstant(ExactComplex(0));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    basis(free_cols[k], k) = ExactComplex(1);
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      int c = pivots[i];
      ExactComplex sum(0);
      for (int j = c + 1; j < n; ++j)
        if (!basis(j, k).is_zero()) sum += work(i, j) * basis(j, k);
      basis(c, k) = -sum / work(i, c);
    }
    for (int j = 0; j < n; ++j) {
      if (!basis(j, k).is_zero()) {
        ExactComplex lead = basis(j, k);
        for (int i = j; i < n; ++i) basis(i, k) = basis(i, k) / lead;
        break;
      }
    }
  }
  return basis;
}

ExVec solve_exact(const ExMat& a, const ExVec& b, bool* unique) {
  ExMat work(a.rows(), a.cols() + 1);
  work.leftCols(a.cols()) = a;
  work.col(a.cols()) = b;
  std::vector<int> pivots = eliminate(work, static_cast<int>(a.cols()));
  int rank = static_cast<int>(pivots.size());
  for (int i = rank; i < work.rows(); ++i)
    if (!work(i, a.cols()).is_zero())
      throw Error("inconsistent-system", "linear system has no solution");
  if (unique) *unique = (rank == a.cols());

  ExVec x(a.cols());
  x.setConstant(ExactComplex(0));
  for (int i = rank - 1; i >= 0; --i) {
    int c = pivots[i];
    ExactComplex sum = work(i, a.cols());
    for (int j = c + 1; j < a.cols(); ++j)
      if (!x(j).is_zero()) sum -= work(i, j) * x(j);
    x(c) = sum / work(i, c);
  }
  return x;
}

bool in_span_exact(const ExMat& basis, const ExVec& v) {
  try {
    solve_exact(basis, v);
    return true;
  } catch (const Error& e) {
    if (e.code == "inconsistent-system") return false;
    throw;
  }
}

bool same_span_exact(const ExMat& a, const ExMat& b) {
  if (rank_exact(a) != rank_exact(b)) return false;
  for (int k = 0; k < b.cols(); ++k)
    if (!in_span_exact(a, b.col(k))) return false;
  return true;
}

ExMat exact_identity(int n) {
  ExMat m(n, n);
  m.setConstant(ExactComplex(0));
  for (int i = 0; i < n; ++i) m(i, i) = ExactComplex(1);
  return m;
}

CxMat to_cx(const ExMat& m) {
  CxMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_cx(m(i, j));
  return out;
}

Real frobenius_norm(const CxMat& m) {
  using boost::multiprecision::sqrt;
  Real sum(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) sum += norm2(m(i, j));
  return sqrt(sum);
}

Real max_abs(const CxMat& m) {
  Real best(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Real a = abs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

Svd svd_decompose(const CxMat& a) {
  using boost::multiprecision::sqrt;
  int m = static_cast<int>(a.rows());
  int n = static_cast<int>(a.cols());
  CxMat work = a;
  CxMat v(n, n);
  v.setConstant(Cx(0));
  for (int i = 0; i < n; ++i) v(i, i) = Cx(1);

  Real eps = pow(Real(10), -int(precision_digits()) + 2);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Real app(0), aqq(0);
        Cx apq(0);
        for (int i = 0; i < m; ++i) {
          app += norm2(work(i, p));
          aqq += norm2(work(i, q));
          apq += conj(work(i, p)) * work(i, q);
        }
        Real g = abs(apq);
        if (app == 0 || aqq == 0 || g <= eps * sqrt(app * aqq)) continue;
        converged = false;
        Cx phi = apq / g;
        Real tau = (aqq - app) / (2 * g);
        Real t;
        {
          using boost::multiprecision::abs;
          Real denom = abs(tau) + sqrt(1 + tau * tau);
          t = (tau >= 0 ? Real(1) : Real(-1)) / denom;
        }
        Real c = 1 / sqrt(1 + t * t);
        Real s = c * t;
        Cx phic = conj(phi);
        for (int i = 0; i < m; ++i) {
          Cx wp = work(i, p), wq = work(i, q);
          work(i, p) = c * wp - s * (phic * wq);
          work(i, q) = s * (phi * wp) + c * wq;
        }
        for (int i = 0; i < n; ++i) {
          Cx vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * (phic * vq);
          v(i, q) = s * (phi * vp) + c * vq;
        }
      }
    }
    if (converged) break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  RealVec sigmas(n);
  for (int j = 0; j < n; ++j) {
    Real sum(0);
    for (int i = 0; i < m; ++i) sum += norm2(work(i, j));
    sigmas(j) = sqrt(sum);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sigmas(x) > sigmas(y); });

  Svd out;
  out.singular_values = RealVec(n);
  out.u = CxMat(m, n);
  out.v = CxMat(n, n);
  for (int j = 0; j < n; ++j) {
    int src = order[j];
    out.singular_values(j) = sigmas(src);
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    if (sigmas(src) > 0) {
      for (int i = 0; i < m; ++i) out.u(i, j) = work(i, src) / sigmas(src);
    } else {
      for (int i = 0; i < m; ++i) out.u(i, j) = Cx(0);
    }
  }
  return out;
}

int rank_numeric(const CxMat& a, const Real& tol_rel) {
  Svd svd = svd_decompose(a);
  if (svd.singular_values.size() == 0) return 0;
  Real top = svd.singular_values(0);
  if (top == 0) return 0;
  int rank = 0;
  for (int i = 0; i < svd.singular_values.size(); ++i)
    if (svd.singular_values(i) > tol_rel * top) ++rank;
  return rank;
}

CxMat nullspace_numeric(const CxMat& a, const Real& tol_rel) {
  Svd svd = svd_decompose(a);
  int n = static_cast<int>(a.cols());
  int rank = 0;
  Real top = svd.singular_values.size() > 0 ? svd.singular_values(0) : Real(0);
  if (top > 0)
    for (int i = 0; i < n; ++i)
      if (svd.singular_values(i) > tol_rel * top) ++rank;
  CxMat basis(n, n - rank);
  for (int j = rank; j < n; ++j)
    for (int i = 0; i < n; ++i) basis(i, j - rank) = svd.v(i, j);
  return basis;
}

CxVec solve_least_squares(const CxMat& a, const CxVec& b) {
  Svd svd = svd_decompose(a);
  int n = static_cast<int>(a.cols());
  Real top = svd.singular_values.size() > 0 ? svd.singular_values(0) : Real(0);
  Real cutoff = tol_rank() * top;
  CxVec x(n);
  for (int i = 0; i < n; ++i) x(i) = Cx(0);
  for (int j = 0; j < n; ++j) {
    if (svd.singular_values(j) <= cutoff) continue;
    Cx coeff(0);
    for (int i = 0; i < a.rows(); ++i) coeff += conj(svd.u(i, j)) * b(i);
    coeff = coeff / svd.singular_values(j);
    for (int i = 0; i < n; ++i) x(i) += coeff * svd.v(i, j);
  }
  return x;
}

}  // namespace qkz
