#pragma once

#include <Eigen/Core>
#include <vector>

#include "qkz/scalars.hpp"

namespace Eigen {

template <>
struct NumTraits<qkz::Rational> : GenericNumTraits<qkz::Rational> {
  typedef qkz::Rational Real;
  typedef qkz::Rational NonInteger;
  typedef qkz::Rational Nested;
  static inline qkz::Rational epsilon() { return 0; }
  static inline qkz::Rational dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
};

template <>
struct NumTraits<qkz::ExactComplex> : GenericNumTraits<qkz::ExactComplex> {
  typedef qkz::Rational Real;
  typedef qkz::ExactComplex NonInteger;
  typedef qkz::ExactComplex Nested;
  static inline qkz::Rational epsilon() { return 0; }
  static inline qkz::Rational dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
};

template <>
struct NumTraits<qkz::Cx> : GenericNumTraits<qkz::Cx> {
  typedef qkz::Real Real;
  typedef qkz::Cx NonInteger;
  typedef qkz::Cx Nested;
  static inline qkz::Real epsilon() { return qkz::Real(0); }
  static inline qkz::Real dummy_precision() { return qkz::Real(0); }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
};

}  // namespace Eigen

namespace qkz {

using ExMat = Eigen::Matrix<ExactComplex, Eigen::Dynamic, Eigen::Dynamic>;
using ExVec = Eigen::Matrix<ExactComplex, Eigen::Dynamic, 1>;
using CxMat = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic>;
using CxVec = Eigen::Matrix<Cx, Eigen::Dynamic, 1>;
using RealVec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Row echelon form by fraction-free elimination (cross-multiplication row
// updates, no division) with deterministic first-nonzero pivoting.
// Returns pivot column indices.
std::vector<int> echelon_in_place(ExMat& m);

int rank_exact(const ExMat& m);

// Columns form a basis of the right kernel; each normalized so its first
// nonzero coordinate is 1. Deterministic.
ExMat nullspace_exact(const ExMat& m);

// Solve a x = b. flags: *unique set false if the solution space has positive
// dimension (a minimal solution is still returned). Throws
// Error("inconsistent-system") if there is none.
ExVec solve_exact(const ExMat& a, const ExVec& b, bool* unique = nullptr);

// True iff v lies in the column span of basis.
bool in_span_exact(const ExMat& basis, const ExVec& v);
// True iff the column spans coincide.
bool same_span_exact(const ExMat& a, const ExMat& b);

ExMat exact_identity(int n);
CxMat to_cx(const ExMat& m);

Real frobenius_norm(const CxMat& m);
Real max_abs(const CxMat& m);

struct Svd {
  RealVec singular_values;  // descending
  CxMat u;                  // m x n, columns orthonormal where sigma > 0
  CxMat v;                  // n x n unitary
};

// One-sided Jacobi; suitable for the small dense matrices used here.
Svd svd_decompose(const CxMat& a);

int rank_numeric(const CxMat& a, const Real& tol_rel);
CxMat nullspace_numeric(const CxMat& a, const Real& tol_rel);
// Least squares via the SVD pseudo-inverse.
CxVec solve_least_squares(const CxMat& a, const CxVec& b);

}  // namespace qkz
