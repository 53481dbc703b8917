#pragma once

#include <string>
#include <vector>

#include "qkz/rmatrix.hpp"

namespace qkz {

/// A subspace of the level-l singular block of the tensor product of
/// irreducibles, stored as exact coordinate columns.
struct BlocksSpace {
  ParamSet ps;
  int k = 0;
  ExMat basis;
};

/// Kernel of the k-th power of the z-dependent lowering operator inside the
/// singular block; the full singular block when non-resonant or k > l.
BlocksSpace conformal_blocks(const ParamSet& ps);

/// Same construction with the classical operator E(z).
BlocksSpace classical_blocks_N(const ParamSet& ps);

struct CheckOutcome {
  bool ok = true;
  std::string witness;
};

/// K_i(z) C(z) = C(z + p 1_i) as exact span equality for every i, plus the
/// adjacent-swap invariance.
CheckOutcome check_invariance(const ParamSet& ps);

/// The kernels of (e_x(z))^k on the singular block agree for all listed x.
bool check_x_independence(const ParamSet& ps,
                          const std::vector<ExactComplex>& xs);

struct DimensionReport {
  int dim_C = 0;
  int dim_N = 0;
  int dim_sing_l = 0;
  int dim_sing_lmk = 0;
  int quotient_dim = 0;
  bool equality_holds = false;
  bool inequality_holds = false;
  bool good_condition = false;
  bool bad_condition = false;
};

DimensionReport dimension_report(const ParamSet& ps);

/// Matrix of the k-th power of the lowering operator from level l down to
/// level l-k on the capped space; shared by the blocks constructions.
ExMat lowering_power(const ParamSet& ps, int k, const ExactComplex& x,
                     bool classical);

}  // namespace qkz
