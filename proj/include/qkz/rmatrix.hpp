#pragma once

#include <string>
#include <vector>

#include "qkz/yangian.hpp"

namespace qkz {

/// The rational R-matrix on a two-factor tensor product, stored per weight
/// level 0..level. blocks[m] acts on the level-m pair basis; composition
/// with the flip intertwines the two evaluation orders, and the highest
/// vector is fixed.
struct RMatrixBlock {
  Rational lambda1, lambda2;
  ExactComplex x;
  int level = 0;
  FactorKind kind1 = FactorKind::verma;
  FactorKind kind2 = FactorKind::verma;
  std::vector<ExMat> blocks;

  TensorSpace pair_space(int m) const;
};

/// Solves the intertwining equations level by level on Verma modules.
/// Throws non-unique-solution when x is non-generic for some level and
/// inconsistent-system when the equations contradict each other.
RMatrixBlock r_matrix(const Rational& lambda1, const Rational& lambda2,
                      const ExactComplex& x, int level);

/// Caps a Verma R-matrix to irreducible factors after checking that every
/// stored block maps the capped-away submodule into itself. Throws
/// submodule-not-preserved otherwise. Factors with non-dominant weight are
/// left uncapped.
RMatrixBlock factor_to_irreducible(const RMatrixBlock& r);

/// The R-matrix acting inside an n-factor space with its first tensor slot
/// at factor a and its second at factor b (0-based, a != b). Level-preserving
/// on the block of sp.
ExMat embed_pair_operator(const TensorSpace& sp, const RMatrixBlock& r, int a,
                          int b);

/// The qKZ operator K_m(z) (m is 1-based) on the level-l block of the
/// tensor product described by ps, with Verma or irreducible factors.
ExMat qkz_operator(const ParamSet& ps, int m, bool irreducible_modules);

/// Flip composed with the R-matrix for adjacent factors i, i+1 (1-based):
/// maps the level-l block of ps to the block with z_i, z_{i+1} and
/// lambda_i, lambda_{i+1} exchanged.
ExMat swap_operator(const ParamSet& ps, int i, bool irreducible_modules);
ParamSet swap_params(const ParamSet& ps, int i);

struct FlatnessResult {
  bool ok = true;
  std::string witness;
};

/// Verifies K_i(z + p 1_j) K_j(z) = K_j(z + p 1_i) K_i(z) exactly for all
/// pairs i < j on the level-l block.
FlatnessResult check_flatness(const ParamSet& ps, bool irreducible_modules);

}  // namespace qkz
