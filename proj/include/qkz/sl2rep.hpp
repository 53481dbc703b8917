#pragma once

#include <vector>

#include "qkz/linalg.hpp"
#include "qkz/params.hpp"

namespace qkz {

enum class FactorKind { verma, irreducible };

/// Tensor product of highest-weight modules, one factor per weight, together
/// with the weight level whose block the operators below act on. Irreducible
/// factors with dominant weight cap their exponent at 2*lambda; all other
/// factors are uncapped.
struct TensorSpace {
  std::vector<Rational> lambdas;
  std::vector<FactorKind> kinds;
  int level = 0;

  int n() const { return static_cast<int>(lambdas.size()); }
  /// Exponent cap for factor i, or -1 when uncapped.
  int cap(int i) const;
};

using MultiIndex = std::vector<int>;

TensorSpace verma_space(const std::vector<Rational>& lambdas, int level);
TensorSpace irreducible_space(const std::vector<Rational>& lambdas, int level);
TensorSpace at_level(const TensorSpace& sp, int level);

/// Basis of the level block as multi-indices (l_1..l_n) with sum = level,
/// ordered lexicographically descending: (1,0) before (0,1).
std::vector<MultiIndex> basis(const TensorSpace& sp);
std::vector<MultiIndex> basis_at(const TensorSpace& sp, int level);

/// Position of a multi-index in the basis listing, or -1 when absent.
int basis_index(const std::vector<MultiIndex>& b, const MultiIndex& idx);

/// Single-factor or total actions on the level block of sp. Factor index
/// -1 means the sum over all factors. act_e maps level to level-1, act_f
/// to level+1 (images beyond an irreducible cap vanish), act_h is diagonal.
ExMat act_e(const TensorSpace& sp, int factor = -1);
ExMat act_f(const TensorSpace& sp, int factor = -1);
ExMat act_h(const TensorSpace& sp, int factor = -1);

/// Columns form an exact basis of the kernel of total e on the level block.
ExMat singular_basis(const TensorSpace& sp);
int singular_dimension(const TensorSpace& sp);

}  // namespace qkz
