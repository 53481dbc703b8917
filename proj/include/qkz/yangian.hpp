#pragma once

#include <vector>

#include "qkz/sl2rep.hpp"

namespace qkz {

/// A tensor product of evaluation modules: each factor of the space is read
/// at its own evaluation point.
struct EvaluationAssignment {
  TensorSpace space;
  std::vector<ExactComplex> points;
};

EvaluationAssignment evaluation_assignment(const TensorSpace& sp,
                                           const std::vector<ExactComplex>& x);

/// Action of the generator T^{(s)}_{ij} through the iterated coproduct.
/// Level shift of the result is j - i: (2,1) lowers by one, (1,2) raises by
/// one, the diagonal generators preserve the level. T^{(0)}_{ij} is
/// delta_ij times the identity.
ExMat act_T(const EvaluationAssignment& ea, int i, int j, int s);

/// The four published forms of the lowering operator attached to the
/// evaluation points. The coefficient display is the reference one; the
/// operator display applies the diagonal factor after the lowering; the two
/// generator products realize T21^(2) minus T11^(1) (resp. T22^(1)) times
/// T21^(1). All four agree up to multiples of total e.
enum class EDisplay { coefficient, operator_order, product_t11, product_t22 };

ExMat op_e_z(const EvaluationAssignment& ea,
             EDisplay display = EDisplay::coefficient);

/// op_e_z plus x times total e.
ExMat op_e_x_z(const EvaluationAssignment& ea, const ExactComplex& x);

/// The classical lowering operator with coefficients l_i(2λ_i−l_i+1)z_i.
ExMat op_E_classical(const EvaluationAssignment& ea);

}  // namespace qkz
