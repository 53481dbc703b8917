#include "qkz/blocks.hpp"

namespace qkz {

namespace {

BlocksSpace kernel_space(const ParamSet& ps, bool classical) {
  BlocksSpace out;
  out.ps = ps;
  out.k = resonance_order(ps);
  TensorSpace sp = irreducible_space(ps.lambdas, ps.l);
  ExMat sing = singular_basis(sp);
  if (out.k == 0 || out.k > ps.l) {
    out.basis = sing;
    return out;
  }
  ExMat power = lowering_power(ps, out.k, ExactComplex(0), classical);
  ExMat restricted = power * sing;
  ExMat coeffs = nullspace_exact(restricted);
  out.basis = sing * coeffs;
  return out;
}

}  // namespace

ExMat lowering_power(const ParamSet& ps, int k, const ExactComplex& x,
                     bool classical) {
  TensorSpace sp = irreducible_space(ps.lambdas, ps.l);
  std::vector<MultiIndex> top = basis(sp);
  ExMat power = exact_identity(static_cast<int>(top.size()));
  for (int step = 0; step < k; ++step) {
    EvaluationAssignment ea{at_level(sp, ps.l - step), ps.z};
    ExMat op = classical ? op_E_classical(ea) : op_e_x_z(ea, x);
    power = ExMat(op * power);
  }
  return power;
}

BlocksSpace conformal_blocks(const ParamSet& ps) {
  return kernel_space(ps, false);
}

BlocksSpace classical_blocks_N(const ParamSet& ps) {
  return kernel_space(ps, true);
}

CheckOutcome check_invariance(const ParamSet& ps) {
  CheckOutcome out;
  BlocksSpace here = conformal_blocks(ps);
  for (int i = 1; i <= ps.n(); ++i) {
    ParamSet shifted = ps;
    shifted.z[i - 1] += ExactComplex(ps.p);
    BlocksSpace there = conformal_blocks(shifted);
    ExMat k_op = qkz_operator(ps, i, true);
    ExMat image = k_op * here.basis;
    if (!same_span_exact(there.basis, image)) {
      out.ok = false;
      out.witness = "qKZ direction " + std::to_string(i);
      return out;
    }
  }
  for (int i = 1; i + 1 <= ps.n(); ++i) {
    ParamSet swapped = swap_params(ps, i);
    BlocksSpace there = conformal_blocks(swapped);
    ExMat s_op = swap_operator(ps, i, true);
    ExMat image = s_op * here.basis;
    if (!same_span_exact(there.basis, image)) {
      out.ok = false;
      out.witness = "swap at position " + std::to_string(i);
      return out;
    }
  }
  return out;
}

bool check_x_independence(const ParamSet& ps,
                          const std::vector<ExactComplex>& xs) {
  int k = resonance_order(ps);
  if (k == 0) return true;
  TensorSpace sp = irreducible_space(ps.lambdas, ps.l);
  ExMat sing = singular_basis(sp);
  bool first = true;
  ExMat reference;
  for (const auto& x : xs) {
    ExMat power = lowering_power(ps, k, x, false);
    ExMat coeffs = nullspace_exact(ExMat(power * sing));
    ExMat kernel = sing * coeffs;
    if (first) {
      reference = kernel;
      first = false;
    } else if (!same_span_exact(reference, kernel)) {
      return false;
    }
  }
  return true;
}

DimensionReport dimension_report(const ParamSet& ps) {
  DimensionReport rep;
  int k = resonance_order(ps);
  TensorSpace sp = irreducible_space(ps.lambdas, ps.l);
  rep.dim_sing_l = singular_dimension(sp);
  rep.dim_sing_lmk =
      (k > 0 && k <= ps.l)
          ? singular_dimension(at_level(sp, ps.l - k))
          : rep.dim_sing_l;
  rep.dim_C = static_cast<int>(conformal_blocks(ps).basis.cols());
  rep.dim_N = static_cast<int>(classical_blocks_N(ps).basis.cols());
  rep.quotient_dim = rep.dim_sing_l - rep.dim_sing_lmk;
  rep.equality_holds =
      rep.dim_C == rep.dim_N && rep.dim_C == rep.quotient_dim;
  rep.inequality_holds = rep.dim_N >= rep.dim_C;
  rep.good_condition = true;
  rep.bad_condition = true;
  for (const auto& lam : ps.lambdas) {
    if (!(2 * lam <= -ps.p - 2)) rep.good_condition = false;
    if (!(Rational(ps.l) <= 2 * lam)) rep.bad_condition = false;
  }
  return rep;
}

}  // namespace qkz
