#include "qkz/yangian.hpp"

namespace qkz {

EvaluationAssignment evaluation_assignment(const TensorSpace& sp,
                                           const std::vector<ExactComplex>& x) {
  if (static_cast<int>(x.size()) != sp.n())
    throw Error("parse-error", "one evaluation point per factor required");
  return EvaluationAssignment{sp, x};
}

namespace {

ExactComplex power(const ExactComplex& x, int e) {
  ExactComplex out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Single-factor matrix element of T^{(r)}_{ab} on f^m v against f^{m'} v,
// returned as (coefficient, exponent shift); a zero coefficient marks a
// vanishing term.
struct FactorTerm {
  ExactComplex coeff;
  int shift;
};

FactorTerm factor_term(int a, int b, int r, const ExactComplex& x,
                       const Rational& lambda, int m) {
  if (r == 0) {
    if (a == b) return {ExactComplex(1), 0};
    return {ExactComplex(0), 0};
  }
  ExactComplex xp = power(x, r - 1);
  if (a == 1 && b == 1) return {xp * ExactComplex(lambda - m), 0};
  if (a == 2 && b == 2) return {ExactComplex(0) - xp * ExactComplex(lambda - m), 0};
  if (a == 1 && b == 2) return {xp, +1};
  return {xp * ExactComplex(Rational(m) * (2 * lambda - m + 1)), -1};
}

struct TBuilder {
  const EvaluationAssignment& ea;
  const std::vector<MultiIndex>& cod;
  ExMat& out;
  int col;
  const MultiIndex& dom_idx;
  int j_final;
  int s_total;

  void walk(int factor, int state, int s_used, MultiIndex& target,
            const ExactComplex& acc) {
    int n = ea.space.n();
    if (factor == n) {
      if (state != j_final || s_used != s_total) return;
      int row = basis_index(cod, target);
      if (row >= 0) out(row, col) += acc;
      return;
    }
    for (int next = 1; next <= 2; ++next) {
      for (int r = 0; r + s_used <= s_total; ++r) {
        FactorTerm ft = factor_term(state, next, r, ea.points[factor],
                                    ea.space.lambdas[factor],
                                    dom_idx[factor]);
        if (ft.coeff.is_zero()) continue;
        int new_val = dom_idx[factor] + ft.shift;
        if (new_val < 0) continue;
        int cap = ea.space.cap(factor);
        if (cap >= 0 && new_val > cap) continue;
        target[factor] = new_val;
        walk(factor + 1, next, s_used + r, target, acc * ft.coeff);
        target[factor] = dom_idx[factor];
      }
    }
  }
};

}  // namespace

ExMat act_T(const EvaluationAssignment& ea, int i, int j, int s) {
  if (i < 1 || i > 2 || j < 1 || j > 2 || s < 0)
    throw Error("parse-error", "generator indices out of range");
  const TensorSpace& sp = ea.space;
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis_at(sp, sp.level + (j - i));
  ExMat out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  out.setConstant(ExactComplex(0));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    MultiIndex target = dom[c];
    TBuilder builder{ea, cod, out, static_cast<int>(c), dom[c], j, s};
    builder.walk(0, i, 0, target, ExactComplex(1));
  }
  return out;
}

namespace {

// Lowering operator with per-term coefficient
// l_j(2λ_j−l_j+1)(z_j + λ_j − l_j + extra + Σ_{s>j} 2(λ_s−l_s)).
ExMat lowering_with_tail(const EvaluationAssignment& ea, int extra) {
  const TensorSpace& sp = ea.space;
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis_at(sp, sp.level - 1);
  ExMat out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  out.setConstant(ExactComplex(0));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    const MultiIndex& li = dom[c];
    for (int j = 0; j < sp.n(); ++j) {
      if (li[j] == 0) continue;
      MultiIndex target = li;
      target[j] -= 1;
      int row = basis_index(cod, target);
      if (row < 0) continue;
      Rational tail(0);
      for (int s = j + 1; s < sp.n(); ++s)
        tail += 2 * (sp.lambdas[s] - li[s]);
      ExactComplex bracket =
          ea.points[j] + ExactComplex(sp.lambdas[j] - li[j] + extra + tail);
      Rational front = Rational(li[j]) * (2 * sp.lambdas[j] - li[j] + 1);
      out(row, static_cast<int>(c)) += ExactComplex(front) * bracket;
    }
  }
  return out;
}

}  // namespace

ExMat op_e_z(const EvaluationAssignment& ea, EDisplay display) {
  switch (display) {
    case EDisplay::coefficient:
      return lowering_with_tail(ea, 0);
    case EDisplay::operator_order:
      return lowering_with_tail(ea, 1);
    case EDisplay::product_t11:
    case EDisplay::product_t22: {
      int which = (display == EDisplay::product_t11) ? 1 : 2;
      ExMat t21_2 = act_T(ea, 2, 1, 2);
      ExMat t21_1 = act_T(ea, 2, 1, 1);
      EvaluationAssignment below{at_level(ea.space, ea.space.level - 1),
                                 ea.points};
      ExMat diag = act_T(below, which, which, 1);
      return t21_2 - diag * t21_1;
    }
  }
  throw Error("parse-error", "unknown display");
}

ExMat op_e_x_z(const EvaluationAssignment& ea, const ExactComplex& x) {
  return op_e_z(ea) + act_e(ea.space) * x;
}

ExMat op_E_classical(const EvaluationAssignment& ea) {
  const TensorSpace& sp = ea.space;
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis_at(sp, sp.level - 1);
  ExMat out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  out.setConstant(ExactComplex(0));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    const MultiIndex& li = dom[c];
    for (int j = 0; j < sp.n(); ++j) {
      if (li[j] == 0) continue;
      MultiIndex target = li;
      target[j] -= 1;
      int row = basis_index(cod, target);
      if (row < 0) continue;
      Rational front = Rational(li[j]) * (2 * sp.lambdas[j] - li[j] + 1);
      out(row, static_cast<int>(c)) += ExactComplex(front) * ea.points[j];
    }
  }
  return out;
}

}  // namespace qkz
