#include "qkz/rmatrix.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qkz {

TensorSpace RMatrixBlock::pair_space(int m) const {
  TensorSpace sp;
  sp.lambdas = {lambda1, lambda2};
  sp.kinds = {kind1, kind2};
  sp.level = m;
  return sp;
}

namespace {

ExMat kron(const ExMat& a, const ExMat& b) {
  ExMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setConstant(ExactComplex(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int m = 0; m < b.cols(); ++m)
          out(i * b.rows() + k, j * b.cols() + m) = a(i, j) * b(k, m);
    }
  return out;
}

ExVec vec_of(const ExMat& m) {
  ExVec v(m.rows() * m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

ExMat unvec(const ExVec& v, int rows, int cols) {
  ExMat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
  return m;
}

struct EquationStack {
  std::vector<ExMat> lhs;
  std::vector<ExVec> rhs;

  void add(const ExMat& a, const ExVec& b) {
    lhs.push_back(a);
    rhs.push_back(b);
  }

  std::pair<ExMat, ExVec> assemble(int unknowns) const {
    int rows = 0;
    for (const auto& a : lhs) rows += static_cast<int>(a.rows());
    ExMat a(rows, unknowns);
    ExVec b(rows);
    int at = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      a.middleRows(at, lhs[i].rows()) = lhs[i];
      b.segment(at, rhs[i].size()) = rhs[i];
      at += static_cast<int>(lhs[i].rows());
    }
    return {a, b};
  }
};

// Appends the intertwining equations for generator (i, j, s) at pair level m
// to the system in vec(Q_m); ea12/ea21 are the two evaluation orders and
// q_prev is the already-solved Q_{m-1}.
void add_generator_equations(EquationStack& stack,
                             const EvaluationAssignment& ea12,
                             const EvaluationAssignment& ea21,
                             const ExMat& q_prev, int m, int i, int j, int s) {
  int d = m + 1;
  ExMat ident = exact_identity(d);
  if (i == j) {
    ExMat a = act_T(ea12, i, j, s);
    ExMat b = act_T(ea21, i, j, s);
    ExMat sys = kron(a.transpose(), ident) - kron(ident, b);
    ExVec zero(sys.rows());
    zero.setConstant(ExactComplex(0));
    stack.add(sys, zero);
  } else if (i == 2 && j == 1) {
    if (m == 0) return;
    ExMat a = act_T(ea12, i, j, s);
    ExMat b = act_T(ea21, i, j, s);
    stack.add(kron(exact_identity(d), b), vec_of(ExMat(q_prev * a)));
  } else {
    if (m == 0) return;
    EvaluationAssignment below12{at_level(ea12.space, m - 1), ea12.points};
    EvaluationAssignment below21{at_level(ea21.space, m - 1), ea21.points};
    ExMat a = act_T(below12, i, j, s);
    ExMat b = act_T(below21, i, j, s);
    stack.add(kron(a.transpose(), exact_identity(d)),
              vec_of(ExMat(b * q_prev)));
  }
}

struct CacheKey {
  Rational l1, l2;
  ExactComplex x;
  int level;

  bool operator<(const CacheKey& o) const {
    if (l1 != o.l1) return l1 < o.l1;
    if (l2 != o.l2) return l2 < o.l2;
    if (x.re != o.x.re) return x.re < o.x.re;
    if (x.im != o.x.im) return x.im < o.x.im;
    return level < o.level;
  }
};

ExMat flip_rows(const ExMat& q, int m) {
  // Row (a, b) of the result is row (b, a) of q in the descending-lex pair
  // listing (a, b) = (m, 0), (m-1, 1), ..., (0, m): position of (a, b) is
  // m - a.
  ExMat out(q.rows(), q.cols());
  for (int a = m; a >= 0; --a) out.row(m - a) = q.row(a);
  return out;
}

}  // namespace

RMatrixBlock r_matrix(const Rational& lambda1, const Rational& lambda2,
                      const ExactComplex& x, int level) {
  static std::map<CacheKey, RMatrixBlock> cache;
  static std::mutex cache_mutex;
  CacheKey key{lambda1, lambda2, x, level};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  RMatrixBlock result;
  result.lambda1 = lambda1;
  result.lambda2 = lambda2;
  result.x = x;
  result.level = level;

  TensorSpace sp12 = verma_space({lambda1, lambda2}, 0);
  TensorSpace sp21 = verma_space({lambda2, lambda1}, 0);
  std::vector<ExactComplex> pts12 = {x, ExactComplex(0)};
  std::vector<ExactComplex> pts21 = {ExactComplex(0), x};

  ExMat q_prev = exact_identity(1);
  result.blocks.push_back(exact_identity(1));

  for (int m = 1; m <= level; ++m) {
    int d = m + 1;
    EvaluationAssignment ea12{at_level(sp12, m), pts12};
    EvaluationAssignment ea21{at_level(sp21, m), pts21};

    EquationStack stack;
    for (int s = 1; s <= 2; ++s)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          add_generator_equations(stack, ea12, ea21, q_prev, m, i, j, s);

    auto [a, b] = stack.assemble(d * d);
    bool unique = false;
    ExVec solution;
    try {
      solution = solve_exact(a, b, &unique);
    } catch (const Error& e) {
      if (e.code == "inconsistent-system")
        throw Error("inconsistent-system",
                    "intertwiner equations are contradictory at level " +
                        std::to_string(m));
      throw;
    }
    if (!unique) {
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          add_generator_equations(stack, ea12, ea21, q_prev, m, i, j, 3);
      auto [a3, b3] = stack.assemble(d * d);
      solution = solve_exact(a3, b3, &unique);
      if (!unique)
        throw Error("non-unique-solution",
                    "intertwiner underdetermined at level " +
                        std::to_string(m) + "; x is non-generic");
    }
    ExMat q = unvec(solution, d, d);
    result.blocks.push_back(flip_rows(q, m));
    q_prev = q;
  }

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
  }
  return result;
}

RMatrixBlock factor_to_irreducible(const RMatrixBlock& r) {
  RMatrixBlock out;
  out.lambda1 = r.lambda1;
  out.lambda2 = r.lambda2;
  out.x = r.x;
  out.level = r.level;
  out.kind1 = FactorKind::irreducible;
  out.kind2 = FactorKind::irreducible;

  for (int m = 0; m <= r.level; ++m) {
    std::vector<MultiIndex> full = basis(r.pair_space(m));
    std::vector<MultiIndex> capped = basis(out.pair_space(m));
    std::vector<int> keep;
    std::vector<bool> kept(full.size(), false);
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (basis_index(capped, full[i]) >= 0) {
        keep.push_back(static_cast<int>(i));
        kept[i] = true;
      }
    }
    const ExMat& block = r.blocks[m];
    for (std::size_t col = 0; col < full.size(); ++col) {
      if (kept[col]) continue;
      for (std::size_t row = 0; row < full.size(); ++row)
        if (kept[row] && !block(static_cast<int>(row),
                                static_cast<int>(col)).is_zero())
          throw Error("submodule-not-preserved",
                      "capped submodule not preserved at level " +
                          std::to_string(m));
    }
    ExMat q(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        q(static_cast<int>(i), static_cast<int>(j)) =
            block(keep[i], keep[j]);
    out.blocks.push_back(q);
  }
  return out;
}

ExMat embed_pair_operator(const TensorSpace& sp, const RMatrixBlock& r, int a,
                          int b) {
  std::vector<MultiIndex> base = basis(sp);
  int dim = static_cast<int>(base.size());
  ExMat out(dim, dim);
  out.setConstant(ExactComplex(0));
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& li = base[col];
    int m = li[a] + li[b];
    std::vector<MultiIndex> pairs = basis(r.pair_space(m));
    MultiIndex source = {li[a], li[b]};
    int src = basis_index(pairs, source);
    if (src < 0)
      throw Error("parse-error", "pair index outside stored R-matrix basis");
    const ExMat& block = r.blocks[m];
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const ExactComplex& coeff = block(static_cast<int>(t), src);
      if (coeff.is_zero()) continue;
      MultiIndex target = li;
      target[a] = pairs[t][0];
      target[b] = pairs[t][1];
      int row = basis_index(base, target);
      out(row, col) += coeff;
    }
  }
  return out;
}

namespace {

RMatrixBlock pair_r(const ParamSet& ps, int m1, int j1,
                    const ExactComplex& shift, int level,
                    bool irreducible_modules) {
  ExactComplex arg = ps.z[m1 - 1] - ps.z[j1 - 1] + shift;
  RMatrixBlock r =
      r_matrix(ps.lambdas[m1 - 1], ps.lambdas[j1 - 1], arg, level);
  if (irreducible_modules) r = factor_to_irreducible(r);
  return r;
}

TensorSpace run_space(const ParamSet& ps, bool irreducible_modules) {
  return irreducible_modules ? irreducible_space(ps.lambdas, ps.l)
                             : verma_space(ps.lambdas, ps.l);
}

}  // namespace

ExMat qkz_operator(const ParamSet& ps, int m, bool irreducible_modules) {
  int n = ps.n();
  TensorSpace sp = run_space(ps, irreducible_modules);
  int dim = static_cast<int>(basis(sp).size());
  ExMat k = exact_identity(dim);
  for (int j = m - 1; j >= 1; --j)
    k = k * embed_pair_operator(
                sp, pair_r(ps, m, j, ExactComplex(ps.p), ps.l,
                           irreducible_modules),
                m - 1, j - 1);
  for (int j = n; j >= m + 1; --j)
    k = k * embed_pair_operator(
                sp, pair_r(ps, m, j, ExactComplex(0), ps.l,
                           irreducible_modules),
                m - 1, j - 1);
  return k;
}

ParamSet swap_params(const ParamSet& ps, int i) {
  ParamSet out = ps;
  std::swap(out.lambdas[i - 1], out.lambdas[i]);
  std::swap(out.z[i - 1], out.z[i]);
  return out;
}

ExMat swap_operator(const ParamSet& ps, int i, bool irreducible_modules) {
  TensorSpace sp = run_space(ps, irreducible_modules);
  TensorSpace sp_swapped = run_space(swap_params(ps, i), irreducible_modules);
  RMatrixBlock r = pair_r(ps, i, i + 1, ExactComplex(0), ps.l,
                          irreducible_modules);
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis(sp_swapped);
  int dim = static_cast<int>(dom.size());
  ExMat out(static_cast<int>(cod.size()), dim);
  out.setConstant(ExactComplex(0));
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& li = dom[col];
    int m = li[i - 1] + li[i];
    std::vector<MultiIndex> pairs = basis(r.pair_space(m));
    int src = basis_index(pairs, {li[i - 1], li[i]});
    const ExMat& block = r.blocks[m];
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const ExactComplex& coeff = block(static_cast<int>(t), src);
      if (coeff.is_zero()) continue;
      MultiIndex target = li;
      target[i - 1] = pairs[t][1];
      target[i] = pairs[t][0];
      int row = basis_index(cod, target);
      out(row, col) += coeff;
    }
  }
  return out;
}

FlatnessResult check_flatness(const ParamSet& ps, bool irreducible_modules) {
  FlatnessResult result;
  int n = ps.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ParamSet shift_j = ps;
      shift_j.z[j - 1] += ExactComplex(ps.p);
      ParamSet shift_i = ps;
      shift_i.z[i - 1] += ExactComplex(ps.p);
      ExMat lhs = qkz_operator(shift_j, i, irreducible_modules) *
                  qkz_operator(ps, j, irreducible_modules);
      ExMat rhs = qkz_operator(shift_i, j, irreducible_modules) *
                  qkz_operator(ps, i, irreducible_modules);
      for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
          if (!(lhs(r, c) == rhs(r, c))) {
            result.ok = false;
            result.witness = "pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ") entry (" +
                             std::to_string(r) + "," + std::to_string(c) +
                             ")";
            return result;
          }
    }
  }
  return result;
}

}  // namespace qkz
