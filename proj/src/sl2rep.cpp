#include "qkz/sl2rep.hpp"

#include <algorithm>

namespace qkz {

int TensorSpace::cap(int i) const {
  if (kinds[i] != FactorKind::irreducible) return -1;
  if (!is_dominant(lambdas[i])) return -1;
  Rational twice = 2 * lambdas[i];
  return static_cast<int>(boost::multiprecision::numerator(twice));
}

TensorSpace verma_space(const std::vector<Rational>& lambdas, int level) {
  TensorSpace sp;
  sp.lambdas = lambdas;
  sp.kinds.assign(lambdas.size(), FactorKind::verma);
  sp.level = level;
  return sp;
}

TensorSpace irreducible_space(const std::vector<Rational>& lambdas, int level) {
  TensorSpace sp;
  sp.lambdas = lambdas;
  sp.kinds.assign(lambdas.size(), FactorKind::irreducible);
  sp.level = level;
  return sp;
}

TensorSpace at_level(const TensorSpace& sp, int level) {
  TensorSpace out = sp;
  out.level = level;
  return out;
}

namespace {

void enumerate(const TensorSpace& sp, int factor, int remaining,
               MultiIndex& current, std::vector<MultiIndex>& out) {
  if (factor == sp.n() - 1) {
    int cap = sp.cap(factor);
    if (cap >= 0 && remaining > cap) return;
    current[factor] = remaining;
    out.push_back(current);
    return;
  }
  int cap = sp.cap(factor);
  int top = (cap >= 0) ? std::min(cap, remaining) : remaining;
  for (int v = top; v >= 0; --v) {
    current[factor] = v;
    enumerate(sp, factor + 1, remaining - v, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> basis_at(const TensorSpace& sp, int level) {
  std::vector<MultiIndex> out;
  if (level < 0 || sp.n() == 0) return out;
  MultiIndex current(sp.n(), 0);
  enumerate(sp, 0, level, current, out);
  return out;
}

std::vector<MultiIndex> basis(const TensorSpace& sp) {
  return basis_at(sp, sp.level);
}

int basis_index(const std::vector<MultiIndex>& b, const MultiIndex& idx) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == idx) return static_cast<int>(i);
  return -1;
}

namespace {

ExMat zero_map(int rows, int cols) {
  ExMat m(rows, cols);
  m.setConstant(ExactComplex(0));
  return m;
}

}  // namespace

ExMat act_e(const TensorSpace& sp, int factor) {
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis_at(sp, sp.level - 1);
  ExMat m = zero_map(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    for (int i = 0; i < sp.n(); ++i) {
      if (factor >= 0 && i != factor) continue;
      int li = dom[c][i];
      if (li == 0) continue;
      MultiIndex target = dom[c];
      target[i] -= 1;
      int r = basis_index(cod, target);
      Rational coeff = li * (2 * sp.lambdas[i] - li + 1);
      m(r, static_cast<int>(c)) += ExactComplex(coeff);
    }
  }
  return m;
}

ExMat act_f(const TensorSpace& sp, int factor) {
  std::vector<MultiIndex> dom = basis(sp);
  std::vector<MultiIndex> cod = basis_at(sp, sp.level + 1);
  ExMat m = zero_map(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    for (int i = 0; i < sp.n(); ++i) {
      if (factor >= 0 && i != factor) continue;
      MultiIndex target = dom[c];
      target[i] += 1;
      int cap = sp.cap(i);
      if (cap >= 0 && target[i] > cap) continue;
      int r = basis_index(cod, target);
      m(r, static_cast<int>(c)) += ExactComplex(1);
    }
  }
  return m;
}

ExMat act_h(const TensorSpace& sp, int factor) {
  std::vector<MultiIndex> dom = basis(sp);
  ExMat m = zero_map(static_cast<int>(dom.size()), static_cast<int>(dom.size()));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    Rational value(0);
    for (int i = 0; i < sp.n(); ++i) {
      if (factor >= 0 && i != factor) continue;
      value += sp.lambdas[i] - dom[c][i];
    }
    m(static_cast<int>(c), static_cast<int>(c)) = ExactComplex(value);
  }
  return m;
}

ExMat singular_basis(const TensorSpace& sp) {
  return nullspace_exact(act_e(sp));
}

int singular_dimension(const TensorSpace& sp) {
  return static_cast<int>(singular_basis(sp).cols());
}

}  // namespace qkz
