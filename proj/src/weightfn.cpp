#include "qkz/weightfn.hpp"

#include <map>
#include <queue>

namespace qkz {

namespace {

Real guard_eps(const Cx& d) {
  Real scale = abs(d);
  if (scale < 1) scale = 1;
  return Real("1e-8") * scale;
}

Cx checked_div(const Cx& num, const Cx& den, const Real& eps) {
  if (abs(den) < eps) {
    throw Error("pole-proximity", "denominator magnitude below the guard");
  }
  return num / den;
}

struct TrigContext {
  Real pip;  // pi / p
  std::vector<Cx> zc;
  std::vector<Real> lam;

  explicit TrigContext(const ParamSet& ps)
      : pip(pi_value() / make_real(ps.p)) {
    for (const auto& z : ps.z) zc.push_back(to_cx(z));
    for (const auto& l : ps.lambdas) lam.push_back(make_real(l));
  }

  Cx sin_scaled(const Cx& x) const { return qkz::sin(x * pip); }
  Cx exp_i_scaled(const Cx& x) const {
    return qkz::exp(Cx(-x.im * pip, x.re * pip));
  }
};

std::vector<int> block_offsets(const MultiIndex& lbar) {
  std::vector<int> off(lbar.size() + 1, 0);
  for (std::size_t m = 0; m < lbar.size(); ++m) off[m + 1] = off[m] + lbar[m];
  return off;
}

}  // namespace

Cx sym_ratio(SymKind kind, const Cx& d, const Rational& p) {
  if (kind == SymKind::rational) {
    Cx num = d - Cx(1);
    Cx den = d + Cx(1);
    return checked_div(num, den, guard_eps(d));
  }
  Real pip = pi_value() / make_real(p);
  Cx num = qkz::sin((d - Cx(1)) * pip);
  Cx den = qkz::sin((d + Cx(1)) * pip);
  return checked_div(num, den, guard_eps(d));
}

std::vector<std::vector<int>> reduced_words(int l) {
  std::vector<int> id(l);
  for (int i = 0; i < l; ++i) id[i] = i;
  std::map<std::vector<int>, std::vector<int>> seen;
  std::queue<std::vector<int>> queue;
  seen[id] = {};
  queue.push(id);
  while (!queue.empty()) {
    std::vector<int> perm = queue.front();
    queue.pop();
    const std::vector<int>& word = seen[perm];
    for (int s = 0; s + 1 < l; ++s) {
      std::vector<int> next = perm;
      std::swap(next[s], next[s + 1]);
      if (seen.count(next)) continue;
      std::vector<int> next_word = word;
      next_word.push_back(s);
      seen[next] = next_word;
      queue.push(next);
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(seen.size());
  for (const auto& kv : seen) out.push_back(kv.second);
  return out;
}

Cx apply_word(const TFunc& f, const std::vector<int>& word, std::vector<Cx> t,
              SymKind kind, const Rational& p) {
  Cx prefactor(1);
  for (int s : word) {
    prefactor *= sym_ratio(kind, t[s] - t[s + 1], p);
    std::swap(t[s], t[s + 1]);
  }
  return prefactor * f(t);
}

TFunc symmetrize(TFunc f, SymKind kind, int l, const Rational& p) {
  std::vector<std::vector<int>> words = reduced_words(l);
  return [f = std::move(f), kind, p, words](const std::vector<Cx>& t) {
    Cx total(0);
    for (const auto& word : words) total += apply_word(f, word, t, kind, p);
    return total;
  };
}

Real pole_epsilon(const std::vector<Cx>& t, const ParamSet& ps) {
  Real scale(1);
  for (const auto& x : t) {
    Real a = abs(x);
    if (a > scale) scale = a;
  }
  for (const auto& z : ps.z) {
    Real a = abs(to_cx(z));
    if (a > scale) scale = a;
  }
  return Real("1e-8") * scale;
}

Cx eta(const MultiIndex& lbar, const std::vector<Cx>& t, const ParamSet& ps) {
  Real eps = pole_epsilon(t, ps);
  std::vector<Cx> zc;
  std::vector<Real> lam;
  for (const auto& z : ps.z) zc.push_back(to_cx(z));
  for (const auto& l : ps.lambdas) lam.push_back(make_real(l));
  std::vector<int> off = block_offsets(lbar);
  Cx value(1);
  for (int m = 0; m < ps.n(); ++m) {
    Integer fact(1);
    for (int s = 2; s <= lbar[m]; ++s) fact *= s;
    value = value / Cx(Real(fact));
    for (int j = off[m]; j < off[m + 1]; ++j) {
      const Cx& tj = t[j];
      value *= checked_div(Cx(1), tj - zc[m] - Cx(lam[m]), eps);
      for (int k = 0; k < m; ++k) {
        value *= checked_div(tj - zc[k] + Cx(lam[k]),
                             tj - zc[k] - Cx(lam[k]), eps);
      }
    }
  }
  return value;
}

Cx w_rational(const MultiIndex& lbar, const std::vector<Cx>& t,
              const ParamSet& ps) {
  int l = 0;
  for (int v : lbar) l += v;
  TFunc core = [lbar, ps](const std::vector<Cx>& tt) {
    return eta(lbar, tt, ps);
  };
  return symmetrize(std::move(core), SymKind::rational, l, ps.p)(t);
}

Cx W_trig(const MultiIndex& lbar, const std::vector<Cx>& t,
          const ParamSet& ps) {
  int l = 0;
  for (int v : lbar) l += v;
  TFunc core = [lbar, ps](const std::vector<Cx>& tt) {
    TrigContext cx(ps);
    Real eps = pole_epsilon(tt, ps);
    std::vector<int> off = block_offsets(lbar);
    Cx value(1);
    for (int m = 0; m < ps.n(); ++m) {
      for (int s = 1; s <= lbar[m]; ++s) {
        value *= checked_div(cx.sin_scaled(Cx(1)), cx.sin_scaled(Cx(s)), eps);
      }
      for (int j = off[m]; j < off[m + 1]; ++j) {
        const Cx& tj = tt[j];
        value *= checked_div(cx.exp_i_scaled(cx.zc[m] - tj),
                             cx.sin_scaled(tj - cx.zc[m] - Cx(cx.lam[m])),
                             eps);
        for (int k = 0; k < m; ++k) {
          value *= checked_div(cx.sin_scaled(tj - cx.zc[k] + Cx(cx.lam[k])),
                               cx.sin_scaled(tj - cx.zc[k] - Cx(cx.lam[k])),
                               eps);
        }
      }
    }
    return value;
  };
  return symmetrize(std::move(core), SymKind::trigonometric, l, ps.p)(t);
}

Cx W_sing(const MultiIndex& lbar, const std::vector<Cx>& t,
          const ParamSet& ps) {
  int l = 0;
  for (int v : lbar) l += v;
  TFunc core = [lbar, ps](const std::vector<Cx>& tt) {
    TrigContext cx(ps);
    Real eps = pole_epsilon(tt, ps);
    std::vector<int> off = block_offsets(lbar);
    Cx value(1);
    for (int m = 0; m + 1 < ps.n(); ++m) {
      Cx gap = cx.zc[m] - Cx(cx.lam[m]) - cx.zc[m + 1] - Cx(cx.lam[m + 1]);
      for (int s = 1; s <= lbar[m]; ++s) {
        value *= checked_div(cx.sin_scaled(Cx(1)), cx.sin_scaled(Cx(s)), eps);
        value *= cx.sin_scaled(gap + Cx(s - 1));
      }
      for (int j = off[m]; j < off[m + 1]; ++j) {
        const Cx& tj = tt[j];
        Cx den = cx.sin_scaled(tj - cx.zc[m] - Cx(cx.lam[m])) *
                 cx.sin_scaled(tj - cx.zc[m + 1] - Cx(cx.lam[m + 1]));
        value *= checked_div(Cx(1), den, eps);
        for (int k = 0; k < m; ++k) {
          value *= checked_div(cx.sin_scaled(tj - cx.zc[k] + Cx(cx.lam[k])),
                               cx.sin_scaled(tj - cx.zc[k] - Cx(cx.lam[k])),
                               eps);
        }
      }
    }
    return value;
  };
  return symmetrize(std::move(core), SymKind::trigonometric, l, ps.p)(t);
}

Cx weight_coefficient(const MultiIndex& lbar, const ParamSet& ps) {
  Real pip = pi_value() / make_real(ps.p);
  Cx sin_unit = qkz::sin(Cx(pip));
  Cx value(1);
  for (int m = 0; m < ps.n(); ++m) {
    for (int s = 0; s < lbar[m]; ++s) {
      Cx a = qkz::sin(Cx(Real(s + 1) * pip));
      Cx b = qkz::sin(to_cx(ExactComplex(2 * ps.lambdas[m] - s)) * pip);
      value *= a * b / sin_unit;
    }
  }
  return value;
}

TFunc map_b(const CxVec& v, const ParamSet& ps) {
  TensorSpace sp = irreducible_space(ps.lambdas, ps.l);
  std::vector<MultiIndex> b = basis(sp);
  if (static_cast<int>(b.size()) != v.size()) {
    throw Error("parse-error", "coordinate vector does not match the basis");
  }
  std::vector<Cx> coeffs;
  for (std::size_t i = 0; i < b.size(); ++i) {
    coeffs.push_back(v(static_cast<int>(i)) * weight_coefficient(b[i], ps));
  }
  return [b, coeffs, ps](const std::vector<Cx>& t) {
    Cx total(0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (coeffs[i] == Cx(0)) continue;
      total += coeffs[i] * W_trig(b[i], t, ps);
    }
    return total;
  };
}

TFunc fq_on_trig(TFunc x, int l, const ParamSet& ps) {
  QValue qv = make_qvalue(ps.p);
  Rational lam_sum = 0;
  for (const auto& lam : ps.lambdas) lam_sum += lam;
  Cx front = q_power(qv, -(l + lam_sum));
  Cx level_phase = q_power(qv, 2 * Rational(l));
  Cx weight_phase = q_power(qv, 2 * lam_sum);
  TFunc inner = [x, ps, l, level_phase,
                 weight_phase](const std::vector<Cx>& t) {
    TrigContext cx(ps);
    Real eps = pole_epsilon(t, ps);
    std::vector<Cx> rest(t.begin() + 1, t.end());
    Cx prod = level_phase;
    for (int m = 0; m < ps.n(); ++m) {
      prod *= checked_div(cx.sin_scaled(t[0] - cx.zc[m] + Cx(cx.lam[m])),
                          cx.sin_scaled(t[0] - cx.zc[m] - Cx(cx.lam[m])),
                          eps);
    }
    for (int b = 1; b <= l; ++b) {
      prod *= checked_div(cx.sin_scaled(t[0] - t[b] - Cx(1)),
                          cx.sin_scaled(t[0] - t[b] + Cx(1)), eps);
    }
    return x(rest) * (prod - weight_phase);
  };
  return [inner, front, l, ps](const std::vector<Cx>& t) {
    Cx total(0);
    for (int a = 1; a <= l + 1; ++a) {
      std::vector<int> word;
      for (int s = 0; s <= a - 2; ++s) word.push_back(s);
      for (int s = a - 3; s >= 0; --s) word.push_back(s);
      total += apply_word(inner, word, t, SymKind::trigonometric, ps.p);
    }
    return front * total;
  };
}

}  // namespace qkz
