#pragma once

#include <functional>
#include <vector>

#include "qkz/linalg.hpp"
#include "qkz/params.hpp"
#include "qkz/sl2rep.hpp"

namespace qkz {

// Function of a tuple of complex points t_1..t_l.
using TFunc = std::function<Cx(const std::vector<Cx>&)>;

enum class SymKind { rational, trigonometric };

// Prefactor attached to a simple transposition with difference d = t_i -
// t_{i+1}: (d-1)/(d+1), or sin(pi(d-1)/p)/sin(pi(d+1)/p).
Cx sym_ratio(SymKind kind, const Cx& d, const Rational& p);

// One fixed reduced word per permutation of S_l, breadth-first over the
// simple transpositions. Word entry i means the transposition (i, i+1),
// zero-based; identity is the empty word.
std::vector<std::vector<int>> reduced_words(int l);

// Evaluate [f]_sigma at t, sigma given by a word applied outermost first.
Cx apply_word(const TFunc& f, const std::vector<int>& word, std::vector<Cx> t,
              SymKind kind, const Rational& p);

// t -> sum of [f]_sigma(t) over all of S_l.
TFunc symmetrize(TFunc f, SymKind kind, int l, const Rational& p);

// Scale-aware pole guard threshold: 1e-8 times max(1, |t_j|, |z_i|).
Real pole_epsilon(const std::vector<Cx>& t, const ParamSet& ps);

// The summand of the rational weight function, a plain product over the
// blocks of lbar.
Cx eta(const MultiIndex& lbar, const std::vector<Cx>& t, const ParamSet& ps);

Cx w_rational(const MultiIndex& lbar, const std::vector<Cx>& t,
              const ParamSet& ps);
Cx W_trig(const MultiIndex& lbar, const std::vector<Cx>& t,
          const ParamSet& ps);
// lbar has n-1 entries; the result spans the singular part of the
// trigonometric space.
Cx W_sing(const MultiIndex& lbar, const std::vector<Cx>& t,
          const ParamSet& ps);

Cx weight_coefficient(const MultiIndex& lbar, const ParamSet& ps);

// Linear extension of basis vector lbar -> c_lbar * W_lbar; v holds
// coordinates in the level-l multi-index basis of the capped tensor product.
TFunc map_b(const CxVec& v, const ParamSet& ps);

// Raising operator on the trigonometric function space: arity l in, l+1 out.
TFunc fq_on_trig(TFunc x, int l, const ParamSet& ps);

}  // namespace qkz
