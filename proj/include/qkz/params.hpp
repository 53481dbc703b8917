#pragma once

#include <string>
#include <vector>

#include "qkz/scalars.hpp"

namespace qkz {

/// Input data for one verification run: highest weights, evaluation points,
/// the step of the difference equation, the weight level, and the kernel
/// exponent used for resonant block spaces.
struct ParamSet {
  std::vector<Rational> lambdas;
  std::vector<ExactComplex> z;
  Rational p;
  int l = 0;
  int k = 0;

  int n() const { return static_cast<int>(lambdas.size()); }
};

/// Outcome of the genericity checks. Each flag covers one family of
/// non-degeneracy constraints; failures lists every violated instance.
struct ConditionReport {
  bool step_ok = true;
  bool small_integers_ok = true;
  bool weight_shifts_ok = true;
  bool pair_separation_ok = true;
  bool nondominant_step_ok = true;
  bool nondominant_shifts_ok = true;
  bool resonant = false;
  int resonance_order = 0;
  std::vector<std::string> failures;

  bool all_ok() const {
    return step_ok && small_integers_ok && weight_shifts_ok &&
           pair_separation_ok && nondominant_step_ok && nondominant_shifts_ok;
  }
};

/// Reads a JSON config file. Rationals are given as strings ("1/2", "-3",
/// "0.25"); complex numbers as two-element arrays [re, im]. Keys: lambdas,
/// z, p, l, and optional k (defaults to the resonance order when the
/// parameters are resonant, otherwise 0).
ParamSet load_config(const std::string& path);
ParamSet parse_config(const std::string& json_text);

/// Sum of 2*lambda_i over all factors.
Rational weight_sum(const ParamSet& ps);

/// The positive integer r with sum(2 lambda_i) - 2l + p + r + 1 = 0, or 0
/// when no such integer exists.
int resonance_order(const ParamSet& ps);

/// Whether a highest weight labels a finite-dimensional irreducible,
/// i.e. 2*lambda is a nonnegative integer.
bool is_dominant(const Rational& lambda);

/// A multi-index is admissible when every entry at a dominant weight
/// respects the cap l_i <= 2 lambda_i.
bool is_admissible(const std::vector<int>& lbar,
                   const std::vector<Rational>& lambdas);

/// Runs every genericity check on the parameter set and reports the
/// resonance data alongside.
ConditionReport validate(const ParamSet& ps);

}  // namespace qkz
