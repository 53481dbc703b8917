#include "qkz/gamma.hpp"

#include <map>
#include <vector>

namespace qkz {

Real gamma_pole_tolerance() { return pow(Real(10), -10); }

Rational bernoulli_number(unsigned n) {
  static std::vector<Rational> cache{Rational(1)};
  // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rational sum = 0;
    Rational binom = 1;  // C(m+1, 0)
    for (unsigned k = 0; k < m; ++k) {
      sum += binom * cache[k];
      binom = binom * Rational(int(m) + 1 - int(k)) / Rational(int(k) + 1);
    }
    cache.push_back(-sum / Rational(int(m) + 1));
  }
  return cache[n];
}

namespace {

struct StirlingParams {
  Real radius;
  std::vector<Real> coeffs;  // B_{2k} / (2k(2k-1)), k = 1..K
  Real log_two_pi;
};

const StirlingParams& stirling_params() {
  static std::map<unsigned, StirlingParams> cache;
  unsigned digits = precision_digits();
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;
  StirlingParams sp;
  sp.radius = Real(0.55 * digits + 12.0);
  unsigned terms = static_cast<unsigned>(1.1 * (0.55 * digits + 12.0)) + 4;
  for (unsigned k = 1; k <= terms; ++k) {
    Rational c = bernoulli_number(2 * k) / Rational(2 * int(k) * (2 * int(k) - 1));
    sp.coeffs.push_back(make_real(c));
  }
  using boost::multiprecision::log;
  sp.log_two_pi = log(2 * pi_value());
  return cache.emplace(digits, std::move(sp)).first->second;
}

// Stirling asymptotic series; requires |w| >= radius and Re w > 0.
Cx stirling(const Cx& w) {
  const StirlingParams& sp = stirling_params();
  Cx half(Real(0.5));
  Cx result = (w - half) * log(w) - w + half * Cx(sp.log_two_pi);
  Cx w2inv = Cx(1) / (w * w);
  Cx term = Cx(1) / w;
  for (const Real& c : sp.coeffs) {
    result += c * term;
    term *= w2inv;
  }
  return result;
}

Cx log_gamma_right(Cx w) {
  // Shift into the Stirling region: log G(w) = log G(w+K) - sum log(w+j).
  // Principal logs are exact here since every w+j has Re > 0.
  const StirlingParams& sp = stirling_params();
  Cx shift(Real(0));
  while (abs(w) < sp.radius) {
    shift += log(w);
    w += Cx(1);
  }
  return stirling(w) - shift;
}

}  // namespace

Cx log_sin_pi(const Cx& a) {
  using boost::multiprecision::log;
  Real pi = pi_value();
  Cx ipi(Real(0), pi);
  Cx log_half{Real(log(Real(0.5)))};
  if (a.im >= 0) {
    // sin(pi a) = (i/2) e^{-i pi a} (1 - e^{2 i pi a}),  |e^{2 i pi a}| <= 1
    Cx rest = log(Cx(1) - exp(Cx(-2 * pi * a.im, 2 * pi * a.re)));
    return log_half + Cx(Real(0), pi / 2) - ipi * a + rest;
  }
  Cx rest = log(Cx(1) - exp(Cx(2 * pi * a.im, -2 * pi * a.re)));
  return log_half - Cx(Real(0), pi / 2) + ipi * a + rest;
}

Cx log_gamma(const Cx& a) {
  Real tol = gamma_pole_tolerance();
  if (a.re < tol) {
    using boost::multiprecision::abs;
    using boost::multiprecision::round;
    Real nearest = round(a.re);
    if (nearest <= 0 && abs(a.re - nearest) < tol && abs(a.im) < tol)
      throw Error("pole-at-nonpositive-integer",
                  "log_gamma at " + cx_string(a));
  }
  if (a.re >= Real(0.5)) return log_gamma_right(a);
  using boost::multiprecision::log;
  Cx log_pi(log(pi_value()));
  return log_pi - log_sin_pi(a) - log_gamma_right(Cx(1) - a);
}

}  // namespace qkz
