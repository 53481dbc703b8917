#include "qkz/scalars.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <sstream>

namespace qkz {

namespace {
unsigned g_digits = 0;
}

void set_precision(unsigned digits) {
  if (digits < 15) throw Error("bad-precision", "precision must be >= 15 digits");
  Real::default_precision(digits);
  g_digits = digits;
}

unsigned precision_digits() {
  if (g_digits == 0) throw Error("bad-precision", "set_precision was never called");
  return g_digits;
}

Real make_real(const Rational& r) {
  return Real(Integer(numerator(r))) / Real(Integer(denominator(r)));
}

Real pi_value() {
  static std::map<unsigned, Real> cache;
  auto it = cache.find(precision_digits());
  if (it != cache.end()) return it->second;
  Real pi = boost::math::constants::pi<Real>();
  cache.emplace(precision_digits(), pi);
  return pi;
}

Real tol_residual() { return pow(Real(10), -int(precision_digits()) + 10); }

Real tol_rank() { return pow(Real(10), -int(precision_digits() / 2)); }

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return Error("parse-error", "not a rational: '" + s + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (digits.empty()) throw bad();
  Rational value;
  if (i == s.size()) {
    value = Rational(Integer(digits));
  } else if (s[i] == '/') {
    std::string den = s.substr(i + 1);
    if (den.empty()) throw bad();
    for (char c : den)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer d(den);
    if (d == 0) throw Error("parse-error", "zero denominator: '" + s + "'");
    value = Rational(Integer(digits), d);
  } else if (s[i] == '.') {
    std::string frac = s.substr(i + 1);
    if (frac.empty()) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    value = Rational(Integer(digits) * scale + Integer(frac), scale);
  } else {
    throw bad();
  }
  return neg ? Rational(-value) : value;
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool in_pz(const Rational& x, const Rational& p) {
  if (p == 0) return x == 0;
  return is_integer(Rational(x / p));
}

Integer floor_rational(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Cx& Cx::operator/=(const Cx& o) {
  Real d = norm2(o);
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const Cx& a) {
  using boost::multiprecision::sqrt;
  return sqrt(norm2(a));
}

Real arg(const Cx& a) {
  using boost::multiprecision::atan2;
  return atan2(a.im, a.re);
}

Cx exp(const Cx& a) {
  using boost::multiprecision::cos;
  using boost::multiprecision::exp;
  using boost::multiprecision::sin;
  Real m = exp(a.re);
  return Cx(m * cos(a.im), m * sin(a.im));
}

Cx log(const Cx& a) {
  using boost::multiprecision::log;
  return Cx(log(abs(a)), arg(a));
}

Cx sin(const Cx& a) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  return Cx(sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im));
}

Cx cos(const Cx& a) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  return Cx(cos(a.re) * cosh(a.im), -sin(a.re) * sinh(a.im));
}

Cx sqrt(const Cx& a) {
  using boost::multiprecision::sqrt;
  Real r = abs(a);
  if (r == 0) return Cx(Real(0), Real(0));
  Real x = sqrt((r + a.re) / 2);
  Real y = sqrt((r - a.re) / 2);
  if (a.im < 0) y = -y;
  return Cx(x, y);
}

Cx imaginary_unit() { return Cx(Real(0), Real(1)); }

std::string real_string(const Real& x) {
  return x.str(precision_digits(), std::ios_base::scientific);
}

std::string cx_string(const Cx& z) {
  return real_string(z.re) + (z.im < 0 ? "" : "+") + real_string(z.im) + "i";
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw Error("division-by-zero", "exact complex division by zero");
  Rational d = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Cx to_cx(const ExactComplex& a) { return Cx(make_real(a.re), make_real(a.im)); }

bool in_pz(const ExactComplex& x, const Rational& p) {
  return x.im == 0 && in_pz(x.re, p);
}

std::string exact_complex_string(const ExactComplex& a) {
  if (a.im == 0) return rational_string(a.re);
  return "(" + rational_string(a.re) + ")+(" + rational_string(a.im) + ")i";
}

QValue make_qvalue(const Rational& p) {
  if (p == 0) throw Error("bad-parameter", "p must be nonzero");
  QValue qv;
  qv.p = p;
  qv.q = exp(Cx(Real(0), pi_value() / make_real(p)));
  return qv;
}

Cx q_power(const QValue& qv, const Rational& k) {
  return exp(Cx(Real(0), pi_value() * make_real(k) / make_real(qv.p)));
}

Cx q_number(const QValue& qv, const Rational& k) {
  Cx num = q_power(qv, k) - q_power(qv, -k);
  Cx den = q_power(qv, 1) - q_power(qv, -1);
  return num / den;
}

}  // namespace qkz
