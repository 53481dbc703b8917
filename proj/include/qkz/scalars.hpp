#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace qkz {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Error with a stable machine-readable code alongside the human message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// Global working precision in significant decimal digits. Everything numeric
// (Real, Cx, quadrature, tolerances) follows it. Must be set before any Real
// is constructed; main() and the test binaries do this on startup.
void set_precision(unsigned digits);
unsigned precision_digits();

struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits) : saved(precision_digits()) {
    set_precision(digits);
  }
  ~PrecisionGuard() { set_precision(saved); }
};

Real make_real(const Rational& r);
Real pi_value();

// Default tolerances derived from the working precision.
Real tol_residual();  // 10^-(digits-10)
Real tol_rank();      // 10^-(digits/2)

// Parse "a/b", "-3", or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& s);
std::string rational_string(const Rational& r);  // "a/b", or "a" if b == 1

bool is_integer(const Rational& r);
// True iff x is an integer multiple of p.
bool in_pz(const Rational& x, const Rational& p);
Integer floor_rational(const Rational& r);

// Complex number over Real. Hand-rolled because std::complex is only
// specified for the builtin floating types.
struct Cx {
  Real re, im;
  Cx() : re(0), im(0) {}
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cx(Real r) : re(std::move(r)), im(0) {}
  Cx(int r) : re(r), im(0) {}

  // Accessors in the std::complex spelling; Eigen's generic complex paths
  // use both these and the ADL free functions below.
  const Real& real() const { return re; }
  const Real& imag() const { return im; }

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Cx& operator/=(const Cx& o);
};

inline Cx operator+(Cx a, const Cx& b) { return a += b; }
inline Cx operator-(Cx a, const Cx& b) { return a -= b; }
inline Cx operator*(Cx a, const Cx& b) { return a *= b; }
inline Cx operator/(Cx a, const Cx& b) { return a /= b; }
inline Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }
inline Cx operator*(const Real& s, Cx a) {
  a.re *= s;
  a.im *= s;
  return a;
}
inline Cx operator*(Cx a, const Real& s) { return s * a; }
inline Cx operator/(Cx a, const Real& s) {
  a.re /= s;
  a.im /= s;
  return a;
}
inline bool operator==(const Cx& a, const Cx& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

inline Cx conj(const Cx& a) { return Cx(a.re, -a.im); }
inline Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
inline const Real& real(const Cx& a) { return a.re; }
inline const Real& imag(const Cx& a) { return a.im; }
inline Real abs2(const Cx& a) { return norm2(a); }
Real abs(const Cx& a);
Real arg(const Cx& a);
Cx exp(const Cx& a);
Cx log(const Cx& a);  // principal branch
Cx sin(const Cx& a);
Cx cos(const Cx& a);
Cx sqrt(const Cx& a);  // principal branch
Cx imaginary_unit();

std::string real_string(const Real& x);
std::string cx_string(const Cx& z);

// Complex with exact rational real and imaginary parts. Closed under field
// operations; used for every exact operator (evaluation points may carry
// exact imaginary parts).
struct ExactComplex {
  Rational re, im;
  ExactComplex() : re(0), im(0) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(const Rational& r) : re(r), im(0) {}
  ExactComplex(int r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  const Rational& real() const { return re; }
  const Rational& imag() const { return im; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o);
};

inline ExactComplex operator+(ExactComplex a, const ExactComplex& b) {
  return a += b;
}
inline ExactComplex operator-(ExactComplex a, const ExactComplex& b) {
  return a -= b;
}
inline ExactComplex operator*(ExactComplex a, const ExactComplex& b) {
  return a *= b;
}
inline ExactComplex operator/(ExactComplex a, const ExactComplex& b) {
  return a /= b;
}
inline ExactComplex operator-(const ExactComplex& a) {
  return ExactComplex(-a.re, -a.im);
}
inline bool operator==(const ExactComplex& a, const ExactComplex& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const ExactComplex& a, const ExactComplex& b) {
  return !(a == b);
}

inline ExactComplex conj(const ExactComplex& a) {
  return ExactComplex(a.re, -a.im);
}
inline const Rational& real(const ExactComplex& a) { return a.re; }
inline const Rational& imag(const ExactComplex& a) { return a.im; }
inline Rational abs2(const ExactComplex& a) {
  return a.re * a.re + a.im * a.im;
}

Cx to_cx(const ExactComplex& a);
bool in_pz(const ExactComplex& x, const Rational& p);
std::string exact_complex_string(const ExactComplex& a);

// q = exp(i*pi/p) together with the step p it came from, so that fractional
// powers q^k = exp(i*pi*k/p) are well defined.
struct QValue {
  Rational p;
  Cx q;
};

QValue make_qvalue(const Rational& p);
Cx q_power(const QValue& qv, const Rational& k);  // q^k
// [k]_q = (q^k - q^-k) / (q - q^-1)
Cx q_number(const QValue& qv, const Rational& k);

}  // namespace qkz
