#ifndef POLYSOLVE_SCALAR_HPP
#define POLYSOLVE_SCALAR_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace polysolve {

// Exact field: arbitrary-precision rationals, always canonical
// (lowest terms, positive denominator). mpq_class maintains this
// for all arithmetic as long as inputs are canonical.
using Rational = mpq_class;

// Floating field for the numerical pipelines.
using Complex = std::complex<double>;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Complex to_complex(const Rational& q) { return Complex(q.get_d(), 0.0); }

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Uniform scalar interface used by the templated polynomial and
// matrix code. Exactly two realizations exist.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double abs_value(const Rational& x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex one() { return Complex(1.0, 0.0); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static double abs_value(const Complex& x) { return std::abs(x); }
};

}  // namespace polysolve

#endif
