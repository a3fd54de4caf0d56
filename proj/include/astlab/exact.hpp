#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "astlab/errors.hpp"

namespace astlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Coordinates with respect to the power basis {1, z, z^2, z^3} of Q(z),
// z a primitive 12th root of unity, reduced via z^4 = z^2 - 1.
struct Cyc12 {
  std::array<Rational, 4> c{};
  friend bool operator==(const Cyc12& a, const Cyc12& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2] && a.c[3] == b.c[3];
  }
};

// Exact scalar: a rational or an element of Q(zeta_12). Values are kept
// canonical: a Cyc12 whose z, z^2, z^3 coordinates vanish is demoted to
// the rational variant, so equality is plain structural equality.
class ExactScalar {
 public:
  ExactScalar() : v_(Rational(0)) {}
  ExactScalar(int x) : v_(Rational(x)) {}
  ExactScalar(long x) : v_(Rational(static_cast<signed long>(x))) {}
  ExactScalar(Rational x) : v_(reduced(std::move(x))) {}
  ExactScalar(const Integer& x) : v_(Rational(x)) {}
  explicit ExactScalar(Cyc12 x);

  static ExactScalar zeta();        // primitive 12th root of unity
  static ExactScalar imag_unit();   // zeta^3
  static ExactScalar ratio(long num, long den) { return ExactScalar(Rational(num, den)); }

  // lowest terms, positive denominator
  static Rational reduced(Rational x) {
    x.canonicalize();
    return x;
  }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  const Rational& rational() const;       // throws TypeMismatch when cyclotomic
  Rational coeff(int k) const;            // coefficient of zeta^k, k in 0..3

  ExactScalar operator-() const;
  ExactScalar inverse() const;            // throws ZeroInput
  ExactScalar pow(long e) const;          // negative exponents allowed for nonzero values

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

 private:
  std::variant<Rational, Cyc12> v_;
  static ExactScalar make(Cyc12 c);  // canonicalizing constructor
};

// sigma(x) = x - 1/x, the building block of all vertex weights.
ExactScalar sigma(const ExactScalar& x);

}  // namespace astlab
