#include "astlab/exact.hpp"

#include <ostream>
#include <sstream>

namespace astlab {

namespace {

Cyc12 promote(const Rational& r) {
  Cyc12 c;
  c.c[0] = r;
  return c;
}

Cyc12 cyc_add(const Cyc12& a, const Cyc12& b) {
  Cyc12 r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Cyc12 cyc_sub(const Cyc12& a, const Cyc12& b) {
  Cyc12 r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Cyc12 cyc_neg(const Cyc12& a) {
  Cyc12 r;
  for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
  return r;
}

// Multiply modulo z^4 = z^2 - 1 (so z^5 = z^3 - z and z^6 = -1).
Cyc12 cyc_mul(const Cyc12& a, const Cyc12& b) {
  std::array<Rational, 7> raw{};
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) raw[i + j] += a.c[i] * b.c[j];
  }
  raw[2] += raw[4];
  raw[0] -= raw[4];
  raw[3] += raw[5];
  raw[1] -= raw[5];
  raw[0] -= raw[6];
  Cyc12 r;
  for (int i = 0; i < 4; ++i) r.c[i] = raw[i];
  return r;
}

int poly_deg(const std::array<Rational, 5>& p) {
  for (int d = 4; d >= 0; --d)
    if (p[d] != 0) return d;
  return -1;
}

// Inverse by the extended Euclidean algorithm against x^4 - x^2 + 1.
Cyc12 cyc_inv(const Cyc12& a) {
  std::array<Rational, 5> r0{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
  std::array<Rational, 5> r1{a.c[0], a.c[1], a.c[2], a.c[3], Rational(0)};
  std::array<Rational, 5> v0{};  // cofactor of a in r0
  std::array<Rational, 5> v1{};
  v1[0] = 1;
  while (true) {
    int d1 = poly_deg(r1);
    if (d1 < 0) break;
    int d0 = poly_deg(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(v0, v1);
      continue;
    }
    Rational f = r0[d0] / r1[d1];
    int sh = d0 - d1;
    for (int i = 0; i <= d1; ++i) r0[i + sh] -= f * r1[i];
    for (int i = 0; i + sh < 5; ++i) v0[i + sh] -= f * v1[i];
  }
  if (poly_deg(r0) != 0) throw ZeroInput();
  Cyc12 out;
  for (int i = 0; i < 4; ++i) out.c[i] = v0[i] / r0[0];
  return out;
}

}  // namespace

ExactScalar ExactScalar::make(Cyc12 c) {
  for (auto& coord : c.c) coord = reduced(std::move(coord));
  if (c.c[1] == 0 && c.c[2] == 0 && c.c[3] == 0) return ExactScalar(c.c[0]);
  ExactScalar x;
  x.v_ = std::move(c);
  return x;
}

ExactScalar::ExactScalar(Cyc12 x) { *this = make(std::move(x)); }

ExactScalar ExactScalar::zeta() {
  Cyc12 c;
  c.c[1] = 1;
  return make(c);
}

ExactScalar ExactScalar::imag_unit() {
  Cyc12 c;
  c.c[3] = 1;
  return make(c);
}

bool ExactScalar::is_zero() const {
  return is_rational() && std::get<Rational>(v_) == 0;
}

const Rational& ExactScalar::rational() const {
  if (!is_rational()) throw TypeMismatch("value is not rational");
  return std::get<Rational>(v_);
}

Rational ExactScalar::coeff(int k) const {
  if (is_rational()) return k == 0 ? std::get<Rational>(v_) : Rational(0);
  return std::get<Cyc12>(v_).c[static_cast<size_t>(k)];
}

ExactScalar ExactScalar::operator-() const {
  if (is_rational()) return ExactScalar(Rational(-std::get<Rational>(v_)));
  return make(cyc_neg(std::get<Cyc12>(v_)));
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_rational() && b.is_rational())
    return ExactScalar(Rational(std::get<Rational>(a.v_) + std::get<Rational>(b.v_)));
  Cyc12 ca = a.is_rational() ? promote(std::get<Rational>(a.v_)) : std::get<Cyc12>(a.v_);
  Cyc12 cb = b.is_rational() ? promote(std::get<Rational>(b.v_)) : std::get<Cyc12>(b.v_);
  return ExactScalar::make(cyc_add(ca, cb));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_rational() && b.is_rational())
    return ExactScalar(Rational(std::get<Rational>(a.v_) - std::get<Rational>(b.v_)));
  Cyc12 ca = a.is_rational() ? promote(std::get<Rational>(a.v_)) : std::get<Cyc12>(a.v_);
  Cyc12 cb = b.is_rational() ? promote(std::get<Rational>(b.v_)) : std::get<Cyc12>(b.v_);
  return ExactScalar::make(cyc_sub(ca, cb));
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_rational() && b.is_rational())
    return ExactScalar(Rational(std::get<Rational>(a.v_) * std::get<Rational>(b.v_)));
  if (a.is_rational()) {
    const Rational& r = std::get<Rational>(a.v_);
    Cyc12 out = std::get<Cyc12>(b.v_);
    for (auto& c : out.c) c *= r;
    return ExactScalar::make(out);
  }
  if (b.is_rational()) return b * a;
  return ExactScalar::make(cyc_mul(std::get<Cyc12>(a.v_), std::get<Cyc12>(b.v_)));
}

ExactScalar ExactScalar::inverse() const {
  if (is_rational()) {
    const Rational& r = std::get<Rational>(v_);
    if (r == 0) throw ZeroInput();
    return ExactScalar(Rational(1 / r));
  }
  return make(cyc_inv(std::get<Cyc12>(v_)));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar base = *this;
  ExactScalar acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

ExactScalar sigma(const ExactScalar& x) { return x - x.inverse(); }

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  if (x.is_rational()) return os << std::get<Rational>(x.v_);
  const Cyc12& c = std::get<Cyc12>(x.v_);
  os << "(" << c.c[0];
  for (int k = 1; k < 4; ++k) {
    os << (sgn(c.c[k].get_num()) < 0 ? " - " : " + ")
       << abs(c.c[k]) << "*z" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os << ")";
}

}  // namespace astlab
