#include "astlab/characters.hpp"

#include <algorithm>

#include "astlab/linalg.hpp"

namespace astlab {

Partition double_staircase(int k) {
  Partition lam;
  for (int t = k; t >= 1; --t) {
    lam.push_back(t);
    lam.push_back(t);
  }
  return lam;
}

namespace {

Partition padded(const Partition& lam, size_t n) {
  if (lam.size() > n) {
    for (size_t i = n; i < lam.size(); ++i)
      if (lam[i] != 0) throw ShapeMismatch("partition does not fit in the variable count");
  }
  Partition out(lam.begin(), lam.begin() + static_cast<long>(std::min(lam.size(), n)));
  out.resize(n, 0);
  return out;
}

void require_distinct(const std::vector<ExactScalar>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw RepeatedVariables();
}

}  // namespace

ExactScalar schur(const Partition& lam, const std::vector<ExactScalar>& xs) {
  const size_t n = xs.size();
  require_distinct(xs);
  Partition l = padded(lam, n);
  Matrix m(n, std::vector<ExactScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = xs[i].pow(l[j] + static_cast<long>(n - 1 - j));
  ExactScalar den(1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) den *= xs[i] - xs[j];
  return determinant(std::move(m)) / den;
}

ExactScalar symplectic(const Partition& lam, const std::vector<ExactScalar>& xs) {
  const size_t n = xs.size();
  Partition l = padded(lam, n);
  Matrix m(n, std::vector<ExactScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long e = l[j] + static_cast<long>(n - j);
      m[i][j] = xs[i].pow(e) - xs[i].pow(-e);
    }
  ExactScalar den(1);
  for (size_t i = 0; i < n; ++i) {
    ExactScalar d = xs[i] - xs[i].inverse();
    if (d.is_zero()) throw RepeatedVariables("symplectic argument equal to its inverse");
    den *= d;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ExactScalar d = xs[i] + xs[i].inverse() - xs[j] - xs[j].inverse();
      if (d.is_zero()) throw RepeatedVariables("symplectic arguments share x + 1/x");
      den *= d;
    }
  return determinant(std::move(m)) / den;
}

Rational principal_specialization(PrincipalKind kind, const Partition& lam, int n) {
  Partition l = padded(lam, static_cast<size_t>(n));
  Rational r(1);
  if (kind == PrincipalKind::Schur) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        r *= ExactScalar::reduced(
            Rational(l[static_cast<size_t>(i - 1)] - l[static_cast<size_t>(j - 1)] + j - i,
                     j - i));
    return r;
  }
  for (int i = 1; i <= n; ++i)
    r *= ExactScalar::reduced(Rational(l[static_cast<size_t>(i - 1)] + n + 1 - i, n + 1 - i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long li = l[static_cast<size_t>(i - 1)], lj = l[static_cast<size_t>(j - 1)];
      r *= ExactScalar::reduced(Rational(li - lj + j - i, j - i));
      r *= ExactScalar::reduced(Rational(li + lj + 2 * n + 2 - i - j, 2 * n + 2 - i - j));
    }
  return r;
}

ExactScalar character_formula_eval(CharacterFormula which, int n, const std::vector<Rational>& us,
                                   const Rational& p) {
  auto squares_of = [&](int count, bool with_inverses) {
    std::vector<ExactScalar> xs;
    for (int i = 0; i < count; ++i) {
      Rational u = us[static_cast<size_t>(i)];
      if (u == 0) throw ZeroInput();
      xs.emplace_back(Rational(u * u));
      if (with_inverses) xs.emplace_back(Rational(1 / (u * u)));
    }
    return xs;
  };
  switch (which) {
    case CharacterFormula::AstSchur:
    case CharacterFormula::QastSchur: {
      if (static_cast<int>(us.size()) < n) throw ShapeMismatch("need n parameters");
      if (p == 0) throw ZeroInput();
      Rational pref(1);
      for (int i = 0; i < n; ++i) {
        Rational u = us[static_cast<size_t>(i)];
        pref *= p * p * u * u + 1 + 1 / (p * p * u * u);
      }
      // 3^{-binom(n+1,2)}
      Rational three_pow(1);
      for (long t = 0; t < static_cast<long>(n + 1) * n / 2; ++t) three_pow *= 3;
      Partition lam = double_staircase(n - 1);
      if (which == CharacterFormula::QastSchur) lam.insert(lam.begin(), n);
      return ExactScalar(pref / three_pow) * schur(lam, squares_of(n, true));
    }
    case CharacterFormula::OosasmSympOdd: {
      if (n % 2 == 0) throw ShapeMismatch("odd kind needs odd n");
      if (static_cast<int>(us.size()) < n + 1) throw ShapeMismatch("need n+1 parameters");
      int m = (n + 1) / 2;
      Rational three_pow(1);
      for (long t = 0; t < static_cast<long>(m - 1) * (2 * m - 1); ++t) three_pow *= 3;
      Partition lam2 = double_staircase(m - 2);
      lam2.insert(lam2.begin(), m - 1);
      return ExactScalar(1 / three_pow) *
             symplectic(double_staircase(m - 1), squares_of(2 * m, false)) *
             symplectic(lam2, squares_of(2 * m - 1, false));
    }
    case CharacterFormula::OosasmSympEven: {
      if (n % 2 != 0) throw ShapeMismatch("even kind needs even n");
      if (static_cast<int>(us.size()) < n + 1) throw ShapeMismatch("need n+1 parameters");
      int m = n / 2;
      Rational three_pow(1);
      for (long t = 0; t < static_cast<long>(m) * (2 * m - 1); ++t) three_pow *= 3;
      Partition lam2 = double_staircase(m - 1);
      lam2.insert(lam2.begin(), m);
      return ExactScalar(1 / three_pow) *
             symplectic(double_staircase(m - 1), squares_of(2 * m, false)) *
             symplectic(lam2, squares_of(2 * m + 1, false));
    }
  }
  throw UnknownIdentifier("unknown character formula");
}

const char* product_name(ProductKind k) {
  switch (k) {
    case ProductKind::Asm: return "asm";
    case ProductKind::Cspp: return "cspp";
    case ProductKind::Oosasm4nMinus1: return "oosasm-4n-minus-1";
    case ProductKind::Oosasm4nPlus1: return "oosasm-4n-plus-1";
    case ProductKind::Vhsasm: return "vhsasm";
    case ProductKind::Ast2Enum: return "ast-2enum";
    case ProductKind::Ast3EnumOdd: return "ast-3enum-odd";
    case ProductKind::Ast3EnumEven: return "ast-3enum-even";
    case ProductKind::AsmOneMinusOne: return "asm-one-minus-one";
  }
  return "?";
}

ProductKind product_from_name(const std::string& name) {
  for (ProductKind k :
       {ProductKind::Asm, ProductKind::Cspp, ProductKind::Oosasm4nMinus1,
        ProductKind::Oosasm4nPlus1, ProductKind::Vhsasm, ProductKind::Ast2Enum,
        ProductKind::Ast3EnumOdd, ProductKind::Ast3EnumEven, ProductKind::AsmOneMinusOne})
    if (name == product_name(k)) return k;
  throw UnknownIdentifier("unknown product kind: " + name);
}

namespace {

Integer factorial(long m) {
  Integer f = 1;
  for (long t = 2; t <= m; ++t) f *= t;
  return f;
}

Rational pow_rat(long base, long e) {
  Rational r(1);
  for (long t = 0; t < e; ++t) r *= base;
  return r;
}

}  // namespace

Rational product_formula(ProductKind kind, int n) {
  switch (kind) {
    case ProductKind::Asm: {
      Rational r(1);
      for (long i = 0; i < n; ++i) r *= Rational(factorial(3 * i + 1)) / factorial(n + i);
      return r;
    }
    case ProductKind::Cspp: {
      Rational r(1);
      for (long i = 0; i < n; ++i)
        r *= Rational((3 * i + 2) * factorial(3 * i)) / factorial(n + i);
      return r;
    }
    case ProductKind::Oosasm4nMinus1: {
      Rational r(1);
      for (long i = 0; i < n; ++i)
        r *= Rational(factorial(3 * i + 2) * factorial(3 * n + 3 * i)) /
             (factorial(2 * n + i) * factorial(3 * n + i));
      return r;
    }
    case ProductKind::Oosasm4nPlus1: {
      Rational r(1);
      for (long i = 1; i <= n; ++i)
        r *= Rational(factorial(3 * i - 1) * factorial(3 * n + 3 * i)) /
             (factorial(2 * n + i) * factorial(3 * n + i + 1));
      return r;
    }
    case ProductKind::Vhsasm: {
      if (n % 2 == 0) throw ShapeMismatch("VHSASM order must be odd");
      if (n % 4 == 1) return product_formula(ProductKind::Oosasm4nMinus1, (n - 1) / 4);
      return product_formula(ProductKind::Oosasm4nPlus1, (n - 3) / 4);
    }
    case ProductKind::Ast2Enum: return pow_rat(2, static_cast<long>(n) * (n - 1) / 2);
    case ProductKind::Ast3EnumOdd: {
      Rational r = pow_rat(3, static_cast<long>(n) * (n + 1));
      for (long i = 1; i <= n; ++i) {
        Rational f = Rational(factorial(3 * i - 1)) / factorial(n + i);
        r *= f * f;
      }
      return r;
    }
    case ProductKind::Ast3EnumEven: {
      Rational r = pow_rat(3, static_cast<long>(n) * (n + 2));
      r *= Rational(factorial(3 * n + 2) * factorial(n)) /
           (factorial(2 * n + 1) * factorial(2 * n + 1));
      for (long i = 1; i <= n; ++i) {
        Rational f = Rational(factorial(3 * i - 1)) / factorial(n + i);
        r *= f * f;
      }
      return r;
    }
    case ProductKind::AsmOneMinusOne: {
      if (n < 3) return Rational(0);
      Integer b = factorial(n) / (factorial(3) * factorial(n - 3));
      return Rational(b * b * factorial(n - 3));
    }
  }
  throw UnknownIdentifier("unknown product kind");
}

bool symplectic_ratio_identities(int n, const std::vector<ExactScalar>& us) {
  if (static_cast<int>(us.size()) < 2 * n) throw ShapeMismatch("need 2n parameters");
  const ExactScalar q = ExactScalar::zeta() * ExactScalar::zeta();
  ExactScalar shifted = q * q / us[0];
  auto rhs_product = [&](int count) {
    ExactScalar r(1);
    for (int i = 2; i <= count; ++i) {
      const ExactScalar& ui = us[static_cast<size_t>(i - 1)];
      r *= us[0] / q + q / us[0] + ui + ui.inverse();
    }
    return r;
  };
  {
    std::vector<ExactScalar> args(us.begin(), us.begin() + (2 * n - 1));
    args.push_back(shifted);
    std::vector<ExactScalar> sub(us.begin() + 1, us.begin() + (2 * n - 1));
    ExactScalar lhs = symplectic(double_staircase(n - 1), args) /
                      symplectic(double_staircase(n - 2), sub);
    if (lhs != rhs_product(2 * n - 1)) return false;
  }
  {
    std::vector<ExactScalar> args(us.begin(), us.begin() + 2 * n);
    args.push_back(shifted);
    Partition lam = double_staircase(n - 1);
    lam.insert(lam.begin(), n);
    Partition lam_sub = double_staircase(n - 2);
    lam_sub.insert(lam_sub.begin(), n - 1);
    std::vector<ExactScalar> sub(us.begin() + 1, us.begin() + 2 * n);
    ExactScalar lhs = symplectic(lam, args) / symplectic(lam_sub, sub);
    if (lhs != rhs_product(2 * n)) return false;
  }
  return true;
}

}  // namespace astlab
