#include "astlab/characters.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace astlab;

namespace {

ExactScalar elementary_symmetric(int k, const std::vector<ExactScalar>& xs) {
  std::vector<ExactScalar> e(static_cast<size_t>(k) + 1, ExactScalar(0));
  e[0] = ExactScalar(1);
  for (const auto& x : xs)
    for (int t = k; t >= 1; --t)
      e[static_cast<size_t>(t)] += e[static_cast<size_t>(t - 1)] * x;
  return e[static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("schur basics") {
  std::vector<ExactScalar> xs{ExactScalar(1), ExactScalar(2), ExactScalar(3), ExactScalar(4)};
  CHECK(schur({}, xs) == ExactScalar(1));
  CHECK(schur({1, 1}, xs) == elementary_symmetric(2, xs));
  CHECK(schur({1, 1}, xs) == ExactScalar(35));
  CHECK_THROWS_AS(schur({1}, std::vector<ExactScalar>{ExactScalar(2), ExactScalar(2)}),
                  RepeatedVariables);
  // repeated arguments are served by the principal specialization
  CHECK(principal_specialization(PrincipalKind::Schur, {1, 1}, 4) == Rational(6));
  CHECK(principal_specialization(PrincipalKind::Schur, {2, 1}, 3) == Rational(8));
}

namespace {

std::vector<Partition> shapes_in_3x3() {
  std::vector<Partition> shapes;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c) {
        Partition lam;
        if (a) lam.push_back(a);
        if (b) lam.push_back(b);
        if (c) lam.push_back(c);
        shapes.push_back(lam);
      }
  return shapes;
}

}  // namespace

TEST_CASE("schur against tableau generating functions") {
  std::vector<ExactScalar> xs{ExactScalar::ratio(2, 3), ExactScalar::ratio(5, 4), ExactScalar(3),
                              ExactScalar::ratio(7, 2)};
  for (const Partition& lam : shapes_in_3x3()) {
    std::vector<long> shape(lam.begin(), lam.end());
    CHECK(schur(lam, xs) == oracles::ssyt_genfunc(shape, xs));
  }
}

TEST_CASE("symplectic basics") {
  std::vector<ExactScalar> xs{ExactScalar::ratio(2, 3), ExactScalar::ratio(5, 4)};
  CHECK(symplectic({}, xs) == ExactScalar(1));
  for (const Partition& lam : std::vector<Partition>{{1}, {1, 1}, {2}, {2, 1}, {2, 2}}) {
    std::vector<long> shape(lam.begin(), lam.end());
    CHECK(symplectic(lam, xs) == oracles::king_genfunc(shape, xs));
  }
  CHECK(principal_specialization(PrincipalKind::Symplectic, {1, 1}, 2) == Rational(5));
  // 5 symplectic tableaux of shape (1,1) on 1 < 1' < 2 < 2'
  CHECK(oracles::king_genfunc({1, 1}, {ExactScalar(1), ExactScalar(1)}) == ExactScalar(5));
}

TEST_CASE("symplectic with three variables against tableaux") {
  std::vector<ExactScalar> xs{ExactScalar::ratio(2, 3), ExactScalar::ratio(5, 4),
                              ExactScalar::ratio(9, 7)};
  for (const Partition& lam : shapes_in_3x3()) {
    std::vector<long> shape(lam.begin(), lam.end());
    CHECK(symplectic(lam, xs) == oracles::king_genfunc(shape, xs));
  }
}

TEST_CASE("principal staircase values") {
  // s_{(n-1,n-1,...,1,1)}(1^{2n}) at n=3 and its ASM interpretation
  CHECK(principal_specialization(PrincipalKind::Schur, double_staircase(2), 6) == Rational(189));
  CHECK(Rational(189) == Rational(27) * product_formula(ProductKind::Asm, 3));
  // CSPP(n) = 3^{-binom(n,2)} s_{(n,n-1,n-1,...)}(1^{2n})
  for (int n = 1; n <= 4; ++n) {
    Partition lam = double_staircase(n - 1);
    lam.insert(lam.begin(), n);
    Rational lhs = principal_specialization(PrincipalKind::Schur, lam, 2 * n);
    Rational three(1);
    for (long t = 0; t < static_cast<long>(n) * (n - 1) / 2; ++t) three *= 3;
    CHECK(lhs / three == product_formula(ProductKind::Cspp, n));
  }
}

TEST_CASE("product formulas") {
  CHECK(product_formula(ProductKind::Asm, 3) == Rational(7));
  CHECK(product_formula(ProductKind::Asm, 5) == Rational(429));
  CHECK(product_formula(ProductKind::Cspp, 3) == Rational(20));
  CHECK(product_formula(ProductKind::Cspp, 4) == Rational(132));
  CHECK(product_formula(ProductKind::Oosasm4nMinus1, 1) == Rational(1));
  CHECK(product_formula(ProductKind::Oosasm4nMinus1, 2) == Rational(6));
  CHECK(product_formula(ProductKind::Oosasm4nPlus1, 1) == Rational(2));
  CHECK(product_formula(ProductKind::Oosasm4nPlus1, 2) == Rational(33));
  CHECK(product_formula(ProductKind::Vhsasm, 5) == Rational(1));
  CHECK(product_formula(ProductKind::Vhsasm, 7) == Rational(2));
  CHECK(product_formula(ProductKind::Ast2Enum, 4) == Rational(64));
  CHECK(product_formula(ProductKind::Ast3EnumOdd, 1) == Rational(9));
  CHECK(product_formula(ProductKind::Ast3EnumEven, 1) == Rational(90));
  CHECK(product_formula(ProductKind::AsmOneMinusOne, 4) == Rational(16));
  CHECK(product_formula(ProductKind::AsmOneMinusOne, 2) == Rational(0));
  CHECK_THROWS_AS(product_formula(ProductKind::Vhsasm, 4), ShapeMismatch);
}

TEST_CASE("character formula arguments") {
  std::vector<Rational> us{Rational(2, 3), Rational(5, 4), Rational(7, 2)};
  CHECK_THROWS_AS(
      character_formula_eval(CharacterFormula::OosasmSympOdd, 2, us, Rational(1)),
      ShapeMismatch);
  CHECK(character_formula_eval(CharacterFormula::AstSchur, 1, {Rational(2, 3)}, Rational(1))
            .is_rational());
}

TEST_CASE("symplectic ratio identities (observed, optional)") {
  std::vector<ExactScalar> us{ExactScalar::ratio(2, 3), ExactScalar::ratio(5, 4),
                              ExactScalar::ratio(7, 2), ExactScalar::ratio(9, 5)};
  CHECK(symplectic_ratio_identities(2, us));
}
