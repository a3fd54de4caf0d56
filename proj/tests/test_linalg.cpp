#include <random>

#include "astlab/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace astlab;

namespace {

ExactScalar rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-8, 8);
  return ExactScalar::ratio(d(rng), 1 + std::abs(d(rng)));
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(determinant(Matrix{}) == ExactScalar(1));
  Matrix m{{ExactScalar(2), ExactScalar(3)}, {ExactScalar(5), ExactScalar(7)}};
  CHECK(determinant(m) == ExactScalar(2 * 7 - 3 * 5));
  // Vandermonde (x_i^{j-1}) at x = (1,2,3) against cofactor expansion
  Matrix v(3, std::vector<ExactScalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        ExactScalar(i + 1).pow(j);
  CHECK(determinant(v) == ExactScalar(2));
  CHECK(determinant(v) == oracles::cofactor_det(v));
}

TEST_CASE("determinant is multiplicative on random 4x4 pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(4, std::vector<ExactScalar>(4)), b(4, std::vector<ExactScalar>(4)), c = a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = rnd(rng);
        b[static_cast<size_t>(i)][static_cast<size_t>(j)] = rnd(rng);
      }
    c = Matrix(4, std::vector<ExactScalar>(4, ExactScalar(0)));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          c[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    CHECK(determinant(c) == determinant(a) * determinant(b));
  }
}

TEST_CASE("pfaffian matching-sum convention") {
  SkewTriangle t2(2);
  t2.set(1, 2, ExactScalar(5));
  CHECK(pfaffian(t2) == ExactScalar(5));

  SkewTriangle t4(4);
  int val = 2;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) t4.set(i, j, ExactScalar(val++));
  // entries a12..a34 = 2,3,4,5,6,7: a12 a34 - a13 a24 + a14 a23
  CHECK(pfaffian(t4) == ExactScalar(2 * 7 - 3 * 6 + 4 * 5));

  SkewTriangle odd(3);
  CHECK_THROWS_AS(pfaffian(odd), OddOrder);
  CHECK(pfaffian(SkewTriangle(0)) == ExactScalar(1));
}

TEST_CASE("pfaffian squared equals determinant of the completion") {
  std::mt19937_64 rng(13);
  for (int order = 2; order <= 8; order += 2) {
    for (int trial = 0; trial < 4; ++trial) {
      SkewTriangle t(order);
      for (int i = 1; i <= order; ++i)
        for (int j = i + 1; j <= order; ++j) t.set(i, j, rnd(rng));
      ExactScalar pf = pfaffian(t);
      CHECK(pf * pf == determinant(t.completion()));
    }
  }
}
