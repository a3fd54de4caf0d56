#include <random>

#include "astlab/laurent.hpp"
#include "doctest.h"

using namespace astlab;

TEST_CASE("interpolation examples") {
  // f(u) = u + 1/u sampled at 1, 2, 3 over window [-1, 1]
  std::vector<ExactScalar> nodes{ExactScalar(1), ExactScalar(2), ExactScalar(3)};
  std::vector<ExactScalar> values;
  for (const auto& u : nodes) values.push_back(u + u.inverse());
  LaurentPoly f = laurent_from_samples(nodes, values, -1, 1);
  CHECK(f.order() == -1);
  CHECK(f.degree() == 1);
  CHECK(f.coeff(-1) == ExactScalar(1));
  CHECK(f.coeff(0) == ExactScalar(0));
  CHECK(f.coeff(1) == ExactScalar(1));

  LaurentPoly c = laurent_from_samples({ExactScalar(2), ExactScalar(3), ExactScalar(5)},
                                       {ExactScalar(1), ExactScalar(1), ExactScalar(1)}, -1, 1);
  CHECK(c.degree() == 0);
  CHECK(c.order() == 0);

  CHECK_THROWS_AS(laurent_from_samples({ExactScalar(2), ExactScalar(2)},
                                       {ExactScalar(1), ExactScalar(1)}, 0, 1),
                  SingularSystem);
}

TEST_CASE("interpolation inverts evaluation on random polynomials") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    long lo = d(rng) % 4 - 3;
    long hi = lo + std::abs(d(rng)) % 4;
    std::vector<ExactScalar> coeffs;
    for (long e = lo; e <= hi; ++e) coeffs.push_back(ExactScalar(d(rng)));
    LaurentPoly p(lo, coeffs);
    std::vector<ExactScalar> nodes, values;
    int next = 2;
    while (static_cast<long>(nodes.size()) < hi - lo + 1) {
      nodes.push_back(ExactScalar::ratio(next, 1));
      values.push_back(p.eval(nodes.back()));
      ++next;
    }
    LaurentPoly q = laurent_from_samples(nodes, values, lo, hi);
    for (long e = lo - 1; e <= hi + 1; ++e) CHECK(q.coeff(e) == p.coeff(e));
  }
}
