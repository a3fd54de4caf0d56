#include "astlab/formulas.hpp"
#include "astlab/laurent.hpp"
#include "doctest.h"

using namespace astlab;

namespace {

// admissible generic point for the closed formulas
SpectralPoint fixed_point(int n) {
  SpectralPoint pt;
  pt.q = ExactScalar::ratio(5, 2);
  pt.p = ExactScalar::ratio(4, 9);
  const int nums[] = {2, 5, 7, 9, 11, 13};
  const int dens[] = {3, 7, 4, 5, 6, 7};
  for (int i = 0; i <= n; ++i) pt.u.push_back(ExactScalar::ratio(nums[i], dens[i]));
  return pt;
}

}  // namespace

TEST_CASE("degenerate base cases") {
  SpectralPoint pt = fixed_point(1);
  CHECK(ast_partition_formula(0, pt, AstVariant::Full) == ExactScalar(1));
  CHECK(qast_partition_formula(0, pt, AstVariant::Full) == ExactScalar(1));
  CHECK(ik_partition_det(0, pt.q, {}, {}) == ExactScalar(1));
  CHECK(ik_partition_brute(1, pt.q, {pt.u[0]}, {pt.u[1]}) == ExactScalar(1));  // Y_1 = 1
  CHECK(ik_partition_det(1, pt.q, {pt.u[0]}, {pt.u[1]}) == ExactScalar(1));
}

TEST_CASE("asm partition function at the combinatorial point") {
  // all weights are 1 at q = zeta, u = v = 1, so Y_n counts ASMs
  const long counts[] = {1, 1, 2, 7, 42};
  for (int n = 1; n <= 4; ++n) {
    std::vector<ExactScalar> ones(static_cast<size_t>(n), ExactScalar(1));
    CHECK(ik_partition_brute(n, ExactScalar::zeta(), ones, ones) == ExactScalar(counts[n]));
  }
}

TEST_CASE("formula harness at small order") {
  for (const char* id :
       {"ast-full", "ast-at-p", "ast-asm-relation", "qast-full", "qast-at-p", "oosasm"}) {
    for (int n = 1; n <= 2; ++n) {
      FormulaReport rep = formula_vs_bruteforce(id, n, 1, 4);
      CHECK(rep.pass);
    }
  }
  CHECK_THROWS_AS(formula_vs_bruteforce("nope", 1, 1, 1), UnknownIdentifier);
}

TEST_CASE("full formula is Laurent in u_{n+1} with the claimed support") {
  const int n = 2;
  SpectralPoint pt = fixed_point(n);
  std::vector<ExactScalar> nodes, values;
  const int nums[] = {17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int k = 0; k < 2 * n + 1; ++k) {
    SpectralPoint at = pt;
    at.u[static_cast<size_t>(n)] = ExactScalar::ratio(nums[k], 2);
    nodes.push_back(at.u[static_cast<size_t>(n)]);
    values.push_back(ast_partition_formula(n, at, AstVariant::Full));
  }
  LaurentPoly rec = laurent_from_samples(nodes, values, -n, n);
  // the reconstruction matches the formula at two fresh nodes
  for (int k : {53, 59}) {
    SpectralPoint at = pt;
    at.u[static_cast<size_t>(n)] = ExactScalar::ratio(k, 2);
    CHECK(rec.eval(at.u[static_cast<size_t>(n)]) ==
          ast_partition_formula(n, at, AstVariant::Full));
  }
}

namespace {

// The full AST formula at u_{n+1} = q^2 / u_1, evaluated through the proof's
// reorganization: the (1, n+1) bulk factors are cancelled against the last
// matrix column, which becomes the first unit vector at the evaluation point.
ExactScalar ast_full_at_q2_over_u1(int n, const SpectralPoint& pt) {
  const ExactScalar &q = pt.q, &p = pt.p;
  std::vector<ExactScalar> u = pt.u;
  u[static_cast<size_t>(n)] = q * q / u[0];
  ExactScalar q2 = q * q;
  ExactScalar num(1), den(1);
  for (int j = 0; j < n; ++j) num *= sigma(u[static_cast<size_t>(j)] / p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n + 1; ++j) {
      if (i == 0 && j == n) continue;
      num *= sigma(q2 * u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)]) *
             sigma(q2 / (u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)]));
    }
  den = sigma(q2).pow(2 * n) * sigma(q2 * q2).pow(static_cast<long>(n) * (n - 1));
  for (int i = 0; i < n; ++i) den *= sigma(u[static_cast<size_t>(i)] / u[static_cast<size_t>(n)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactScalar d = sigma(u[static_cast<size_t>(i)] / u[static_cast<size_t>(j)]);
      den *= d * d;
    }
  Matrix m(static_cast<size_t>(n + 1),
           std::vector<ExactScalar>(static_cast<size_t>(n + 1), ExactScalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (sigma(q2 * u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)]) *
           sigma(q2 / (u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)])))
              .inverse();
  for (int j = 0; j < n; ++j)
    m[static_cast<size_t>(n)][static_cast<size_t>(j)] =
        ExactScalar(1) -
        sigma(u[static_cast<size_t>(j)] / u[static_cast<size_t>(n)]) /
            sigma(u[static_cast<size_t>(j)] / p);
  m[0][static_cast<size_t>(n)] = ExactScalar(1);
  return num / den * determinant(std::move(m));
}

}  // namespace

TEST_CASE("full formula satisfies its own recursion at u_{n+1} = q^2 / u_1") {
  ExactScalar half = ExactScalar::ratio(1, 2);
  for (int n = 1; n <= 3; ++n) {
    SpectralPoint pt = fixed_point(n);
    const ExactScalar &q = pt.q, &p = pt.p, &u1 = pt.u[0];
    ExactScalar lhs = ast_full_at_q2_over_u1(n, pt);

    SpectralPoint sub;
    sub.q = q;
    sub.p = p;
    for (int i = 2; i <= n; ++i) sub.u.push_back(pt.u[static_cast<size_t>(i - 1)]);
    sub.u.push_back(u1);
    SpectralPoint sub_neg = sub;
    sub_neg.u.back() = -u1;

    ExactScalar pref = (q - p / q * u1) * sigma(q * q * u1 * u1) * half /
                       (sigma(q * q) * sigma(q * q));
    for (int i = 2; i <= n; ++i) {
      const ExactScalar& ui = pt.u[static_cast<size_t>(i - 1)];
      pref *= sigma(q * q * u1 * ui) * sigma(q.pow(4) / u1 * ui) /
              (sigma(q.pow(4)) * sigma(q.pow(4)));
    }
    ExactScalar t1 = (u1.inverse() + p.inverse()) * (q / u1 + u1 / q) *
                     ast_partition_formula(n - 1, sub, AstVariant::Full);
    ExactScalar t2 = (u1.inverse() - p.inverse()) * sigma(q / u1) *
                     ast_partition_formula(n - 1, sub_neg, AstVariant::Full);
    if (n % 2 == 0) t2 = -t2;  // (-1)^{n+1}
    CHECK(lhs == pref * (t1 + t2));
  }
}

TEST_CASE("okada identity") {
  // n = 1: the Pfaffian is the corner entry 1 - a^2 = W(x; -a^2)
  CHECK(okada_pfaffian_identity(1, {ExactScalar::ratio(2, 3)}, {ExactScalar::ratio(5, 4)}));
  Sampler s(9);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < 5; ++k) {
      std::vector<ExactScalar> xs, as;
      bool ok = false;
      while (!ok) {
        xs.clear();
        as.clear();
        for (int i = 0; i < 2 * n - 1; ++i) {
          xs.push_back(s.scalar());
          as.push_back(s.scalar());
        }
        ok = true;
        for (int i = 0; i < 2 * n - 1 && ok; ++i)
          for (int j = i; j < 2 * n - 1 && ok; ++j)
            if ((ExactScalar(1) - xs[static_cast<size_t>(i)] * xs[static_cast<size_t>(j)])
                    .is_zero())
              ok = false;
      }
      CHECK(okada_pfaffian_identity(n, xs, as));
    }
  }
}

TEST_CASE("pfaffian sylvester identity") {
  Sampler s(21);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < 5; ++k) {
      SkewTriangle c(2 * n);
      for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) c.set(i, j, s.scalar());
      if (c.at(2 * n - 1, 2 * n).is_zero()) continue;
      CHECK(pfaffian_sylvester_identity(c));
    }
  }
}

TEST_CASE("oosasm factors consume the displayed argument lists") {
  // odd n: the P factor takes u_1..u_{n+1}, the Q factor u_1..u_n
  const int n = 3;
  SpectralPoint pt = fixed_point(n);
  std::vector<ExactScalar> up(pt.u.begin(), pt.u.begin() + 4);
  std::vector<ExactScalar> uq(pt.u.begin(), pt.u.begin() + 3);
  CHECK(oosasm_partition_formula(n, pt) ==
        oosasm_p_factor(2, pt.q, up) * oosasm_q_factor(2, pt.q, uq));
}
