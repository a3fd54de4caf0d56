#pragma once

#include <string>
#include <vector>

#include "astlab/exact.hpp"
#include "astlab/linalg.hpp"
#include "astlab/vertex_model.hpp"

namespace astlab {

enum class AstVariant { Full, AtP };

// Determinant evaluation of the AST partition function: Full carries the
// (n+1) x (n+1) matrix with last row 1 - sigma(u_j/u_{n+1})/sigma(u_j/p);
// AtP is the n x n Cauchy-type specialization at u_{n+1} = p.
ExactScalar ast_partition_formula(int n, const SpectralPoint& pt, AstVariant variant);

// Determinant evaluation of the QAST partition function Z^up.
ExactScalar qast_partition_formula(int n, const SpectralPoint& pt, AstVariant variant);

// Izergin-Korepin determinant for the ASM partition function with horizontal
// parameters us, vertical parameters vs and bulk label u_i / v_j, together
// with the brute-force sum over ASM(n).
ExactScalar ik_partition_det(int n, const ExactScalar& q, const std::vector<ExactScalar>& us,
                             const std::vector<ExactScalar>& vs);
ExactScalar ik_partition_brute(int n, const ExactScalar& q, const std::vector<ExactScalar>& us,
                               const std::vector<ExactScalar>& vs, int cap = 6);

// Pfaffian formula for the OOSASM partition function, and its two factors.
ExactScalar oosasm_partition_formula(int n, const SpectralPoint& pt);
ExactScalar oosasm_p_factor(int m, const ExactScalar& q, const std::vector<ExactScalar>& us);
ExactScalar oosasm_q_factor(int m, const ExactScalar& q, const std::vector<ExactScalar>& us);

// Okada-type Pfaffian evaluation and the Pfaffian analogue of Sylvester's
// determinant identity it rests on.
bool okada_pfaffian_identity(int n, const std::vector<ExactScalar>& xs,
                             const std::vector<ExactScalar>& as);
bool pfaffian_sylvester_identity(const SkewTriangle& c);  // order 2n, n >= 2

struct FormulaReport {
  std::string case_id;
  int n = 0;
  unsigned seed = 0;
  int points = 0;
  int rejected = 0;
  bool pass = true;
  std::vector<bool> per_point;
  std::string first_counterexample;
};

// Uniform harness: closed formula against the brute-force partition function
// at seeded random points. Cases: ast-full, ast-at-p, ast-asm-relation,
// qast-full, qast-at-p, oosasm.
FormulaReport formula_vs_bruteforce(const std::string& case_id, int n, unsigned seed, int points,
                                    int cap = 5);

}  // namespace astlab
