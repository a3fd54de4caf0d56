#pragma once

#include <string>
#include <vector>

#include "astlab/exact.hpp"

namespace astlab {

// Weakly decreasing nonnegative integer sequence; implicitly zero-padded.
using Partition = std::vector<long>;

// (k,k,k-1,k-1,...,1,1)
Partition double_staircase(int k);

// Bialternant Schur function; arguments must be pairwise distinct.
ExactScalar schur(const Partition& lam, const std::vector<ExactScalar>& xs);

// Symplectic character by the determinant formula
// det(x_i^{l_j+n-j+1} - x_i^{-(l_j+n-j+1)}) /
//   (prod (x_i - 1/x_i) prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j)).
ExactScalar symplectic(const Partition& lam, const std::vector<ExactScalar>& xs);

enum class PrincipalKind { Schur, Symplectic };

// Value at n repeated 1's from the hook-content / symplectic product formulas.
Rational principal_specialization(PrincipalKind kind, const Partition& lam, int n);

enum class CharacterFormula { AstSchur, QastSchur, OosasmSympOdd, OosasmSympEven };

// Character side of the q = zeta partition function identities. us carries
// u_1..u_{n+1}; p feeds the AST/QAST prefactor (ignored by OOSASM kinds).
ExactScalar character_formula_eval(CharacterFormula which, int n, const std::vector<Rational>& us,
                                   const Rational& p);

enum class ProductKind {
  Asm,
  Cspp,
  Oosasm4nMinus1,
  Oosasm4nPlus1,
  Vhsasm,
  Ast2Enum,
  Ast3EnumOdd,
  Ast3EnumEven,
  AsmOneMinusOne,
};

const char* product_name(ProductKind k);
ProductKind product_from_name(const std::string& name);  // throws UnknownIdentifier
Rational product_formula(ProductKind kind, int n);

// Optional check of two observed symplectic ratio identities. They hold with
// the appended argument q^2/u_1 and q a primitive 6th root of unity; the
// evaluation therefore runs in Q(zeta_12) at q = zeta^2.
bool symplectic_ratio_identities(int n, const std::vector<ExactScalar>& us);

}  // namespace astlab
