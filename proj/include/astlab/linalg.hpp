#pragma once

#include <vector>

#include "astlab/exact.hpp"

namespace astlab {

using Matrix = std::vector<std::vector<ExactScalar>>;

// Exact determinant by Gaussian elimination with division; pivot is the
// first nonzero entry in column order. det of the 0x0 matrix is 1.
ExactScalar determinant(Matrix m);

// Strict upper triangle of a skew-symmetric matrix, 1-based indices i < j.
class SkewTriangle {
 public:
  explicit SkewTriangle(int order);
  int order() const { return order_; }
  const ExactScalar& at(int i, int j) const;  // i < j
  void set(int i, int j, ExactScalar v);
  ExactScalar signed_at(int i, int j) const;  // any i != j, antisymmetric
  Matrix completion() const;                  // full skew-symmetric matrix

 private:
  int order_;
  std::vector<ExactScalar> a_;
  size_t idx(int i, int j) const;
};

// Pfaffian under the perfect-matching sign convention
// Pf = sum over matchings {{i1,j1},...}, i_k < j_k, of sgn(i1 j1 i2 j2 ...) * prod a_{i_k j_k},
// computed by expansion along the lowest active row, with memoization on the
// set of active indices. Throws OddOrder on odd order; Pf of order 0 is 1.
ExactScalar pfaffian(const SkewTriangle& t);

}  // namespace astlab
