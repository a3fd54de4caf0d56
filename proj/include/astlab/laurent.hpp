#pragma once

#include <vector>

#include "astlab/exact.hpp"

namespace astlab {

// Laurent polynomial with exact coefficients. Normalized: leading and
// trailing coefficients are nonzero unless the polynomial is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  LaurentPoly(long min_exp, std::vector<ExactScalar> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long order() const;   // lowest exponent; throws on zero polynomial
  long degree() const;  // highest exponent; throws on zero polynomial
  ExactScalar coeff(long e) const;
  ExactScalar eval(const ExactScalar& x) const;

 private:
  long min_exp_ = 0;
  std::vector<ExactScalar> coeffs_;
};

// The unique Laurent polynomial supported on [min_exp, max_exp] through the
// given samples. Requires nodes.size() == values.size() == window size and a
// nonsingular interpolation matrix (nodes nonzero, suitably distinct).
LaurentPoly laurent_from_samples(const std::vector<ExactScalar>& nodes,
                                 const std::vector<ExactScalar>& values, long min_exp,
                                 long max_exp);

}  // namespace astlab
