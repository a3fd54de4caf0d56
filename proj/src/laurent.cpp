#include "astlab/laurent.hpp"

namespace astlab {

LaurentPoly::LaurentPoly(long min_exp, std::vector<ExactScalar> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo].is_zero()) ++lo;
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1].is_zero()) --hi;
  coeffs_ = std::vector<ExactScalar>(coeffs_.begin() + static_cast<long>(lo),
                                     coeffs_.begin() + static_cast<long>(hi));
  min_exp_ += static_cast<long>(lo);
  if (coeffs_.empty()) min_exp_ = 0;
}

long LaurentPoly::order() const {
  if (is_zero()) throw Error("order of the zero polynomial");
  return min_exp_;
}

long LaurentPoly::degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

ExactScalar LaurentPoly::coeff(long e) const {
  if (is_zero() || e < min_exp_ || e >= min_exp_ + static_cast<long>(coeffs_.size()))
    return ExactScalar(0);
  return coeffs_[static_cast<size_t>(e - min_exp_)];
}

ExactScalar LaurentPoly::eval(const ExactScalar& x) const {
  if (is_zero()) return ExactScalar(0);
  ExactScalar acc(0);
  // Horner over x, then shift by x^{min_exp}
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc * x.pow(min_exp_);
}

LaurentPoly laurent_from_samples(const std::vector<ExactScalar>& nodes,
                                 const std::vector<ExactScalar>& values, long min_exp,
                                 long max_exp) {
  const size_t n = static_cast<size_t>(max_exp - min_exp + 1);
  if (nodes.size() != n || values.size() != n)
    throw ShapeMismatch("sample count must equal window size");
  // Solve sum_e c_e node^e = value by Gaussian elimination on (node^e).
  std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n + 1));
  for (size_t r = 0; r < n; ++r) {
    if (nodes[r].is_zero()) throw SingularSystem("zero interpolation node");
    for (size_t c = 0; c < n; ++c) m[r][c] = nodes[r].pow(min_exp + static_cast<long>(c));
    m[r][n] = values[r];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r) {
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) throw SingularSystem();
    std::swap(m[piv], m[c]);
    ExactScalar inv = m[c][c].inverse();
    for (size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      ExactScalar f = m[r][c];
      for (size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<ExactScalar> coeffs(n);
  for (size_t r = 0; r < n; ++r) coeffs[r] = m[r][n];
  return LaurentPoly(min_exp, std::move(coeffs));
}

}  // namespace astlab
