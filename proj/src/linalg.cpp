#include "astlab/linalg.hpp"

#include <cstdint>
#include <map>

namespace astlab {

ExactScalar determinant(Matrix m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeMismatch("determinant needs a square matrix");
  if (n == 0) return ExactScalar(1);
  ExactScalar res(1);
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r) {
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) return ExactScalar(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    res *= m[c][c];
    ExactScalar inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      ExactScalar f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  if (sign < 0) res = -res;
  return res;
}

SkewTriangle::SkewTriangle(int order) : order_(order) {
  if (order < 0) throw ShapeMismatch("negative order");
  a_.assign(static_cast<size_t>(order) * (order - 1) / 2, ExactScalar(0));
}

size_t SkewTriangle::idx(int i, int j) const {
  if (!(1 <= i && i < j && j <= order_)) throw ShapeMismatch("skew triangle index out of range");
  // row-major over the strict upper triangle
  size_t r = static_cast<size_t>(i - 1);
  return r * order_ - r * (r + 1) / 2 + static_cast<size_t>(j - i - 1);
}

const ExactScalar& SkewTriangle::at(int i, int j) const { return a_[idx(i, j)]; }

void SkewTriangle::set(int i, int j, ExactScalar v) { a_[idx(i, j)] = std::move(v); }

ExactScalar SkewTriangle::signed_at(int i, int j) const {
  if (i == j) return ExactScalar(0);
  return i < j ? at(i, j) : -at(j, i);
}

Matrix SkewTriangle::completion() const {
  Matrix m(static_cast<size_t>(order_), std::vector<ExactScalar>(static_cast<size_t>(order_)));
  for (int i = 1; i <= order_; ++i)
    for (int j = 1; j <= order_; ++j) m[i - 1][j - 1] = signed_at(i, j);
  return m;
}

namespace {

ExactScalar pf_rec(const SkewTriangle& t, std::uint64_t active,
                   std::map<std::uint64_t, ExactScalar>& memo) {
  if (active == 0) return ExactScalar(1);
  auto it = memo.find(active);
  if (it != memo.end()) return it->second;
  int i0 = 0;
  for (int i = 1; i <= t.order(); ++i) {
    if (active & (1ull << i)) {
      i0 = i;
      break;
    }
  }
  ExactScalar sum(0);
  int parity = 0;
  for (int j = i0 + 1; j <= t.order(); ++j) {
    if (!(active & (1ull << j))) continue;
    const ExactScalar& a = t.at(i0, j);
    if (!a.is_zero()) {
      std::uint64_t rest = active & ~(1ull << i0) & ~(1ull << j);
      ExactScalar term = a * pf_rec(t, rest, memo);
      sum += (parity % 2 == 0) ? term : -term;
    }
    ++parity;
  }
  memo.emplace(active, sum);
  return sum;
}

}  // namespace

ExactScalar pfaffian(const SkewTriangle& t) {
  if (t.order() % 2 != 0) throw OddOrder();
  if (t.order() > 62) throw ShapeMismatch("pfaffian order too large for subset memoization");
  std::uint64_t active = 0;
  for (int i = 1; i <= t.order(); ++i) active |= (1ull << i);
  std::map<std::uint64_t, ExactScalar> memo;
  return pf_rec(t, active, memo);
}

}  // namespace astlab
