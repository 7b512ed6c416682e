#include "ucob/matrix.hpp"

#include <stdexcept>

namespace ucob {

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Poly det_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return Poly(1);
  PolyMatrix a = m;
  int sign = 1;
  Poly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      size_t r = k + 1;
      while (r < n && a.at(r, k).is_zero()) ++r;
      if (r == n) return Poly(0);
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num.divexact(prev);
      }
    prev = a.at(k, k);
  }
  Poly det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

size_t rank_poly(const PolyMatrix& m) {
  PolyMatrix a = m;
  const size_t rows = a.rows(), cols = a.cols();
  size_t rank = 0;
  Poly prev(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (size_t j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(pivot, j));
    for (size_t i = row + 1; i < rows; ++i)
      for (size_t j = col + 1; j < cols; ++j) {
        Poly num = a.at(i, j) * a.at(row, col) - a.at(i, col) * a.at(row, j);
        a.at(i, j) = num.divexact(prev);
      }
    for (size_t i = row + 1; i < rows; ++i) a.at(i, col) = Poly(0);
    prev = a.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

FactorExtraction extract_linear_factors(const Poly& p, const std::vector<Poly>& candidates) {
  FactorExtraction out;
  out.residual = p;
  for (const Poly& cand : candidates) {
    if (cand.is_zero()) throw std::invalid_argument("zero candidate factor");
    unsigned mult = 0;
    Poly q;
    while (!out.residual.is_zero() && out.residual.try_divexact(cand, &q)) {
      out.residual = q;
      ++mult;
    }
    out.multiplicities[cand] = mult;
  }
  return out;
}

RationalMatrix eval_matrix(const PolyMatrix& m, const std::array<Rational, kNumVars>& point) {
  RationalMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(point);
  return out;
}

Rational det_rational(RationalMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = a.rows();
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      det = -det;
    }
    det *= a.at(k, k);
    Rational inv = Rational(1) / a.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      Rational f = a.at(i, k) * inv;
      for (size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

size_t rank_rational(RationalMatrix a) {
  const size_t rows = a.rows(), cols = a.cols();
  size_t rank = 0, row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (size_t j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(pivot, j));
    Rational inv = Rational(1) / a.at(row, col);
    for (size_t i = row + 1; i < rows; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col) * inv;
      for (size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace ucob
