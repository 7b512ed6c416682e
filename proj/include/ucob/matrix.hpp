#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ucob/poly.hpp"

namespace ucob {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Poly& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  bool is_symmetric() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

// Exact determinant by single-step (Bareiss) fraction-free elimination.  Every
// intermediate division is exact in the polynomial ring; a non-exact division
// indicates a bug and surfaces as NotDivisible.
Poly det_bareiss(const PolyMatrix& m);

// Rank over the fraction field Q(s, a0, b0, g0, t), by fraction-free
// elimination with full pivoting.
size_t rank_poly(const PolyMatrix& m);

// Repeatedly divides p by each candidate while the division stays exact.
// Returns per-candidate multiplicities together with the residual, so that
// p = residual * prod candidate^multiplicity.
struct FactorExtraction {
  std::map<Poly, unsigned> multiplicities;
  Poly residual;
};
FactorExtraction extract_linear_factors(const Poly& p, const std::vector<Poly>& candidates);

// Dense matrices over Q, used for sampled determinants and rank checks.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix eval_matrix(const PolyMatrix& m, const std::array<Rational, kNumVars>& point);
Rational det_rational(RationalMatrix m);
size_t rank_rational(RationalMatrix m);

}  // namespace ucob
