#pragma once

#include <string>
#include <vector>

#include "ucob/poly.hpp"

namespace ucob {
namespace wreath {

// Morphism A^{tensor k_in} -> A^{tensor k_out} in Rep(Z_2), where A is the
// two-dimensional algebra of functions on a swapped pair of points.  Basis of
// A^{tensor k}: delta_T for T a subset of [k] (bitmask; bit i-1 set iff
// position i carries delta_{-1}).
class Z2Morphism {
 public:
  Z2Morphism() = default;
  Z2Morphism(unsigned k_in, unsigned k_out);
  static Z2Morphism identity(unsigned k);

  unsigned k_in() const { return k_in_; }
  unsigned k_out() const { return k_out_; }
  size_t dim_in() const { return size_t{1} << k_in_; }
  size_t dim_out() const { return size_t{1} << k_out_; }
  LambdaFrac& at(size_t row, size_t col) { return entries_[row * dim_in() + col]; }
  const LambdaFrac& at(size_t row, size_t col) const { return entries_[row * dim_in() + col]; }

  bool is_zero() const;

  friend Z2Morphism operator*(const Z2Morphism& g, const Z2Morphism& f);  // g after f
  friend Z2Morphism operator+(const Z2Morphism& a, const Z2Morphism& b);
  friend Z2Morphism operator*(const LambdaFrac& c, const Z2Morphism& f);
  friend Z2Morphism kron(const Z2Morphism& a, const Z2Morphism& b);
  friend bool operator==(const Z2Morphism& a, const Z2Morphism& b) {
    return a.k_in_ == b.k_in_ && a.k_out_ == b.k_out_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Z2Morphism& a, const Z2Morphism& b) { return !(a == b); }

 private:
  unsigned k_in_ = 0, k_out_ = 0;
  std::vector<LambdaFrac> entries_;
};

// Structure maps of A: u, m, eps (carrying 1/lambda), delta (carrying
// lambda), phi (the swap) and theta = 0.
struct Z2Algebra {
  Z2Morphism u, m, eps, delta, phi, theta;
};
Z2Algebra algebra_A();

// Invariant vectors delta_J + delta_{J^c} of A^{tensor n}, one per mark
// class; coordinates over the delta basis.
using Z2Vector = std::vector<Poly>;
std::vector<Z2Vector> invariant_basis(unsigned n);

// Partial matchings between {1..size_i} and {1..size_j}.
struct Recollement {
  std::vector<std::pair<int, int>> pairs;
};
std::vector<Recollement> recollements(unsigned size_i, unsigned size_j);

// P_u(t) = prod_{pi13 <= a < u} (t - a).
Poly p_u(unsigned pi13_classes, unsigned u_classes);

// One link of a single-strand chain in S_t(Rep Z_2): the unit/counit of the
// unit object (broken strand ends) or a lifted Rep(Z_2) morphism.
struct ChainLink {
  enum Kind { UnitC, CounitC, Hom } kind = Hom;
  Z2Morphism hom;

  static ChainLink unit() { return ChainLink{UnitC, {}}; }
  static ChainLink counit() { return ChainLink{CounitC, {}}; }
  static ChainLink lift(Z2Morphism h) { return ChainLink{Hom, std::move(h)}; }
};

// Evaluates a chain applied left to right.  Supports exactly the recollement
// shapes the evaluation chains need: middle indices fully matched on both
// sides compose in Rep(Z_2); a strand closed off by the unit-object ends
// contributes its P_u(t) factor.  Anything else throws
// UnsupportedRecollementOverlap.
LambdaFrac compose_chain(const std::vector<ChainLink>& chain);

// eps_{<A>} x^n y^i u_{<A>} with i crosses; i = 0 gives alpha_n = 2
// lambda^{n-1} t, and any cross kills the chain since theta_A = 0.
LambdaFrac wreath_evaluation(unsigned n, unsigned crosses = 0);

// dim Hom(1, <A>_t^{tensor n}) = sum_l 2^{n-l} S(n,l).
unsigned long long st_hom_dim(unsigned n);

}  // namespace wreath
}  // namespace ucob
