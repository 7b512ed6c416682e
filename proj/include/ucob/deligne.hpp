#pragma once

#include <map>
#include <string>
#include <vector>

#include "ucob/poly.hpp"

namespace ucob {
namespace deligne {

// Element of the two-row point set: top points are 1..top, bottom points are
// stored negated (-1..-bottom).  Ordering puts tops first.
bool elem_less(int a, int b);

// Partition of {1..top} u {1'..bottom'}; blocks sorted, canonical.
struct SetPartition {
  unsigned top = 0;
  unsigned bottom = 0;
  std::vector<std::vector<int>> blocks;

  void canonicalize_blocks();
  bool is_valid() const;

  static SetPartition identity(unsigned n);
  // One block containing everything (empty partition when both rows empty).
  static SetPartition joined(unsigned top, unsigned bottom);

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.top == b.top && a.bottom == b.bottom && a.blocks == b.blocks;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b);

  std::string to_json() const;
  static SetPartition from_json(const std::string& text);
};

// Linear combination of partitions with lambda-fraction coefficients (the
// counit carries 1/lambda).
class PartitionMorphism {
 public:
  PartitionMorphism() = default;
  PartitionMorphism(unsigned top, unsigned bottom) : top_(top), bottom_(bottom) {}
  PartitionMorphism(const SetPartition& p, LambdaFrac coeff = LambdaFrac(1));

  unsigned top() const { return top_; }
  unsigned bottom() const { return bottom_; }
  const std::map<SetPartition, LambdaFrac>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SetPartition& p, const LambdaFrac& c);
  PartitionMorphism& operator+=(const PartitionMorphism& o);
  friend PartitionMorphism operator*(const LambdaFrac& c, const PartitionMorphism& f);
  friend bool operator==(const PartitionMorphism& a, const PartitionMorphism& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PartitionMorphism& a, const PartitionMorphism& b) {
    return !(a == b);
  }

 private:
  unsigned top_ = 0, bottom_ = 0;
  std::map<SetPartition, LambdaFrac> terms_;
};

// Composition g . f (f first): stack, join blocks through the middle row,
// remove middle-only blocks with one factor of t_param each.
PartitionMorphism pcompose(const PartitionMorphism& g, const PartitionMorphism& f,
                           const Poly& t_param);

// Side-by-side tensor product.
PartitionMorphism ptensor(const PartitionMorphism& f, const PartitionMorphism& g);

// The extended Frobenius algebra A_{+-} on the one-point object of Rep(S_t):
// phi is the through-strand and theta = +-sqrt(lambda) u.
struct FrobeniusPM {
  PartitionMorphism u, m, eps, delta, phi, theta;
};
FrobeniusPM frobenius_A_pm(int sign);

// Interpolation parameters of the second main specialization.
Poly t_param_plus();   // (g0 + s b0) / 2
Poly t_param_minus();  // (g0 - s b0) / 2

// (alpha_n, beta_n, gamma_n) of A_{+-}, computed as eps x^n y^i u chains in
// the partition category at parameter t_{+-}.
struct EvaluationRow {
  LambdaFrac alpha, beta, gamma;
};
EvaluationRow evaluate_A_pm(int sign, unsigned n);

// Generic dimension of Hom(0, n): Bell(n).
unsigned long long hom_dim_deligne(unsigned n);

}  // namespace deligne
}  // namespace ucob
