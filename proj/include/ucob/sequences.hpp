#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ucob/poly.hpp"

namespace ucob {

// Univariate polynomial over Q in the generating-function variable T,
// coefficients lowest-degree first with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::vector<Rational> coeffs);  // NOLINT
  QPoly(long c) : QPoly(std::vector<Rational>{Rational(c)}) {}  // NOLINT
  static QPoly monomial(const Rational& c, size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree with the convention deg(0) = -1; constants have degree 0.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational at_zero() const { return coeff(0); }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const QPoly& d, QPoly* q, QPoly* r) const;
  QPoly mod(const QPoly& d) const;
  // Monic gcd.
  static QPoly gcd(QPoly a, QPoly b);
  // g = gcd(a,b) together with u,v s.t. u*a + v*b = g.
  static QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly* u, QPoly* v);

  std::string str() const;

 private:
  void prune();
  std::vector<Rational> c_;
};

// Sequence given directly by a symbolic geometric progression
// (term g = initial * ratio^g), with Poly-valued initial term and ratio.
struct GeometricSymbolic {
  Poly initial;
  Poly ratio;
};

// Sequence given by a rational generating function p(T)/q(T) with
// gcd(p, q) = 1 and q(0) = 1.
struct RationalGF {
  QPoly p;
  QPoly q;
};

class SequenceSpec {
 public:
  SequenceSpec() : spec_(GeometricSymbolic{Poly(0), Poly::lambda()}) {}
  SequenceSpec(GeometricSymbolic g);  // NOLINT
  SequenceSpec(RationalGF gf);        // NOLINT

  static SequenceSpec zero() { return SequenceSpec(GeometricSymbolic{Poly(0), Poly::lambda()}); }

  bool is_geometric() const { return std::holds_alternative<GeometricSymbolic>(spec_); }
  bool is_gf() const { return std::holds_alternative<RationalGF>(spec_); }
  const GeometricSymbolic& geometric() const { return std::get<GeometricSymbolic>(spec_); }
  const RationalGF& gf() const { return std::get<RationalGF>(spec_); }

  bool is_identically_zero() const;

  // JSON per the external schema, e.g. {"kind":"geometric","initial":"a0",
  // "ratio":"lambda"} or {"kind":"gf","p":["5"],"q":["1","-2"]}.
  std::string to_json() const;
  static SequenceSpec from_json(const std::string& text);

 private:
  std::variant<GeometricSymbolic, RationalGF> spec_;
};

// g-th sequence term.
Poly term(const SequenceSpec& spec, unsigned g);

struct RecurrenceConstants {
  unsigned N = 0;  // deg p
  unsigned M = 0;  // deg q
  unsigned K = 0;  // max(N+1, M)
  // a_1..a_M with q(T) = 1 - a_1 T + a_2 T^2 - ... + (-1)^M a_M T^M, so that
  // eta_l = a_1 eta_{l-1} - a_2 eta_{l-2} + ... + (-1)^{M-1} a_M eta_{l-M}
  // for all l >= K.
  std::vector<Rational> a;
};
RecurrenceConstants recurrence_constants(const RationalGF& spec);

struct SequenceTriple {
  SequenceSpec alpha, beta, gamma;

  // The geometric specialization with alpha_0 = a0, beta_0 = b0,
  // gamma_0 = g0 and common ratio lambda.
  static SequenceTriple symbolic_geometric();
  // Same alpha, with beta = gamma = 0 (the orientable setting).
  static SequenceTriple symbolic_orientable();

  std::string to_json() const;
  static SequenceTriple from_json(const std::string& text);
};

// True iff deg p_beta < K and deg p_gamma < K, with K determined by alpha.
// All three specs must share the same denominator q (or, in the symbolic
// geometric case, the same ratio); otherwise MismatchedDenominators.
bool satisfies_degree_condition(const SequenceTriple& triple);

// Splits each generating function along q = q' * q'' with gcd(q', q'') = 1 and
// q'(0) = q''(0) = 1, returning triples with denominators q' and q'' whose
// terms sum to the original term-by-term.
std::pair<SequenceTriple, SequenceTriple> partial_fraction_split(const SequenceTriple& triple,
                                                                 const QPoly& q_prime,
                                                                 const QPoly& q_dblprime);

}  // namespace ucob
