#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ucob/rational.hpp"

namespace ucob {

// The scalar ring: exact sparse polynomials over Q in the five variables
// s, a0, b0, g0, t.  lambda is not a variable of its own; it is s^2, so that
// sqrt(lambda) = s is available for t_{+-} and the crosscap factors.
enum class Var : uint8_t { s = 0, a0 = 1, b0 = 2, g0 = 3, t = 4 };
inline constexpr int kNumVars = 5;
extern const char* const kVarNames[kNumVars];

// Exponent vector, ordered graded-lexicographically with s < a0 < b0 < g0 < t.
struct Mono {
  std::array<uint16_t, kNumVars> e{0, 0, 0, 0, 0};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }
  bool divides(const Mono& m) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  // Requires divisibility.
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

// grlex: first by total degree, ties by exponents of s, a0, b0, g0, t in turn.
bool mono_less(const Mono& a, const Mono& b);

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(Var v, int power = 1);
  static Poly s() { return variable(Var::s); }
  static Poly a0() { return variable(Var::a0); }
  static Poly b0() { return variable(Var::b0); }
  static Poly g0() { return variable(Var::g0); }
  static Poly t() { return variable(Var::t); }
  static Poly lambda() { return variable(Var::s, 2); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Rational constant_term() const;

  // Terms sorted descending in grlex; no zero coefficients.
  const std::vector<std::pair<Mono, Rational>>& terms() const { return terms_; }
  const Mono& leading_mono() const;
  const Rational& leading_coeff() const;

  int total_degree() const;       // -1 for the zero polynomial
  int degree_in(Var v) const;     // -1 for the zero polynomial

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Total order compatible with canonical form, for use as a map key.
  friend bool operator<(const Poly& a, const Poly& b);

  // Exact division; throws NotDivisible when the divisor is not a factor.
  Poly divexact(const Poly& q) const;
  // Quotient only if division is exact, otherwise nullopt-like flag via bool.
  bool try_divexact(const Poly& q, Poly* quotient) const;

  // Exact evaluation; every variable occurring in the polynomial must be
  // assigned.  Throws MissingVariable otherwise.
  Rational eval(const std::map<Var, Rational>& point) const;
  // Evaluation at a full point, as an array indexed by Var.
  Rational eval(const std::array<Rational, kNumVars>& point) const;
  // Substitute a single variable by a polynomial.
  Poly subst(Var v, const Poly& value) const;

  // Canonical text form, with even powers of s rendered through lambda
  // (s^2 -> lambda, s^5 -> s*lambda^2).  Round-trips through parse().
  std::string str() const;
  std::string latex() const;
  static Poly parse(const std::string& text);

 private:
  void prune();
  // sorted descending by mono_less
  std::vector<std::pair<Mono, Rational>> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// A polynomial divided by a power of lambda = s^2.  Keeps the ring plain while
// supporting the two places that need lambda^{-1} (the wreath evaluation and
// the counit normalization of the interpolation algebras).
class LambdaFrac {
 public:
  LambdaFrac() = default;
  LambdaFrac(Poly num, unsigned lambda_pow = 0) : num_(std::move(num)), pow_(lambda_pow) {
    normalize();
  }
  LambdaFrac(long c) : num_(Poly(c)), pow_(0) {}  // NOLINT

  const Poly& num() const { return num_; }
  unsigned lambda_pow() const { return pow_; }
  bool is_zero() const { return num_.is_zero(); }
  // The underlying polynomial; throws NotDivisible if a lambda power remains.
  Poly as_poly() const;

  friend LambdaFrac operator+(const LambdaFrac& a, const LambdaFrac& b);
  friend LambdaFrac operator-(const LambdaFrac& a, const LambdaFrac& b);
  friend LambdaFrac operator*(const LambdaFrac& a, const LambdaFrac& b);
  LambdaFrac& operator+=(const LambdaFrac& o) { return *this = *this + o; }
  LambdaFrac& operator*=(const LambdaFrac& o) { return *this = *this * o; }
  friend bool operator==(const LambdaFrac& a, const LambdaFrac& b) {
    return a.pow_ == b.pow_ && a.num_ == b.num_;
  }
  friend bool operator!=(const LambdaFrac& a, const LambdaFrac& b) { return !(a == b); }
  friend bool operator<(const LambdaFrac& a, const LambdaFrac& b) {
    if (a.pow_ != b.pow_) return a.pow_ < b.pow_;
    return a.num_ < b.num_;
  }

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  unsigned pow_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LambdaFrac& f);

}  // namespace ucob
