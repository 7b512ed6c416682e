#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucob/errors.hpp"
#include "ucob/matrix.hpp"
#include "ucob/poly.hpp"
#include "ucob/rng.hpp"

using namespace ucob;

namespace {

Poly random_poly(SplitMix64& rng, int max_terms = 4, int max_exp = 3) {
  Poly p;
  int nterms = 1 + static_cast<int>(rng.below(max_terms));
  for (int i = 0; i < nterms; ++i) {
    Poly term(rng.rational(8, 4));
    for (int v = 0; v < kNumVars; ++v)
      term *= Poly::variable(static_cast<Var>(v), static_cast<int>(rng.below(max_exp)));
    p += term;
  }
  return p;
}

// Cofactor expansion along the first row; the independent determinant oracle.
Poly det_cofactor(const PolyMatrix& m) {
  const size_t n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m.at(0, 0);
  Poly det(0);
  for (size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix sub(n - 1, n - 1);
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Poly term = m.at(0, j) * det_cofactor(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("poly addition basics") {
  Poly a0 = Poly::a0();
  CHECK(a0 + Poly(0) == a0);
  Poly la = Poly::lambda() * Poly::a0();
  CHECK((la + (-la)).is_zero());
  // (g0 + s b0) + (g0 - s b0) = 2 g0, the t+ + t- numerator symmetry
  Poly tp = Poly::g0() + Poly::s() * Poly::b0();
  Poly tm = Poly::g0() - Poly::s() * Poly::b0();
  CHECK(tp + tm == Poly(2) * Poly::g0());
}

TEST_CASE("poly multiplication basics") {
  CHECK(Poly::s() * Poly::s() == Poly::lambda());
  Poly tp = Poly::g0() + Poly::s() * Poly::b0();
  Poly tm = Poly::g0() - Poly::s() * Poly::b0();
  CHECK(tp * tm == Poly::g0() * Poly::g0() - Poly::lambda() * Poly::b0() * Poly::b0());
  Poly p = random_poly(*new SplitMix64(7));
  CHECK(Poly(1) * p == p);
}

TEST_CASE("divexact") {
  Poly handle = Poly::lambda() * Poly::a0() - Poly(2);
  Poly p = Poly::lambda() * Poly::a0().pow(3) * handle;
  CHECK(p.divexact(handle) == Poly::lambda() * Poly::a0().pow(3));
  Poly q = random_poly(*new SplitMix64(11));
  CHECK(q.divexact(Poly(1)) == q);
  Poly bad = Poly::a0() * Poly::a0() - Poly(4);
  CHECK_THROWS_AS(bad.divexact(Poly::a0() - Poly(3)), NotDivisible);
}

TEST_CASE("poly evaluation") {
  Poly handle = Poly::lambda() * Poly::a0() - Poly(2);
  std::map<Var, Rational> root{{Var::s, Rational(1)}, {Var::a0, Rational(2)}};
  CHECK(handle.eval(root) == Rational(0));
  Poly p = Poly::lambda() * Poly::a0() - Poly::g0();
  std::map<Var, Rational> pt{{Var::s, Rational(1)}, {Var::a0, Rational(5)}, {Var::g0, Rational(3)}};
  CHECK(p.eval(pt) == Rational(2));
  CHECK(Poly(0).eval({}) == Rational(0));
  CHECK_THROWS_AS(p.eval({{Var::s, Rational(1)}}), MissingVariable);
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("divexact inverts multiplication") {
  SplitMix64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng);
    Poly q = random_poly(rng);
    if (q.is_zero()) continue;
    CHECK((p * q).divexact(q) == p);
  }
}

TEST_CASE("parse round-trips") {
  SplitMix64 rng(44);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng);
    CHECK(Poly::parse(p.str()) == p);
  }
  CHECK(Poly::parse("lambda") == Poly::s() * Poly::s());
  CHECK(Poly::parse("  - 3/2 * s^3*a0 + t ") ==
        Poly(Rational(-3, 2)) * Poly::variable(Var::s, 3) * Poly::a0() + Poly::t());
  CHECK(Poly::parse("s^2") == Poly::lambda());
  CHECK(Poly::lambda().str() == "lambda");
  CHECK(Poly::variable(Var::s, 3).str() == "s*lambda");
  CHECK_THROWS_AS(Poly::parse("x + 1"), ParseError);
}

TEST_CASE("bareiss 2x2 pattern") {
  PolyMatrix m(2, 2);
  m.at(0, 0) = Poly::a0();
  m.at(0, 1) = Poly::b0();
  m.at(1, 0) = Poly::b0();
  m.at(1, 1) = Poly::a0();
  CHECK(det_bareiss(m) == Poly::a0() * Poly::a0() - Poly::b0() * Poly::b0());
}

TEST_CASE("bareiss identity and singular") {
  for (size_t n : {1u, 3u, 5u}) {
    PolyMatrix id(n, n);
    for (size_t i = 0; i < n; ++i) id.at(i, i) = Poly(1);
    CHECK(det_bareiss(id) == Poly(1));
  }
  PolyMatrix z(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) z.at(i, j) = Poly::a0();
  CHECK(det_bareiss(z).is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion up to 4x4") {
  SplitMix64 rng(45);
  for (size_t n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 12; ++rep) {
      PolyMatrix m(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 2, 2);
      CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("bareiss commutes with evaluation") {
  SplitMix64 rng(46);
  for (int rep = 0; rep < 5; ++rep) {
    PolyMatrix m(5, 5);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j) m.at(i, j) = random_poly(rng, 2, 2);
    Poly det = det_bareiss(m);
    for (int pt = 0; pt < 20; ++pt) {
      std::array<Rational, kNumVars> point;
      for (int v = 0; v < kNumVars; ++v) point[v] = rng.rational();
      CHECK(det.eval(point) == det_rational(eval_matrix(m, point)));
    }
  }
}

TEST_CASE("factor extraction") {
  Poly s = Poly::s(), a0 = Poly::a0();
  Poly handle = Poly::lambda() * a0 - Poly(2);
  Poly p = Poly::lambda() * a0.pow(3) * handle;
  FactorExtraction fx = extract_linear_factors(p, {s, a0, handle});
  CHECK(fx.multiplicities.at(s) == 2);
  CHECK(fx.multiplicities.at(a0) == 3);
  CHECK(fx.multiplicities.at(handle) == 1);
  CHECK(fx.residual == Poly(1));

  FactorExtraction one = extract_linear_factors(Poly(1), {s, a0});
  CHECK(one.multiplicities.at(s) == 0);
  CHECK(one.residual == Poly(1));

  // The orientable m = 3 determinant: lambda^6 a0^11 (lambda a0 - 2)^7 (lambda a0 - 4)
  Poly h4 = Poly::lambda() * a0 - Poly(4);
  Poly m3 = Poly::lambda().pow(6) * a0.pow(11) * handle.pow(7) * h4;
  FactorExtraction fx3 = extract_linear_factors(m3, {s, a0, handle, h4});
  CHECK(fx3.multiplicities.at(s) == 12);
  CHECK(fx3.multiplicities.at(a0) == 11);
  CHECK(fx3.multiplicities.at(handle) == 7);
  CHECK(fx3.multiplicities.at(h4) == 1);
  CHECK(fx3.residual == Poly(1));
}

TEST_CASE("rank over the fraction field") {
  PolyMatrix m(3, 3);
  m.at(0, 0) = Poly::a0();
  m.at(0, 1) = Poly::b0();
  m.at(1, 0) = Poly::lambda() * Poly::a0();
  m.at(1, 1) = Poly::lambda() * Poly::b0();
  m.at(2, 2) = Poly::t();
  CHECK(rank_poly(m) == 2);
}

TEST_CASE("lambda fractions") {
  LambdaFrac f(Poly(2) * Poly::t(), 1);
  CHECK(f.lambda_pow() == 1);
  LambdaFrac g = f * LambdaFrac(Poly::lambda());
  CHECK(g.lambda_pow() == 0);
  CHECK(g.as_poly() == Poly(2) * Poly::t());
  LambdaFrac h = LambdaFrac(Poly(1), 1) + LambdaFrac(Poly(1));
  CHECK(h == LambdaFrac(Poly(1) + Poly::lambda(), 1));
  CHECK_THROWS_AS(h.as_poly(), NotDivisible);
}
