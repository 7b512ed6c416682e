#include "ucob/wreath.hpp"

#include <functional>
#include <stdexcept>

#include "ucob/errors.hpp"
#include "ucob/spanning.hpp"

namespace ucob {
namespace wreath {

Z2Morphism::Z2Morphism(unsigned k_in, unsigned k_out)
    : k_in_(k_in), k_out_(k_out), entries_((size_t{1} << k_out) * (size_t{1} << k_in)) {}

Z2Morphism Z2Morphism::identity(unsigned k) {
  Z2Morphism m(k, k);
  for (size_t i = 0; i < m.dim_in(); ++i) m.at(i, i) = LambdaFrac(1);
  return m;
}

bool Z2Morphism::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Z2Morphism operator*(const Z2Morphism& g, const Z2Morphism& f) {
  if (f.k_out() != g.k_in()) throw ArityMismatch("Z2 morphism composition arity mismatch");
  Z2Morphism out(f.k_in(), g.k_out());
  for (size_t i = 0; i < out.dim_out(); ++i)
    for (size_t j = 0; j < out.dim_in(); ++j) {
      LambdaFrac acc;
      for (size_t k = 0; k < f.dim_out(); ++k) acc += g.at(i, k) * f.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

Z2Morphism operator+(const Z2Morphism& a, const Z2Morphism& b) {
  if (a.k_in() != b.k_in() || a.k_out() != b.k_out())
    throw ArityMismatch("Z2 morphism addition arity mismatch");
  Z2Morphism out = a;
  for (size_t i = 0; i < out.dim_out(); ++i)
    for (size_t j = 0; j < out.dim_in(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

Z2Morphism operator*(const LambdaFrac& c, const Z2Morphism& f) {
  Z2Morphism out = f;
  for (size_t i = 0; i < out.dim_out(); ++i)
    for (size_t j = 0; j < out.dim_in(); ++j) out.at(i, j) = c * out.at(i, j);
  return out;
}

Z2Morphism kron(const Z2Morphism& a, const Z2Morphism& b) {
  Z2Morphism out(a.k_in() + b.k_in(), a.k_out() + b.k_out());
  for (size_t ia = 0; ia < a.dim_out(); ++ia)
    for (size_t ja = 0; ja < a.dim_in(); ++ja)
      for (size_t ib = 0; ib < b.dim_out(); ++ib)
        for (size_t jb = 0; jb < b.dim_in(); ++jb)
          out.at(ia | (ib << a.k_out()), ja | (jb << a.k_in())) = a.at(ia, ja) * b.at(ib, jb);
  return out;
}

Z2Algebra algebra_A() {
  Z2Algebra A;
  A.u = Z2Morphism(0, 1);
  A.u.at(0, 0) = LambdaFrac(1);  // delta_{+1}
  A.u.at(1, 0) = LambdaFrac(1);  // delta_{-1}

  A.m = Z2Morphism(2, 1);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      if (a == b) A.m.at(a, a | (b << 1)) = LambdaFrac(1);

  A.eps = Z2Morphism(1, 0);
  A.eps.at(0, 0) = LambdaFrac(Poly(1), 1);
  A.eps.at(0, 1) = LambdaFrac(Poly(1), 1);

  A.delta = Z2Morphism(1, 2);
  A.delta.at(0, 0) = LambdaFrac(Poly::lambda());   // delta_+ -> delta_+ x delta_+
  A.delta.at(3, 1) = LambdaFrac(Poly::lambda());   // delta_- -> delta_- x delta_-

  A.phi = Z2Morphism(1, 1);
  A.phi.at(0, 1) = LambdaFrac(1);
  A.phi.at(1, 0) = LambdaFrac(1);

  A.theta = Z2Morphism(0, 1);
  return A;
}

std::vector<Z2Vector> invariant_basis(unsigned n) {
  if (n < 1) throw std::invalid_argument("invariant basis needs n >= 1");
  std::vector<Z2Vector> out;
  const uint32_t all = (uint32_t{1} << n) - 1;
  for (const MarkClass& cls : all_mark_classes(n)) {
    Z2Vector v(size_t{1} << n, Poly(0));
    v[cls.rep] += Poly(1);
    v[all & ~cls.rep] += Poly(1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Recollement> recollements(unsigned size_i, unsigned size_j) {
  std::vector<Recollement> out;
  // Backtracking over which element of J (if any) each element of I pairs to.
  std::vector<int> match(size_i, 0);
  std::vector<bool> used(size_j + 1, false);
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == size_i) {
      Recollement r;
      for (unsigned k = 0; k < size_i; ++k)
        if (match[k] > 0) r.pairs.push_back({static_cast<int>(k + 1), match[k]});
      out.push_back(std::move(r));
      return;
    }
    match[i] = 0;
    rec(i + 1);
    for (unsigned j = 1; j <= size_j; ++j)
      if (!used[j]) {
        used[j] = true;
        match[i] = static_cast<int>(j);
        rec(i + 1);
        used[j] = false;
        match[i] = 0;
      }
  };
  rec(0);
  return out;
}

Poly p_u(unsigned pi13_classes, unsigned u_classes) {
  if (pi13_classes > u_classes)
    throw std::invalid_argument("pi_{1,3}(u) cannot have more classes than u");
  Poly out(1);
  for (unsigned a = pi13_classes; a < u_classes; ++a)
    out *= Poly::t() - Poly(static_cast<long>(a));
  return out;
}

LambdaFrac compose_chain(const std::vector<ChainLink>& chain) {
  bool open = false;
  Z2Morphism acc;
  LambdaFrac result(1);
  for (const ChainLink& link : chain) {
    switch (link.kind) {
      case ChainLink::UnitC:
        if (open) throw UnsupportedRecollementOverlap("u_C on an already open strand");
        acc = Z2Morphism::identity(0);
        open = true;
        break;
      case ChainLink::Hom:
        if (!open) throw UnsupportedRecollementOverlap("lifted hom with no open strand");
        if (link.hom.k_in() != acc.k_out())
          throw UnsupportedRecollementOverlap("lifted hom does not match the strand object");
        acc = link.hom * acc;
        break;
      case ChainLink::CounitC: {
        if (!open) throw UnsupportedRecollementOverlap("eps_C with no open strand");
        if (acc.k_out() != 0)
          throw UnsupportedRecollementOverlap(
              "eps_C against a non-unit middle object; this recollement shape is not determined");
        // The strand becomes a middle-only class: one P_u(t) factor.
        result = result * acc.at(0, 0) * LambdaFrac(p_u(0, 1));
        open = false;
        break;
      }
    }
  }
  if (open) throw UnsupportedRecollementOverlap("chain left a strand open");
  return result;
}

LambdaFrac wreath_evaluation(unsigned n, unsigned crosses) {
  Z2Algebra A = algebra_A();
  Z2Morphism x = A.m * A.delta;
  Z2Morphism y = A.m * kron(A.theta, Z2Morphism::identity(1));
  std::vector<ChainLink> chain;
  chain.push_back(ChainLink::unit());
  chain.push_back(ChainLink::lift(A.u));
  for (unsigned i = 0; i < crosses; ++i) chain.push_back(ChainLink::lift(y));
  for (unsigned i = 0; i < n; ++i) chain.push_back(ChainLink::lift(x));
  chain.push_back(ChainLink::lift(A.eps));
  chain.push_back(ChainLink::counit());
  return compose_chain(chain);
}

unsigned long long st_hom_dim(unsigned n) {
  if (n == 0) return 1;
  unsigned long long total = 0;
  for (unsigned l = 1; l <= n; ++l) total += (1ULL << (n - l)) * stirling2(n, l);
  return total;
}

}  // namespace wreath
}  // namespace ucob
