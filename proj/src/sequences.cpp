#include "ucob/sequences.hpp"

#include <sstream>

#include "ucob/errors.hpp"
#include <json.hpp>

namespace ucob {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  prune();
}

QPoly QPoly::monomial(const Rational& c, size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::prune() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& d, QPoly* q, QPoly* r) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero");
  QPoly rem = *this;
  std::vector<Rational> quot(degree() >= d.degree() ? degree() - d.degree() + 1 : 0);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    size_t k = rem.degree() - d.degree();
    Rational c = rem.c_.back() / d.c_.back();
    quot[k] = c;
    rem = rem - QPoly::monomial(c, k) * d;
  }
  if (q) *q = QPoly(std::move(quot));
  if (r) *r = std::move(rem);
}

QPoly QPoly::mod(const QPoly& d) const {
  QPoly r;
  divmod(d, nullptr, &r);
  return r;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = (Rational(1) / a.c_.back()) * a;
  return a;
}

QPoly QPoly::ext_gcd(const QPoly& a, const QPoly& b, QPoly* u, QPoly* v) {
  // Iterative extended Euclid, normalized monic at the end.
  QPoly r0 = a, r1 = b;
  QPoly u0(1), u1(0), v0(0), v1(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    r0.divmod(r1, &q, &r);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    Rational lead = r0.coeffs().back();
    Rational inv = Rational(1) / lead;
    r0 = inv * r0;
    u0 = inv * u0;
    v0 = inv * v0;
  }
  if (u) *u = u0;
  if (v) *v = v0;
  return r0;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*T";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

SequenceSpec::SequenceSpec(GeometricSymbolic g) : spec_(std::move(g)) {
  if (std::get<GeometricSymbolic>(spec_).ratio.is_zero())
    throw std::invalid_argument("geometric ratio must be nonzero");
}

SequenceSpec::SequenceSpec(RationalGF gf) : spec_(std::move(gf)) {
  const auto& g = std::get<RationalGF>(spec_);
  if (g.q.at_zero() != Rational(1))
    throw std::invalid_argument("generating-function denominator must have q(0) = 1");
  if (!g.p.is_zero() && QPoly::gcd(g.p, g.q).degree() > 0)
    throw std::invalid_argument("generating function p/q must be in lowest terms");
}

bool SequenceSpec::is_identically_zero() const {
  if (is_geometric()) return geometric().initial.is_zero();
  return gf().p.is_zero();
}

Poly term(const SequenceSpec& spec, unsigned g) {
  if (spec.is_geometric()) {
    const auto& geo = spec.geometric();
    return geo.initial * geo.ratio.pow(g);
  }
  // Power-series expansion of p/q via eta_l = p_l - sum_{i>=1} q_i eta_{l-i}.
  const auto& gf = spec.gf();
  std::vector<Rational> eta(g + 1);
  for (unsigned l = 0; l <= g; ++l) {
    Rational v = gf.p.coeff(l);
    for (int i = 1; i <= gf.q.degree() && static_cast<unsigned>(i) <= l; ++i)
      v -= gf.q.coeff(i) * eta[l - i];
    eta[l] = v;
  }
  return Poly(eta[g]);
}

RecurrenceConstants recurrence_constants(const RationalGF& spec) {
  RecurrenceConstants rc;
  rc.N = spec.p.is_zero() ? 0 : static_cast<unsigned>(spec.p.degree());
  rc.M = static_cast<unsigned>(std::max(spec.q.degree(), 0));
  rc.K = std::max(rc.N + 1, rc.M);
  rc.a.resize(rc.M);
  for (unsigned i = 1; i <= rc.M; ++i) {
    Rational qi = spec.q.coeff(i);
    rc.a[i - 1] = (i % 2 == 1) ? -qi : qi;
  }
  return rc;
}

SequenceTriple SequenceTriple::symbolic_geometric() {
  return SequenceTriple{SequenceSpec(GeometricSymbolic{Poly::a0(), Poly::lambda()}),
                        SequenceSpec(GeometricSymbolic{Poly::b0(), Poly::lambda()}),
                        SequenceSpec(GeometricSymbolic{Poly::g0(), Poly::lambda()})};
}

SequenceTriple SequenceTriple::symbolic_orientable() {
  return SequenceTriple{SequenceSpec(GeometricSymbolic{Poly::a0(), Poly::lambda()}),
                        SequenceSpec(GeometricSymbolic{Poly(0), Poly::lambda()}),
                        SequenceSpec(GeometricSymbolic{Poly(0), Poly::lambda()})};
}

bool satisfies_degree_condition(const SequenceTriple& triple) {
  if (triple.alpha.is_geometric()) {
    const Poly& ratio = triple.alpha.geometric().ratio;
    for (const SequenceSpec* s : {&triple.beta, &triple.gamma}) {
      if (s->is_identically_zero()) continue;
      if (!s->is_geometric() || s->geometric().ratio != ratio)
        throw MismatchedDenominators("triple does not share a common ratio");
    }
    return true;  // geometric terms have numerator degree 0 < K = 1
  }
  RecurrenceConstants rc = recurrence_constants(triple.alpha.gf());
  for (const SequenceSpec* s : {&triple.beta, &triple.gamma}) {
    if (s->is_identically_zero()) continue;
    if (!s->is_gf() || s->gf().q != triple.alpha.gf().q)
      throw MismatchedDenominators("triple does not share a common denominator q");
    if (s->gf().p.degree() >= static_cast<int>(rc.K)) return false;
  }
  return true;
}

namespace {

RationalGF split_one(const RationalGF& f, const QPoly& qp, const QPoly& qpp, const QPoly& inv_qpp,
                     bool first_part) {
  // p / (q' q'') = v'/q' + v''/q'' with v' = p * inv(q'') mod q'.
  QPoly vp = (f.p * inv_qpp).mod(qp);
  if (first_part) return RationalGF{vp, qp};
  QPoly num = f.p - vp * qpp;
  QPoly vpp, rem;
  num.divmod(qp, &vpp, &rem);
  if (!rem.is_zero()) throw std::logic_error("partial fraction split failed to divide");
  return RationalGF{vpp, qpp};
}

}  // namespace

std::pair<SequenceTriple, SequenceTriple> partial_fraction_split(const SequenceTriple& triple,
                                                                 const QPoly& q_prime,
                                                                 const QPoly& q_dblprime) {
  for (const SequenceSpec* s : {&triple.alpha, &triple.beta, &triple.gamma})
    if (!s->is_gf()) throw std::invalid_argument("partial fractions need RationalGF specs");
  const QPoly& q = triple.alpha.gf().q;
  if (q_prime.at_zero() != Rational(1) || q_dblprime.at_zero() != Rational(1))
    throw NotAFactorization("factors must satisfy q'(0) = q''(0) = 1");
  if (!(q_prime * q_dblprime == q)) throw NotAFactorization("q' * q'' does not equal q");
  if (triple.beta.gf().q != q || triple.gamma.gf().q != q)
    throw MismatchedDenominators("triple does not share a common denominator q");
  QPoly u, v;
  QPoly g = QPoly::ext_gcd(q_dblprime, q_prime, &u, &v);
  if (g.degree() != 0) throw NotCoprime("q' and q'' are not coprime");
  // u * q'' = 1 mod q'
  const QPoly& inv_qpp = u;

  auto split_spec = [&](const SequenceSpec& s, bool first) {
    RationalGF part = split_one(s.gf(), q_prime, q_dblprime, inv_qpp, first);
    // Cancel common factors so the invariant gcd(p, q) = 1 holds per part.
    QPoly c = QPoly::gcd(part.p, part.q);
    if (c.degree() > 0) {
      QPoly pq, pr, qq, qr;
      part.p.divmod(c, &pq, &pr);
      part.q.divmod(c, &qq, &qr);
      Rational norm = Rational(1) / qq.at_zero();
      part = RationalGF{norm * pq, norm * qq};
    }
    return SequenceSpec(part);
  };

  SequenceTriple a{split_spec(triple.alpha, true), split_spec(triple.beta, true),
                   split_spec(triple.gamma, true)};
  SequenceTriple b{split_spec(triple.alpha, false), split_spec(triple.beta, false),
                   split_spec(triple.gamma, false)};
  return {a, b};
}

namespace {

using nlohmann::json;

json qpoly_to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

QPoly qpoly_from_json(const json& arr) {
  std::vector<Rational> v;
  for (const auto& c : arr) v.push_back(Rational::parse(c.get<std::string>()));
  return QPoly(std::move(v));
}

json spec_to_json_obj(const SequenceSpec& s) {
  json j;
  if (s.is_geometric()) {
    j["kind"] = "geometric";
    j["initial"] = s.geometric().initial.str();
    j["ratio"] = s.geometric().ratio.str();
  } else {
    j["kind"] = "gf";
    j["p"] = qpoly_to_json(s.gf().p);
    j["q"] = qpoly_to_json(s.gf().q);
  }
  return j;
}

SequenceSpec spec_from_json_obj(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "geometric")
    return SequenceSpec(GeometricSymbolic{Poly::parse(j.at("initial").get<std::string>()),
                                          Poly::parse(j.at("ratio").get<std::string>())});
  if (kind == "gf")
    return SequenceSpec(RationalGF{qpoly_from_json(j.at("p")), qpoly_from_json(j.at("q"))});
  throw ParseError("unknown sequence kind '" + kind + "'");
}

}  // namespace

std::string SequenceSpec::to_json() const {
  return spec_to_json_obj(*this).dump();
}

SequenceSpec SequenceSpec::from_json(const std::string& text) {
  return spec_from_json_obj(json::parse(text));
}

std::string SequenceTriple::to_json() const {
  json j;
  j["alpha"] = spec_to_json_obj(alpha);
  j["beta"] = spec_to_json_obj(beta);
  j["gamma"] = spec_to_json_obj(gamma);
  return j.dump();
}

SequenceTriple SequenceTriple::from_json(const std::string& text) {
  json j = json::parse(text);
  return SequenceTriple{spec_from_json_obj(j.at("alpha")), spec_from_json_obj(j.at("beta")),
                        spec_from_json_obj(j.at("gamma"))};
}

}  // namespace ucob
