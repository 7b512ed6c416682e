#include "ucob/gram.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ucob/parallel.hpp"
#include "ucob/rng.hpp"
#include <json.hpp>

namespace ucob {

PolyMatrix gram_matrix(const std::vector<Morphism>& family, const SkeinContext& ctx) {
  const size_t n = family.size();
  PolyMatrix m(n, n);
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) cells.push_back({i, j});
  parallel_for(cells.size(), [&](size_t k) {
    auto [i, j] = cells[k];
    m.at(i, j) = bilinear_form(family[i], family[j], ctx);
  });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
  return m;
}

Poly pattern_det(unsigned n, const Poly& a, const Poly& b) {
  if (n < 1) throw std::invalid_argument("pattern_det needs n >= 1");
  return (a - b).pow(n - 1) * (a + Poly(static_cast<long>(n - 1)) * b);
}

Poly xi_gram_det(unsigned m, unsigned genus, const SkeinContext& ctx) {
  if (m < 2) throw std::invalid_argument("xi_gram_det needs m >= 2");
  std::vector<Morphism> family;
  for (const MarkClass& cls : all_mark_classes(m)) family.push_back(xi(m, cls, genus));
  Poly det = det_bareiss(gram_matrix(family, ctx));
  Poly alpha = term(ctx.seqs.alpha, 2 * genus + m - 1);
  Poly gamma = term(ctx.seqs.gamma, 2 * genus + m - 2);
  Poly expected = pattern_det(1u << (m - 1), alpha, gamma);
  if (det != expected)
    throw std::logic_error("xi Gram determinant disagrees with the pattern formula");
  return det;
}

std::vector<Poly> conjecture_candidates(unsigned m) {
  std::vector<Poly> out = {Poly::s(), Poly::a0(), Poly::b0(), Poly::g0()};
  const Poly lam_a0 = Poly::lambda() * Poly::a0();
  const Poly sb0 = Poly::s() * Poly::b0();
  for (unsigned k = 0; k < m; ++k) {
    Poly shift(static_cast<long>(2 * k));
    out.push_back(lam_a0 - Poly::g0() - shift);
    out.push_back(Poly::g0() + sb0 - shift);
    out.push_back(Poly::g0() - sb0 - shift);
  }
  return out;
}

namespace {

bool nonneg_even_integer(const Rational& r) {
  if (!r.is_integer() || r.sign() < 0) return false;
  return mpz_even_p(r.num().get_mpz_t()) != 0;
}

bool point_is_generic(const std::array<Rational, kNumVars>& p) {
  const Rational& s = p[0];
  const Rational& a0 = p[1];
  const Rational& b0 = p[2];
  const Rational& g0 = p[3];
  if (s.is_zero() || a0.is_zero() || b0.is_zero() || g0.is_zero()) return false;
  Rational lam = s * s;
  if (nonneg_even_integer(lam * a0 - g0)) return false;
  if (nonneg_even_integer(g0 + s * b0)) return false;
  if (nonneg_even_integer(g0 - s * b0)) return false;
  return true;
}

}  // namespace

std::array<Rational, kNumVars> generic_point(SplitMix64& rng) {
  for (;;) {
    std::array<Rational, kNumVars> p;
    for (int i = 0; i < kNumVars; ++i) p[i] = rng.rational(9, 7);
    if (point_is_generic(p)) return p;
  }
}

namespace {

// Coefficients (lowest first) of det(M) as a univariate polynomial in `var`,
// all other variables frozen at `base`; by evaluation at degree+1 points and
// Newton interpolation.
std::vector<Rational> det_along_line(const PolyMatrix& m, Var var,
                                     const std::array<Rational, kNumVars>& base) {
  size_t bound = 0;
  for (size_t i = 0; i < m.rows(); ++i) {
    int row_max = 0;
    for (size_t j = 0; j < m.cols(); ++j) row_max = std::max(row_max, m.at(i, j).degree_in(var));
    bound += static_cast<size_t>(row_max);
  }
  const size_t npoints = bound + 1;
  std::vector<Rational> xs(npoints), ys(npoints);
  parallel_for(npoints, [&](size_t k) {
    std::array<Rational, kNumVars> p = base;
    p[static_cast<int>(var)] = Rational(static_cast<long>(k) + 1);
    xs[k] = p[static_cast<int>(var)];
    ys[k] = det_rational(eval_matrix(m, p));
  });
  // Newton divided differences, then expansion to monomial coefficients.
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < npoints; ++level)
    for (size_t i = npoints - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> coeffs{dd[npoints - 1]};
  for (size_t i = npoints - 1; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + dd[i]
    coeffs.insert(coeffs.begin(), Rational(0));
    for (size_t j = 0; j + 1 < coeffs.size(); ++j) coeffs[j] -= xs[i] * coeffs[j + 1];
    coeffs[0] += dd[i];
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

unsigned root_multiplicity(std::vector<Rational> coeffs, const Rational& root) {
  unsigned mult = 0;
  while (coeffs.size() > 1) {
    // synthetic division by (x - root)
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry(0);
    for (size_t i = coeffs.size(); i-- > 1;) {
      carry = coeffs[i] + carry * root;
      q[i - 1] = carry;
    }
    Rational rem = coeffs[0] + carry * root;
    if (!rem.is_zero()) break;
    coeffs = std::move(q);
    ++mult;
  }
  if (coeffs.size() == 1 && coeffs[0].is_zero()) return mult;  // zero polynomial guard
  return mult;
}

GramReport make_report(const std::string& family, unsigned m, unsigned genus) {
  GramReport r;
  r.family = family;
  r.m = m;
  r.genus = genus;
  return r;
}

std::vector<Morphism> family_morphisms(const std::string& family, unsigned m, unsigned genus) {
  if (family == "S") return spanning_S(m);
  if (family == "T") return spanning_T(m);
  if (family == "Xi") {
    std::vector<Morphism> out;
    for (const MarkClass& cls : all_mark_classes(m)) out.push_back(xi(m, cls, genus));
    return out;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

SkeinContext family_context(const std::string& family) {
  if (family == "S") return SkeinContext::symbolic_orientable();
  return SkeinContext::symbolic();
}

void run_symbolic(GramReport& r, const std::vector<Poly>& candidates) {
  r.mode = "symbolic";
  r.det = det_bareiss(r.matrix);
  FactorExtraction fx = extract_linear_factors(r.det, candidates);
  r.factors = std::move(fx.multiplicities);
  r.residual = fx.residual;
}

void run_sampled(GramReport& r, const std::vector<Poly>& candidates, uint64_t seed,
                 unsigned samples) {
  r.mode = "sampled";
  SplitMix64 rng(seed);
  for (unsigned i = 0; i < samples; ++i) r.points.push_back(generic_point(rng));
  r.det_values.resize(r.points.size());
  parallel_for(r.points.size(),
               [&](size_t i) { r.det_values[i] = det_rational(eval_matrix(r.matrix, r.points[i])); });

  // Factor orders are estimated as root orders along one-variable lines
  // through a generic base point: a0 carries the lambda*a0 - g0 - 2k family,
  // b0 carries g0 +- s*b0 - 2k, and each variable its own monomial power.
  std::array<Rational, kNumVars> base = generic_point(rng);
  for (Var v : {Var::s, Var::a0, Var::b0, Var::g0}) {
    std::vector<Rational> coeffs = det_along_line(r.matrix, v, base);
    std::string var_name = kVarNames[static_cast<int>(v)];
    r.factor_order_estimates[var_name] = root_multiplicity(coeffs, Rational(0));
    for (const Poly& cand : candidates) {
      if (cand.degree_in(v) != 1 || cand.total_degree() < 2) continue;
      // Solve cand(base with v free) = 0 for v: cand is linear in v.
      std::array<Rational, kNumVars> p0 = base, p1 = base;
      p0[static_cast<int>(v)] = Rational(0);
      p1[static_cast<int>(v)] = Rational(1);
      Rational c0 = cand.eval(p0), c1 = cand.eval(p1);
      Rational slope = c1 - c0;
      if (slope.is_zero()) continue;
      Rational root = -c0 / slope;
      r.factor_order_estimates[cand.str()] = root_multiplicity(coeffs, root);
    }
  }
}

}  // namespace

GramReport conjecture_check(unsigned m, const std::string& mode, uint64_t seed, unsigned samples) {
  GramReport r = make_report("T", m, 0);
  SkeinContext ctx = SkeinContext::symbolic();
  r.matrix = gram_matrix(spanning_T(m), ctx);
  std::vector<Poly> candidates = conjecture_candidates(m);
  if (mode == "symbolic") {
    if (r.matrix.rows() > 32)
      throw std::invalid_argument("symbolic determinants are limited to 32 x 32; use sampled");
    run_symbolic(r, candidates);
  } else if (mode == "sampled") {
    run_sampled(r, candidates, seed, samples);
  } else {
    throw std::invalid_argument("mode must be 'symbolic' or 'sampled'");
  }
  return r;
}

GramReport gram_report(const std::string& family, unsigned m, unsigned genus,
                       const std::string& mode, uint64_t seed, unsigned samples) {
  GramReport r = make_report(family, m, genus);
  SkeinContext ctx = family_context(family);
  r.matrix = gram_matrix(family_morphisms(family, m, genus), ctx);
  std::vector<Poly> candidates;
  if (family == "T") {
    candidates = conjecture_candidates(m);
  } else if (family == "S") {
    candidates = {Poly::s(), Poly::a0()};
    for (unsigned k = 1; k < m; ++k)
      candidates.push_back(Poly::lambda() * Poly::a0() - Poly(static_cast<long>(2 * k)));
  } else {
    Poly alpha = term(ctx.seqs.alpha, 2 * genus + m - 1);
    Poly gamma = term(ctx.seqs.gamma, 2 * genus + m - 2);
    candidates = {alpha - gamma, alpha + Poly(static_cast<long>((1u << (m - 1)) - 1)) * gamma};
  }
  std::string actual = mode;
  if (mode == "auto") actual = r.matrix.rows() <= 32 ? "symbolic" : "sampled";
  if (actual == "symbolic")
    run_symbolic(r, candidates);
  else
    run_sampled(r, candidates, seed, samples);
  return r;
}

std::string GramReport::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["m"] = m;
  if (family == "Xi") j["genus"] = genus;
  j["mode"] = mode;
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t k = 0; k < matrix.cols(); ++k) row.push_back(matrix.at(i, k).str());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  if (mode == "symbolic") {
    j["det"] = det.str();
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [cand, mult] : factors)
      if (mult > 0) f[cand.str()] = mult;
    j["factors"] = f;
    j["residual"] = residual.str();
  } else {
    nlohmann::json pts = nlohmann::json::array();
    for (size_t i = 0; i < points.size(); ++i) {
      nlohmann::json pt;
      for (int v = 0; v < kNumVars; ++v) pt[kVarNames[v]] = points[i][v].str();
      pt["det"] = det_values[i].str();
      pts.push_back(pt);
    }
    j["samples"] = pts;
    j["factor_order_estimates"] = factor_order_estimates;
  }
  return j.dump(2);
}

std::string GramReport::to_latex() const {
  std::ostringstream os;
  os << "\\begin{bmatrix}\n";
  for (size_t i = 0; i < matrix.rows(); ++i) {
    for (size_t k = 0; k < matrix.cols(); ++k) {
      os << matrix.at(i, k).latex();
      if (k + 1 < matrix.cols()) os << " & ";
    }
    if (i + 1 < matrix.rows()) os << " \\\\";
    os << "\n";
  }
  os << "\\end{bmatrix}\n";
  return os.str();
}

}  // namespace ucob
