#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ucob/cobordism.hpp"
#include "ucob/matrix.hpp"
#include "ucob/spanning.hpp"

namespace ucob {

struct GramReport {
  std::string family;  // "S", "T" or "Xi"
  unsigned m = 0;
  unsigned genus = 0;  // Xi family only
  std::string mode;    // "symbolic" or "sampled"
  PolyMatrix matrix;

  // symbolic mode: det = residual * prod factors^multiplicity
  Poly det;
  std::map<Poly, unsigned> factors;
  Poly residual;

  // sampled mode
  std::vector<std::array<Rational, kNumVars>> points;
  std::vector<Rational> det_values;
  std::map<std::string, unsigned> factor_order_estimates;

  std::string to_json() const;
  std::string to_latex() const;  // the matrix as a bmatrix
};

// Pairwise bilinear forms; entries computed in parallel.
PolyMatrix gram_matrix(const std::vector<Morphism>& family, const SkeinContext& ctx);

// Closed form (a-b)^{n-1} (a + (n-1) b) for the a/b pattern matrix.
Poly pattern_det(unsigned n, const Poly& a, const Poly& b);

// Determinant of the 2^{m-1} x 2^{m-1} Gram matrix of {xi^m_{J-bar, g}};
// checked against pattern_det(2^{m-1}, alpha_{2g+m-1}, gamma_{2g+m-2}).
Poly xi_gram_det(unsigned m, unsigned genus, const SkeinContext& ctx);

// The candidate factors for the T_m determinant: the variables themselves and
// lambda a0 - g0 - 2k, g0 +- s b0 - 2k for 0 <= k < m.
std::vector<Poly> conjecture_candidates(unsigned m);

// Symbolic mode: exact determinant plus trial division by the candidates.
// Sampled mode: determinants at >= `samples` generic rational points off the
// excluded locus, plus factor-order estimates along one-variable lines.
GramReport conjecture_check(unsigned m, const std::string& mode, uint64_t seed = 0,
                            unsigned samples = 10);

// Report for one spanning family, choosing symbolic vs sampled by size
// (symbolic only attempted up to 32 x 32) unless mode is forced.
GramReport gram_report(const std::string& family, unsigned m, unsigned genus,
                       const std::string& mode = "auto", uint64_t seed = 0,
                       unsigned samples = 10);

// A "generic" rational point: nonzero coordinates, with lambda a0 - g0 and
// g0 +- s b0 off the non-negative even integers.
std::array<Rational, kNumVars> generic_point(class SplitMix64& rng);

}  // namespace ucob
