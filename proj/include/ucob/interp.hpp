#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ucob/cobordism.hpp"
#include "ucob/spanning.hpp"
#include "ucob/wreath.hpp"

namespace ucob {
namespace interp {

// Standard-form basis element of the connected Hom space into <A>_t^{tensor n}
// in S_t(Rep Z_2): a set partition with one mark class per block.
struct StBasisElement {
  std::vector<std::vector<int>> blocks;
  std::vector<MarkClass> classes;

  friend bool operator<(const StBasisElement& a, const StBasisElement& b) {
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.classes < b.classes;
  }
  friend bool operator==(const StBasisElement& a, const StBasisElement& b) {
    return a.blocks == b.blocks && a.classes == b.classes;
  }
};

struct StHomElement {
  unsigned n = 0;
  std::map<StBasisElement, Poly> terms;
};

// Image of xi^n_{J-bar} under F_A: the one-block standard form carrying the
// invariant vector delta_{J-bar}.
StHomElement f_image_xi(unsigned n, const MarkClass& cls);

// The three-summand target decomposition: each block of a diagram lands
// purely in the wreath summand (W), the plus Deligne summand (P) or the minus
// one (M); theta-decorated blocks vanish in W.
enum class Summand : uint8_t { W = 0, P = 1, M = 2 };

struct TargetBlock {
  Summand summand = Summand::W;
  std::vector<int> slots;
  MarkClass cls;  // meaningful only in the W summand

  friend bool operator<(const TargetBlock& a, const TargetBlock& b) {
    if (a.slots != b.slots) return a.slots < b.slots;
    if (a.summand != b.summand) return a.summand < b.summand;
    return a.cls < b.cls;
  }
  friend bool operator==(const TargetBlock& a, const TargetBlock& b) {
    return a.summand == b.summand && a.slots == b.slots && a.cls == b.cls;
  }
};
using TargetKey = std::vector<TargetBlock>;

enum class Quotient { OCob, SUCob };

// Coordinates of F(d) over the standard basis of the target Hom space.
struct TripleImage {
  unsigned m = 0;
  std::map<TargetKey, Poly> coords;
};

// Image coordinates of one normal-form diagram 0 -> m.  OCob uses only the
// wreath summand; SUCob sums over pure-diagonal summand assignments.  Genus
// must already be skein-reduced away (UnreducedGenus otherwise).
TripleImage f_image_diagram(const Diagram& d, Quotient quotient);

// Rank of the image coordinate vectors over the fraction field, or at a
// sample value of s when sample_s is given.
size_t rank_of_images(const std::vector<Morphism>& family, Quotient quotient,
                      std::optional<Rational> sample_s = std::nullopt);

// dim Hom(1, A^{tensor m}) in the triple-product target:
// sum_{a+b+c=m} multinomial(m; a,b,c) st_hom_dim(a) Bell(b) Bell(c).
unsigned long long target_hom_dim(unsigned m);

}  // namespace interp
}  // namespace ucob
