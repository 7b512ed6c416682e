#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucob/surface.hpp"

namespace ucob {

// A normal-form unoriented cobordism from n_in to n_out circles: a set of
// canonical connected components whose boundaries partition the slot set.
// Closed components never persist; they are evaluated away on creation.
struct Diagram {
  unsigned n_in = 0;
  unsigned n_out = 0;
  std::vector<SurfaceComponent> components;  // sorted by minimal slot

  static Diagram empty() { return Diagram{}; }

  void sort_components();
  bool is_valid() const;  // boundaries partition the slot set, all canonical

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_in == b.n_in && a.n_out == b.n_out && a.components == b.components;
  }
  friend bool operator<(const Diagram& a, const Diagram& b);

  std::string to_json() const;
};

// Formal Poly-linear combination of diagrams with common arities.
class Morphism {
 public:
  Morphism() = default;
  Morphism(unsigned n_in, unsigned n_out) : n_in_(n_in), n_out_(n_out) {}
  Morphism(const Diagram& d, Poly coeff = Poly(1));

  unsigned n_in() const { return n_in_; }
  unsigned n_out() const { return n_out_; }
  const std::map<Diagram, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Diagram& d, const Poly& coeff);
  Morphism& operator+=(const Morphism& o);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(const Morphism& a);
  friend Morphism operator*(const Poly& c, const Morphism& f);
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.n_in_ == b.n_in_ && a.n_out_ == b.n_out_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

  std::string to_json() const;
  static Morphism from_json(const std::string& text);

 private:
  unsigned n_in_ = 0, n_out_ = 0;
  std::map<Diagram, Poly> terms_;
};

enum class Generator { Id, M, Delta, U, Eps, Tau, Phi, Theta };

Morphism generator(Generator g);

// Disjoint union, with g's slots shifted past f's.
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism identity(unsigned n);

// Gluing arithmetic on a single diagram: glue slot_a to slot_b, evaluating any
// component that closes.  Returns the remaining diagram (or nullopt when the
// whole diagram closed into scalars) and the accumulated scalar factor.
struct GlueResult {
  std::optional<Diagram> diagram;
  Poly scalar;
};
GlueResult glue_pair(const Diagram& d, const Slot& slot_a, const Slot& slot_b,
                     const SequenceTriple& seqs);

// Evaluation context for composing in SUCob / SOCob: the sequences, the
// handle-relation data (genus cutoff K and recurrence coefficients a_1..a_M as
// ring elements), and the theta = 0 quotient flag.
struct SkeinContext {
  SequenceTriple seqs;
  unsigned K = 0;                 // 0 disables handle reduction (viewable category)
  std::vector<Poly> rec_coeffs;   // a_1..a_M
  bool theta_is_zero = false;

  // Viewable category VUCob: evaluation only, no quotients.
  static SkeinContext viewable(SequenceTriple seqs);
  // Skein quotient derived from the triple's alpha (geometric ratio or
  // rational generating function).
  static SkeinContext skein(SequenceTriple seqs, bool theta_is_zero = false);

  // The symbolic geometric specialization (K = 1, handle -> lambda).
  static SkeinContext symbolic();
  // Same with beta = gamma = 0 and theta killed (the orientable quotient).
  static SkeinContext symbolic_orientable();
};

// Gluing composition g . f followed by skein reduction and, when the context
// says so, the theta = 0 quotient.
Morphism compose(const Morphism& g, const Morphism& f, const SkeinContext& ctx);

// Rewrites every component of genus >= ctx.K through the handle recurrence,
// iterated to a fixpoint.  No-op when ctx.K == 0.
Morphism skein_reduce(const Morphism& f, const SkeinContext& ctx);

// Closes in:i onto out:i and evaluates.
Poly trace(const Morphism& f, const SkeinContext& ctx);

// Glues the targets of two 0->m morphisms pairwise and evaluates.
Poly bilinear_form(const Morphism& f, const Morphism& g, const SkeinContext& ctx);

// x = m . delta, y = m . (theta x id), c = u . eps as endomorphisms of the
// circle, and their powers.
Morphism handle_x(unsigned power = 1);
Morphism cross_y(unsigned power = 1);

// sigma = x^K + sum_{i=1..M} (-1)^i a_i x^{K-i}.
Morphism handle_sigma(const SkeinContext& ctx);

// Trace of f against the End(1) spanning family {x^n y^i, x^n phi,
// y^i x^m u eps x^n y^j} with genus exponents up to genus_bound; true iff
// every such trace vanishes.
bool is_negligible(const Morphism& f, const SkeinContext& ctx, unsigned genus_bound);

// Generator-word DSL: whitespace-separated `u eps m delta phi theta tau id`,
// `(f | g)` for tensor and `f . g` for composition.
Morphism parse_generator_word(const std::string& text, const SkeinContext& ctx);

}  // namespace ucob
