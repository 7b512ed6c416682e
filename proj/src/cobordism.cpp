#include "ucob/cobordism.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ucob/errors.hpp"
#include <json.hpp>

namespace ucob {

void Diagram::sort_components() {
  std::sort(components.begin(), components.end(),
            [](const SurfaceComponent& a, const SurfaceComponent& b) {
              return a.boundary.front() < b.boundary.front();
            });
}

bool Diagram::is_valid() const {
  SlotSet seen;
  for (const auto& c : components) {
    if (c.boundary.empty()) return false;
    if (!(canonicalize(c) == c)) return false;
    for (const Slot& s : c.boundary) {
      if (slotset_contains(seen, s)) return false;
      slotset_insert(seen, s);
    }
  }
  SlotSet expected;
  for (unsigned i = 1; i <= n_in; ++i) slotset_insert(expected, Slot::in(static_cast<int>(i)));
  for (unsigned i = 1; i <= n_out; ++i) slotset_insert(expected, Slot::out(static_cast<int>(i)));
  return seen == expected;
}

bool operator<(const Diagram& a, const Diagram& b) {
  if (a.n_in != b.n_in) return a.n_in < b.n_in;
  if (a.n_out != b.n_out) return a.n_out < b.n_out;
  return a.components < b.components;
}

Morphism::Morphism(const Diagram& d, Poly coeff) : n_in_(d.n_in), n_out_(d.n_out) {
  add_term(d, coeff);
}

void Morphism::add_term(const Diagram& d, const Poly& coeff) {
  if (d.n_in != n_in_ || d.n_out != n_out_)
    throw ArityMismatch("diagram arity does not match morphism arity");
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.n_in_ != n_in_ || o.n_out_ != n_out_)
    throw ArityMismatch("morphism arities do not match in addition");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Morphism operator-(const Morphism& a) {
  Morphism r(a.n_in_, a.n_out_);
  for (const auto& [d, c] : a.terms_) r.add_term(d, -c);
  return r;
}

Morphism operator*(const Poly& c, const Morphism& f) {
  Morphism r(f.n_in_, f.n_out_);
  for (const auto& [d, k] : f.terms_) r.add_term(d, c * k);
  return r;
}

namespace {

SurfaceComponent make_component(unsigned genus, unsigned crosscaps, SlotSet boundary,
                                SlotSet marks = {}) {
  SurfaceComponent c;
  c.genus = genus;
  c.crosscaps = crosscaps;
  c.boundary = std::move(boundary);
  c.marks = std::move(marks);
  return canonicalize(c);
}

}  // namespace

Morphism generator(Generator g) {
  Diagram d;
  switch (g) {
    case Generator::Id:
      d.n_in = 1;
      d.n_out = 1;
      d.components = {make_component(0, 0, {Slot::in(1), Slot::out(1)})};
      break;
    case Generator::M:
      d.n_in = 2;
      d.n_out = 1;
      d.components = {make_component(0, 0, {Slot::in(1), Slot::in(2), Slot::out(1)})};
      break;
    case Generator::Delta:
      d.n_in = 1;
      d.n_out = 2;
      d.components = {make_component(0, 0, {Slot::in(1), Slot::out(1), Slot::out(2)})};
      break;
    case Generator::U:
      d.n_in = 0;
      d.n_out = 1;
      d.components = {make_component(0, 0, {Slot::out(1)})};
      break;
    case Generator::Eps:
      d.n_in = 1;
      d.n_out = 0;
      d.components = {make_component(0, 0, {Slot::in(1)})};
      break;
    case Generator::Tau:
      d.n_in = 2;
      d.n_out = 2;
      d.components = {make_component(0, 0, {Slot::in(1), Slot::out(2)}),
                      make_component(0, 0, {Slot::in(2), Slot::out(1)})};
      break;
    case Generator::Phi:
      d.n_in = 1;
      d.n_out = 1;
      d.components = {make_component(0, 0, {Slot::in(1), Slot::out(1)}, {Slot::out(1)})};
      break;
    case Generator::Theta:
      d.n_in = 0;
      d.n_out = 1;
      d.components = {make_component(0, 1, {Slot::out(1)})};
      break;
  }
  d.sort_components();
  return Morphism(d);
}

Morphism identity(unsigned n) {
  Diagram d;
  d.n_in = n;
  d.n_out = n;
  for (unsigned i = 1; i <= n; ++i)
    d.components.push_back(
        make_component(0, 0, {Slot::in(static_cast<int>(i)), Slot::out(static_cast<int>(i))}));
  d.sort_components();
  return Morphism(d);
}

namespace {

SlotSet relabel(const SlotSet& set, const std::function<Slot(const Slot&)>& f) {
  SlotSet out;
  for (const Slot& s : set) slotset_insert(out, f(s));
  return out;
}

SurfaceComponent relabel(const SurfaceComponent& c, const std::function<Slot(const Slot&)>& f) {
  SurfaceComponent out;
  out.genus = c.genus;
  out.crosscaps = c.crosscaps;
  out.boundary = relabel(c.boundary, f);
  out.marks = relabel(c.marks, f);
  return canonicalize(out);
}

// Mutable gluing state: components over a free slot space plus the closed
// scalar collected so far.
struct Gluer {
  std::vector<SurfaceComponent> comps;
  Poly scalar = Poly(1);
  const SequenceTriple& seqs;

  explicit Gluer(const SequenceTriple& s) : seqs(s) {}

  size_t find(const Slot& s) const {
    for (size_t i = 0; i < comps.size(); ++i)
      if (slotset_contains(comps[i].boundary, s)) return i;
    throw SlotMissing("slot " + s.str() + " not present");
  }

  void glue(const Slot& a, const Slot& b) {
    if (a == b) throw SlotMissing("cannot glue a slot to itself");
    size_t ia = find(a), ib = find(b);
    if (ia != ib) {
      SurfaceComponent& A = comps[ia];
      SurfaceComponent B = comps[ib];
      A.genus += B.genus;
      A.crosscaps += B.crosscaps;
      if (A.crosscaps >= 1) {
        A.marks.clear();
      } else {
        bool bit_a = slotset_contains(A.marks, a);
        bool bit_b = slotset_contains(B.marks, b);
        if (bit_a != bit_b) B.marks = slotset_complement(B.boundary, B.marks);
        A.marks = slotset_union(A.marks, B.marks);
      }
      A.boundary = slotset_union(A.boundary, B.boundary);
      comps.erase(comps.begin() + static_cast<long>(ib));
      if (ib < ia) --ia;
      finish(ia, a, b);
    } else {
      SurfaceComponent& A = comps[ia];
      if (A.crosscaps >= 1) {
        A.genus += 1;
      } else {
        bool bit_a = slotset_contains(A.marks, a);
        bool bit_b = slotset_contains(A.marks, b);
        if (bit_a == bit_b) {
          A.genus += 1;
        } else {
          A.crosscaps = 2;
          A.marks.clear();
        }
      }
      finish(ia, a, b);
    }
  }

  void finish(size_t idx, const Slot& a, const Slot& b) {
    SurfaceComponent& c = comps[idx];
    slotset_erase(c.boundary, a);
    slotset_erase(c.boundary, b);
    slotset_erase(c.marks, a);
    slotset_erase(c.marks, b);
    c = canonicalize(c);
    if (c.boundary.empty()) {
      scalar *= evaluate_closed(ClosedSurfaceClass{c.genus, c.crosscaps}, seqs).as_poly();
      comps.erase(comps.begin() + static_cast<long>(idx));
    }
  }
};

}  // namespace

GlueResult glue_pair(const Diagram& d, const Slot& slot_a, const Slot& slot_b,
                     const SequenceTriple& seqs) {
  Gluer g(seqs);
  g.comps = d.components;
  g.glue(slot_a, slot_b);
  GlueResult out;
  out.scalar = g.scalar;
  if (!g.comps.empty()) {
    Diagram res;
    res.components = g.comps;
    // Caller owns the slot bookkeeping; arities are meaningful only when the
    // remaining slots are still exactly in:1..n_in / out:1..n_out.
    res.n_in = d.n_in;
    res.n_out = d.n_out;
    res.sort_components();
    out.diagram = res;
  }
  return out;
}

SkeinContext SkeinContext::viewable(SequenceTriple seqs) {
  SkeinContext ctx;
  ctx.seqs = std::move(seqs);
  ctx.K = 0;
  return ctx;
}

SkeinContext SkeinContext::skein(SequenceTriple seqs, bool theta_is_zero) {
  SkeinContext ctx;
  if (theta_is_zero && !(seqs.beta.is_identically_zero() && seqs.gamma.is_identically_zero()))
    throw std::invalid_argument("theta = 0 requires beta and gamma identically zero");
  if (seqs.alpha.is_geometric()) {
    ctx.K = 1;
    ctx.rec_coeffs = {seqs.alpha.geometric().ratio};
  } else {
    RecurrenceConstants rc = recurrence_constants(seqs.alpha.gf());
    ctx.K = rc.K;
    for (const Rational& a : rc.a) ctx.rec_coeffs.push_back(Poly(a));
  }
  ctx.seqs = std::move(seqs);
  ctx.theta_is_zero = theta_is_zero;
  return ctx;
}

SkeinContext SkeinContext::symbolic() {
  return skein(SequenceTriple::symbolic_geometric());
}

SkeinContext SkeinContext::symbolic_orientable() {
  return skein(SequenceTriple::symbolic_orientable(), /*theta_is_zero=*/true);
}

namespace {

bool has_crosscap(const Diagram& d) {
  for (const auto& c : d.components)
    if (c.crosscaps > 0) return true;
  return false;
}

Morphism apply_quotients(Morphism f, const SkeinContext& ctx) {
  f = skein_reduce(f, ctx);
  if (!ctx.theta_is_zero) return f;
  Morphism out(f.n_in(), f.n_out());
  for (const auto& [d, c] : f.terms())
    if (!has_crosscap(d)) out.add_term(d, c);
  return out;
}

}  // namespace

Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism out(f.n_in() + g.n_in(), f.n_out() + g.n_out());
  const int in_shift = static_cast<int>(f.n_in());
  const int out_shift = static_cast<int>(f.n_out());
  auto shift = [&](const Slot& s) {
    return s.kind == Slot::In ? Slot::in(s.index + in_shift) : Slot::out(s.index + out_shift);
  };
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      Diagram d;
      d.n_in = out.n_in();
      d.n_out = out.n_out();
      d.components = df.components;
      for (const auto& comp : dg.components) d.components.push_back(relabel(comp, shift));
      d.sort_components();
      out.add_term(d, cf * cg);
    }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f, const SkeinContext& ctx) {
  if (f.n_out() != g.n_in())
    throw ArityMismatch("compose: inner arities differ (" + std::to_string(f.n_out()) + " vs " +
                        std::to_string(g.n_in()) + ")");
  Morphism out(f.n_in(), g.n_out());
  auto f_label = [](const Slot& s) {
    return s.kind == Slot::Out ? Slot::internal(2 * s.index) : s;
  };
  auto g_label = [](const Slot& s) {
    return s.kind == Slot::In ? Slot::internal(2 * s.index + 1) : s;
  };
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      Gluer gluer(ctx.seqs);
      for (const auto& comp : df.components) gluer.comps.push_back(relabel(comp, f_label));
      for (const auto& comp : dg.components) gluer.comps.push_back(relabel(comp, g_label));
      for (unsigned j = 1; j <= f.n_out(); ++j)
        gluer.glue(Slot::internal(2 * static_cast<int>(j)),
                   Slot::internal(2 * static_cast<int>(j) + 1));
      Diagram d;
      d.n_in = out.n_in();
      d.n_out = out.n_out();
      d.components = gluer.comps;
      d.sort_components();
      out.add_term(d, cf * cg * gluer.scalar);
    }
  return apply_quotients(std::move(out), ctx);
}

Morphism skein_reduce(const Morphism& f, const SkeinContext& ctx) {
  if (ctx.K == 0) return f;
  const unsigned M = static_cast<unsigned>(ctx.rec_coeffs.size());
  Morphism cur = f;
  for (;;) {
    bool changed = false;
    Morphism next(cur.n_in(), cur.n_out());
    for (const auto& [d, coeff] : cur.terms()) {
      size_t high = d.components.size();
      for (size_t i = 0; i < d.components.size(); ++i)
        if (d.components[i].genus >= ctx.K) {
          high = i;
          break;
        }
      if (high == d.components.size()) {
        next.add_term(d, coeff);
        continue;
      }
      changed = true;
      for (unsigned i = 1; i <= M; ++i) {
        Diagram repl = d;
        repl.components[high].genus -= i;
        Poly c = coeff * ctx.rec_coeffs[i - 1];
        if (i % 2 == 0) c = -c;
        next.add_term(repl, c);
      }
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

Poly trace(const Morphism& f, const SkeinContext& ctx) {
  if (f.n_in() != f.n_out()) throw ArityMismatch("trace of non-endomorphism");
  Poly total(0);
  for (const auto& [d, coeff] : f.terms()) {
    Gluer gluer(ctx.seqs);
    gluer.comps = d.components;
    for (unsigned i = 1; i <= f.n_in(); ++i)
      gluer.glue(Slot::in(static_cast<int>(i)), Slot::out(static_cast<int>(i)));
    if (!gluer.comps.empty()) throw std::logic_error("trace left an open component");
    total += coeff * gluer.scalar;
  }
  return total;
}

Poly bilinear_form(const Morphism& f, const Morphism& g, const SkeinContext& ctx) {
  if (f.n_in() != 0 || g.n_in() != 0 || f.n_out() != g.n_out())
    throw ArityMismatch("bilinear form needs two morphisms 0 -> m");
  // Reflecting the left argument does not change the normal-form data of its
  // components, so gluing target-to-target implements tr((-f) u g).
  auto f_label = [](const Slot& s) { return Slot::internal(2 * s.index); };
  auto g_label = [](const Slot& s) { return Slot::internal(2 * s.index + 1); };
  Poly total(0);
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      Gluer gluer(ctx.seqs);
      for (const auto& comp : df.components) gluer.comps.push_back(relabel(comp, f_label));
      for (const auto& comp : dg.components) gluer.comps.push_back(relabel(comp, g_label));
      for (unsigned i = 1; i <= f.n_out(); ++i)
        gluer.glue(Slot::internal(2 * static_cast<int>(i)),
                   Slot::internal(2 * static_cast<int>(i) + 1));
      if (!gluer.comps.empty()) throw std::logic_error("pairing left an open component");
      total += cf * cg * gluer.scalar;
    }
  return total;
}

Morphism handle_x(unsigned power) {
  Diagram d;
  d.n_in = 1;
  d.n_out = 1;
  d.components = {make_component(power, 0, {Slot::in(1), Slot::out(1)})};
  return Morphism(d);
}

Morphism cross_y(unsigned power) {
  Diagram d;
  d.n_in = 1;
  d.n_out = 1;
  d.components = {make_component(0, power, {Slot::in(1), Slot::out(1)})};
  return Morphism(d);
}

Morphism handle_sigma(const SkeinContext& ctx) {
  if (ctx.K == 0) throw std::invalid_argument("sigma needs a skein context (K >= 1)");
  Morphism sigma = handle_x(ctx.K);
  for (unsigned i = 1; i <= ctx.rec_coeffs.size(); ++i) {
    Poly c = ctx.rec_coeffs[i - 1];
    if (i % 2 == 1) c = -c;
    sigma += c * handle_x(ctx.K - i);
  }
  return sigma;
}

namespace {

Morphism genus_cross_endo(unsigned genus, unsigned crosscaps, bool mark) {
  Diagram d;
  d.n_in = 1;
  d.n_out = 1;
  SlotSet marks;
  if (mark) marks = {Slot::out(1)};
  d.components = {make_component(genus, crosscaps, {Slot::in(1), Slot::out(1)}, marks)};
  return Morphism(d);
}

Morphism split_endo(unsigned genus_out, unsigned cross_out, unsigned genus_in, unsigned cross_in) {
  // y^i x^m u eps x^n y^j: an in-cap and an out-cap, each with its own genus
  // and crosscap load.
  Diagram d;
  d.n_in = 1;
  d.n_out = 1;
  d.components = {make_component(genus_in, cross_in, {Slot::in(1)}),
                  make_component(genus_out, cross_out, {Slot::out(1)})};
  d.sort_components();
  return Morphism(d);
}

}  // namespace

bool is_negligible(const Morphism& f, const SkeinContext& ctx, unsigned genus_bound) {
  if (f.n_in() != 1 || f.n_out() != 1)
    throw ArityMismatch("negligibility test implemented for End(1)");
  SkeinContext view = SkeinContext::viewable(ctx.seqs);
  auto vanishes = [&](const Morphism& z) {
    return trace(compose(f, z, view), view).is_zero();
  };
  for (unsigned n = 0; n <= genus_bound; ++n) {
    for (unsigned i = 0; i <= 2; ++i)
      if (!vanishes(genus_cross_endo(n, i, false))) return false;
    if (!vanishes(genus_cross_endo(n, 0, true))) return false;
  }
  for (unsigned m = 0; m <= genus_bound; ++m)
    for (unsigned n = 0; n <= genus_bound; ++n)
      for (unsigned i = 0; i <= 2; ++i)
        for (unsigned j = 0; j <= 2; ++j)
          if (!vanishes(split_endo(m, i, n, j))) return false;
  return true;
}

std::string Diagram::to_json() const {
  nlohmann::json j;
  j["n_in"] = n_in;
  j["n_out"] = n_out;
  j["components"] = nlohmann::json::array();
  for (const auto& c : components) j["components"].push_back(nlohmann::json::parse(c.to_json()));
  return j.dump();
}

std::string Morphism::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : terms_) {
    nlohmann::json item;
    item["coeff"] = c.str();
    item["diagram"] = nlohmann::json::parse(d.to_json());
    arr.push_back(item);
  }
  nlohmann::json j;
  j["n_in"] = n_in_;
  j["n_out"] = n_out_;
  j["terms"] = arr;
  return j.dump();
}

Morphism Morphism::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Morphism out(j.at("n_in").get<unsigned>(), j.at("n_out").get<unsigned>());
  for (const auto& item : j.at("terms")) {
    const auto& dj = item.at("diagram");
    Diagram d;
    d.n_in = dj.at("n_in").get<unsigned>();
    d.n_out = dj.at("n_out").get<unsigned>();
    for (const auto& cj : dj.at("components"))
      d.components.push_back(SurfaceComponent::from_json(cj.dump()));
    for (auto& c : d.components) c = canonicalize(c);
    d.sort_components();
    if (!d.is_valid()) throw ParseError("invalid diagram in morphism JSON");
    out.add_term(d, Poly::parse(item.at("coeff").get<std::string>()));
  }
  return out;
}

namespace {

struct WordLexer {
  std::vector<std::string> tokens;
  size_t pos = 0;

  explicit WordLexer(const std::string& text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    };
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else if (ch == '(' || ch == ')' || ch == '|' || ch == '.') {
        flush();
        tokens.push_back(std::string(1, ch));
      } else {
        cur.push_back(ch);
      }
    }
    flush();
  }

  bool eof() const { return pos >= tokens.size(); }
  const std::string& peek() const {
    static const std::string kEnd = "";
    return eof() ? kEnd : tokens[pos];
  }
  std::string take() { return tokens[pos++]; }
};

Morphism parse_word_expr(WordLexer& lx, const SkeinContext& ctx);

Morphism parse_word_atom(WordLexer& lx, const SkeinContext& ctx) {
  if (lx.peek() == "(") {
    lx.take();
    Morphism inner = parse_word_expr(lx, ctx);
    if (lx.peek() != ")") throw ParseError("expected ')' in generator word");
    lx.take();
    return inner;
  }
  std::string name = lx.take();
  if (name == "id") return generator(Generator::Id);
  if (name == "m") return generator(Generator::M);
  if (name == "delta") return generator(Generator::Delta);
  if (name == "u") return generator(Generator::U);
  if (name == "eps") return generator(Generator::Eps);
  if (name == "tau") return generator(Generator::Tau);
  if (name == "phi") return generator(Generator::Phi);
  if (name == "theta") return generator(Generator::Theta);
  throw ParseError("unknown generator '" + name + "'");
}

Morphism parse_word_tensor(WordLexer& lx, const SkeinContext& ctx) {
  Morphism acc = parse_word_atom(lx, ctx);
  while (lx.peek() == "|") {
    lx.take();
    acc = tensor(acc, parse_word_atom(lx, ctx));
  }
  return acc;
}

Morphism parse_word_expr(WordLexer& lx, const SkeinContext& ctx) {
  Morphism acc = parse_word_tensor(lx, ctx);
  while (lx.peek() == ".") {
    lx.take();
    Morphism rhs = parse_word_tensor(lx, ctx);
    acc = compose(acc, rhs, ctx);
  }
  return acc;
}

}  // namespace

Morphism parse_generator_word(const std::string& text, const SkeinContext& ctx) {
  WordLexer lx(text);
  if (lx.eof()) throw ParseError("empty generator word");
  Morphism m = parse_word_expr(lx, ctx);
  if (!lx.eof()) throw ParseError("trailing tokens in generator word");
  return m;
}

}  // namespace ucob
