#include "ucob/interp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ucob/errors.hpp"
#include "ucob/matrix.hpp"

namespace ucob {
namespace interp {

StHomElement f_image_xi(unsigned n, const MarkClass& cls) {
  if (n < 1) throw std::invalid_argument("f_image_xi needs n >= 1");
  if (cls.m != n) throw std::invalid_argument("mark class size does not match n");
  StHomElement out;
  out.n = n;
  StBasisElement e;
  e.blocks.push_back({});
  for (unsigned i = 1; i <= n; ++i) e.blocks[0].push_back(static_cast<int>(i));
  e.classes.push_back(cls);
  out.terms[e] = Poly(1);
  return out;
}

namespace {

struct BlockInfo {
  std::vector<int> slots;
  Decoration kind = Decoration::Xi;
  MarkClass cls;
};

// Classifies the components of a skein-reduced diagram 0 -> m.
std::vector<BlockInfo> classify(const Diagram& d) {
  if (d.n_in != 0) throw std::invalid_argument("functor images are defined on 0 -> m diagrams");
  std::vector<BlockInfo> out;
  for (const auto& comp : d.components) {
    if (comp.genus > 0) throw UnreducedGenus("component has unreduced genus");
    BlockInfo info;
    for (const Slot& s : comp.boundary) info.slots.push_back(s.index);
    if (comp.crosscaps == 0) {
      info.kind = Decoration::Xi;
      uint32_t subset = 0;
      for (size_t i = 0; i < comp.boundary.size(); ++i)
        if (slotset_contains(comp.marks, comp.boundary[i])) subset |= uint32_t{1} << i;
      info.cls = mark_class_of(static_cast<unsigned>(comp.boundary.size()), subset);
    } else {
      info.kind = comp.crosscaps == 1 ? Decoration::Theta : Decoration::ThetaTwo;
    }
    out.push_back(std::move(info));
  }
  return out;
}

}  // namespace

TripleImage f_image_diagram(const Diagram& d, Quotient quotient) {
  TripleImage out;
  out.m = d.n_out;
  std::vector<BlockInfo> blocks = classify(d);

  if (quotient == Quotient::OCob) {
    TargetKey key;
    for (const auto& b : blocks) {
      if (b.kind != Decoration::Xi) return out;  // theta = 0 in the orientable quotient
      key.push_back(TargetBlock{Summand::W, b.slots, b.cls});
    }
    std::sort(key.begin(), key.end());
    out.coords[key] = Poly(1);
    return out;
  }

  // Sum over pure-diagonal assignments of blocks to the three summands.
  const size_t nb = blocks.size();
  std::vector<Summand> choice(nb, Summand::W);
  std::function<void(size_t, Poly)> rec = [&](size_t i, Poly coeff) {
    if (i == nb) {
      TargetKey key;
      for (size_t b = 0; b < nb; ++b) {
        TargetBlock tb;
        tb.summand = choice[b];
        tb.slots = blocks[b].slots;
        if (choice[b] == Summand::W) tb.cls = blocks[b].cls;
        key.push_back(std::move(tb));
      }
      std::sort(key.begin(), key.end());
      auto it = out.coords.find(key);
      if (it == out.coords.end())
        out.coords.emplace(std::move(key), coeff);
      else
        it->second += coeff;
      return;
    }
    const BlockInfo& b = blocks[i];
    const unsigned k = static_cast<unsigned>(b.slots.size());
    for (Summand s : {Summand::W, Summand::P, Summand::M}) {
      Poly factor;
      switch (b.kind) {
        case Decoration::Xi:
          // delta_{J-bar} in the wreath summand, lambda^{k-1} in each Deligne
          // summand.
          factor = s == Summand::W ? Poly(1) : Poly::variable(Var::s, 2 * (k - 1));
          break;
        case Decoration::Theta:
          if (s == Summand::W) continue;
          factor = Poly::variable(Var::s, 2 * k - 1);
          if (s == Summand::M) factor = -factor;
          break;
        case Decoration::ThetaTwo:
          if (s == Summand::W) continue;
          factor = Poly::variable(Var::s, 2 * k);
          break;
      }
      choice[i] = s;
      rec(i + 1, coeff * factor);
    }
  };
  rec(0, Poly(1));
  return out;
}

size_t rank_of_images(const std::vector<Morphism>& family, Quotient quotient,
                      std::optional<Rational> sample_s) {
  std::map<TargetKey, size_t> columns;
  std::vector<std::map<TargetKey, Poly>> rows;
  for (const Morphism& f : family) {
    std::map<TargetKey, Poly> row;
    for (const auto& [d, coeff] : f.terms()) {
      TripleImage img = f_image_diagram(d, quotient);
      for (const auto& [key, val] : img.coords) {
        row[key] += coeff * val;
        columns.emplace(key, 0);
      }
    }
    rows.push_back(std::move(row));
  }
  size_t idx = 0;
  for (auto& [key, col] : columns) col = idx++;

  if (sample_s) {
    std::array<Rational, kNumVars> point{*sample_s, Rational(1), Rational(1), Rational(1),
                                         Rational(1)};
    RationalMatrix m(rows.size(), columns.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (const auto& [key, val] : rows[i]) m.at(i, columns[key]) = val.eval(point);
    return rank_rational(std::move(m));
  }
  PolyMatrix m(rows.size(), columns.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, val] : rows[i]) m.at(i, columns[key]) = val;
  return rank_poly(m);
}

unsigned long long target_hom_dim(unsigned m) {
  // multinomial(m; a, b, c) = C(m, a) * C(m - a, b)
  std::vector<std::vector<unsigned long long>> choose(m + 1,
                                                      std::vector<unsigned long long>(m + 1, 0));
  for (unsigned i = 0; i <= m; ++i) {
    choose[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  unsigned long long total = 0;
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; a + b <= m; ++b) {
      unsigned c = m - a - b;
      total += choose[m][a] * choose[m - a][b] * wreath::st_hom_dim(a) * bell_number(b) *
               bell_number(c);
    }
  return total;
}

}  // namespace interp
}  // namespace ucob
