#include "ucob/spanning.hpp"

#include <stdexcept>

namespace ucob {

MarkClass mark_class_of(unsigned m, uint32_t subset) {
  uint32_t all = (m >= 32) ? ~uint32_t{0} : ((uint32_t{1} << m) - 1);
  if (subset & 1u) subset = all & ~subset;
  return MarkClass{m, subset};
}

std::vector<MarkClass> all_mark_classes(unsigned m) {
  std::vector<MarkClass> out;
  if (m == 0) return out;
  uint32_t count = uint32_t{1} << (m - 1);
  out.reserve(count);
  for (uint32_t r = 0; r < count; ++r) out.push_back(MarkClass{m, r << 1});
  return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(unsigned m) {
  std::vector<std::vector<std::vector<int>>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(m, 0);
  for (;;) {
    int nblocks = 0;
    for (unsigned i = 0; i < m; ++i) nblocks = std::max(nblocks, a[i] + 1);
    std::vector<std::vector<int>> blocks(nblocks);
    for (unsigned i = 0; i < m; ++i) blocks[a[i]].push_back(static_cast<int>(i + 1));
    out.push_back(std::move(blocks));
    // next RGS in lexicographic order
    int i = static_cast<int>(m) - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) break;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    for (unsigned j = i + 1; j < m; ++j) a[j] = 0;
  }
  return out;
}

unsigned long long stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  std::vector<std::vector<unsigned long long>> s(n + 1, std::vector<unsigned long long>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

unsigned long long bell_number(unsigned n) {
  unsigned long long total = 0;
  for (unsigned k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

Morphism xi(unsigned m, const MarkClass& cls, unsigned genus) {
  if (m < 1) throw std::invalid_argument("xi needs m >= 1");
  if (cls.m != m) throw std::invalid_argument("mark class size does not match m");
  Diagram d;
  d.n_out = m;
  SurfaceComponent c;
  c.genus = genus;
  for (unsigned i = 1; i <= m; ++i) {
    slotset_insert(c.boundary, Slot::out(static_cast<int>(i)));
    if (cls.rep & (uint32_t{1} << (i - 1))) slotset_insert(c.marks, Slot::out(static_cast<int>(i)));
  }
  d.components = {canonicalize(c)};
  return Morphism(d);
}

Morphism theta_m(unsigned m, unsigned crosscaps) {
  if (m < 1) throw std::invalid_argument("theta_m needs m >= 1");
  if (crosscaps != 1 && crosscaps != 2) throw std::invalid_argument("crosscaps must be 1 or 2");
  Diagram d;
  d.n_out = m;
  SurfaceComponent c;
  c.crosscaps = crosscaps;
  for (unsigned i = 1; i <= m; ++i) slotset_insert(c.boundary, Slot::out(static_cast<int>(i)));
  d.components = {canonicalize(c)};
  return Morphism(d);
}

Morphism realize(const DecoratedPartition& dp) {
  Diagram d;
  d.n_out = dp.m;
  for (size_t b = 0; b < dp.blocks.size(); ++b) {
    const auto& block = dp.blocks[b];
    const BlockDecoration& dec = dp.decorations[b];
    SurfaceComponent c;
    switch (dec.kind) {
      case Decoration::Xi:
        for (size_t i = 0; i < block.size(); ++i) {
          slotset_insert(c.boundary, Slot::out(block[i]));
          if (dec.cls.rep & (uint32_t{1} << i)) slotset_insert(c.marks, Slot::out(block[i]));
        }
        break;
      case Decoration::Theta:
      case Decoration::ThetaTwo:
        c.crosscaps = dec.kind == Decoration::Theta ? 1 : 2;
        for (int i : block) slotset_insert(c.boundary, Slot::out(i));
        break;
    }
    d.components.push_back(canonicalize(c));
  }
  d.sort_components();
  return Morphism(d);
}

namespace {

std::vector<DecoratedPartition> decorated_partitions(unsigned m, bool with_theta) {
  std::vector<DecoratedPartition> out;
  for (const auto& partition : set_partitions(m)) {
    // Per-block decoration choices, ordered Xi(classes) < Theta < ThetaTwo.
    std::vector<std::vector<BlockDecoration>> choices(partition.size());
    for (size_t b = 0; b < partition.size(); ++b) {
      unsigned size = static_cast<unsigned>(partition[b].size());
      for (const MarkClass& cls : all_mark_classes(size))
        choices[b].push_back(BlockDecoration{Decoration::Xi, cls});
      if (with_theta) {
        choices[b].push_back(BlockDecoration{Decoration::Theta, {}});
        choices[b].push_back(BlockDecoration{Decoration::ThetaTwo, {}});
      }
    }
    std::vector<size_t> idx(partition.size(), 0);
    for (;;) {
      DecoratedPartition dp;
      dp.m = m;
      dp.blocks = partition;
      for (size_t b = 0; b < partition.size(); ++b) dp.decorations.push_back(choices[b][idx[b]]);
      out.push_back(std::move(dp));
      size_t b = partition.size();
      while (b > 0) {
        --b;
        if (++idx[b] < choices[b].size()) break;
        idx[b] = 0;
        if (b == 0) {
          b = SIZE_MAX;
          break;
        }
      }
      if (b == SIZE_MAX || partition.empty()) break;
    }
  }
  return out;
}

std::vector<Morphism> realize_all(const std::vector<DecoratedPartition>& dps) {
  std::vector<Morphism> out;
  out.reserve(dps.size());
  for (const auto& dp : dps) out.push_back(realize(dp));
  return out;
}

}  // namespace

std::vector<DecoratedPartition> spanning_S_decorated(unsigned m) {
  if (m < 1) throw std::invalid_argument("spanning set needs m >= 1");
  return decorated_partitions(m, /*with_theta=*/false);
}

std::vector<DecoratedPartition> spanning_T_decorated(unsigned m) {
  if (m < 1) throw std::invalid_argument("spanning set needs m >= 1");
  return decorated_partitions(m, /*with_theta=*/true);
}

std::vector<Morphism> spanning_S(unsigned m) {
  return realize_all(spanning_S_decorated(m));
}

std::vector<Morphism> spanning_T(unsigned m) {
  return realize_all(spanning_T_decorated(m));
}

DimCounts dim_counts(unsigned m) {
  DimCounts out;
  out.bell = bell_number(m);
  if (m == 0) {
    out.stirling_sum = 1;
    out.t_size = 1;
    return out;
  }
  for (unsigned l = 1; l <= m; ++l) {
    unsigned long long base = (1ULL << (m - l)) * stirling2(m, l);
    out.stirling_sum += base;
    if (l < m) out.lambda_top += (m - l) * base;
    out.alpha_top += l * base;
  }
  for (const auto& partition : set_partitions(m)) {
    unsigned long long prod = 1;
    for (const auto& block : partition) prod *= (1ULL << (block.size() - 1)) + 2;
    out.t_size += prod;
  }
  return out;
}

}  // namespace ucob
