#pragma once

#include <cstdint>
#include <vector>

#include "ucob/cobordism.hpp"

namespace ucob {

// Mark class J-bar in R_m: subsets of {1..m} modulo complementation, with the
// representative not containing 1.  rep is a bitmask over {2..m} (bit i-1 set
// iff i is in the representative).
struct MarkClass {
  unsigned m = 1;
  uint32_t rep = 0;

  friend bool operator==(const MarkClass& a, const MarkClass& b) {
    return a.m == b.m && a.rep == b.rep;
  }
  friend bool operator<(const MarkClass& a, const MarkClass& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.rep < b.rep;
  }
};

// The canonical class of an arbitrary subset (complement when it contains 1).
MarkClass mark_class_of(unsigned m, uint32_t subset);
// All 2^{m-1} classes in subset-lex order of their representative.
std::vector<MarkClass> all_mark_classes(unsigned m);

// Decorations of a partition block.
enum class Decoration : uint8_t { Xi = 0, Theta = 1, ThetaTwo = 2 };

struct BlockDecoration {
  Decoration kind = Decoration::Xi;
  MarkClass cls;  // meaningful only for Xi
};

struct DecoratedPartition {
  unsigned m = 0;
  std::vector<std::vector<int>> blocks;  // ordered by minimal element
  std::vector<BlockDecoration> decorations;
};

// All set partitions of {1..m} in restricted-growth-string order.
std::vector<std::vector<std::vector<int>>> set_partitions(unsigned m);

unsigned long long stirling2(unsigned n, unsigned k);
unsigned long long bell_number(unsigned n);

// xi^m_{J-bar, g}: single-component diagram 0 -> m of the given genus with the
// class's representative as its mark set.
Morphism xi(unsigned m, const MarkClass& cls, unsigned genus = 0);

// theta_m (one crosscap) and theta_m[2] (two crosscaps) on m circles.
Morphism theta_m(unsigned m, unsigned crosscaps);

// Realizes one decorated partition as a diagram 0 -> m.
Morphism realize(const DecoratedPartition& dp);

// The spanning family S_m (Xi decorations only) in deterministic order.
std::vector<Morphism> spanning_S(unsigned m);
std::vector<DecoratedPartition> spanning_S_decorated(unsigned m);

// The spanning family T_m (Xi, Theta and ThetaTwo decorations).
std::vector<Morphism> spanning_T(unsigned m);
std::vector<DecoratedPartition> spanning_T_decorated(unsigned m);

struct DimCounts {
  unsigned long long stirling_sum = 0;  // sum_l 2^{m-l} S(m,l) = |S_m|
  unsigned long long t_size = 0;        // sum over partitions of prod (2^{|b|-1}+2) = |T_m|
  unsigned long long bell = 0;
  unsigned long long lambda_top = 0;    // sum_{l<m} (m-l) 2^{m-l} S(m,l)
  unsigned long long alpha_top = 0;     // sum_l l 2^{m-l} S(m,l)
};
DimCounts dim_counts(unsigned m);

}  // namespace ucob
