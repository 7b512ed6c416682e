#pragma once

#include <string>
#include <vector>

#include "ucob/poly.hpp"
#include "ucob/sequences.hpp"

namespace ucob {

// Boundary slot of a cobordism diagram.  "in" slots order before "out" slots;
// internal slots only exist transiently while gluing.
struct Slot {
  enum Kind : uint8_t { In = 0, Out = 1, Internal = 2 };
  Kind kind = Out;
  int index = 0;

  static Slot in(int i) { return Slot{In, i}; }
  static Slot out(int i) { return Slot{Out, i}; }
  static Slot internal(int i) { return Slot{Internal, i}; }

  friend bool operator==(const Slot& a, const Slot& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator!=(const Slot& a, const Slot& b) { return !(a == b); }
  friend bool operator<(const Slot& a, const Slot& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }

  std::string str() const;
  static Slot parse(const std::string& text);
};

// Sorted set of slots; the sets involved are tiny.
using SlotSet = std::vector<Slot>;

bool slotset_contains(const SlotSet& set, const Slot& s);
void slotset_insert(SlotSet& set, const Slot& s);
void slotset_erase(SlotSet& set, const Slot& s);
SlotSet slotset_union(const SlotSet& a, const SlotSet& b);
SlotSet slotset_complement(const SlotSet& universe, const SlotSet& sub);

// One connected piece of a cobordism in normal form: genus, crosscap count
// (0, 1 or 2 after normalization), its boundary slots, and the reversal-mark
// set.  Marks only live on orientable pieces and are defined up to
// complementation; the canonical representative avoids the minimal slot.
struct SurfaceComponent {
  unsigned genus = 0;
  unsigned crosscaps = 0;
  SlotSet boundary;
  SlotSet marks;

  friend bool operator==(const SurfaceComponent& a, const SurfaceComponent& b) {
    return a.genus == b.genus && a.crosscaps == b.crosscaps && a.boundary == b.boundary &&
           a.marks == b.marks;
  }
  friend bool operator<(const SurfaceComponent& a, const SurfaceComponent& b);

  std::string to_json() const;
  static SurfaceComponent from_json(const std::string& text);
};

// Reduces crosscaps via (c >= 3) -> (c - 2, genus + 1), clears marks on
// unorientable pieces, and replaces the mark set by its complement when it
// contains the minimal boundary slot.
SurfaceComponent canonicalize(SurfaceComponent c);

// Homeomorphism class of a closed connected surface: genus plus 0/1/2
// crosscaps after the same normalization.
struct ClosedSurfaceClass {
  unsigned genus = 0;
  unsigned crosscaps = 0;
};

ClosedSurfaceClass canonicalize(ClosedSurfaceClass c);

// alpha_g / beta_g / gamma_g according to the crosscap count.
LambdaFrac evaluate_closed(const ClosedSurfaceClass& cl, const SequenceTriple& seqs);

}  // namespace ucob
