#include "ucob/surface.hpp"

#include <algorithm>

#include "ucob/errors.hpp"
#include <json.hpp>

namespace ucob {

std::string Slot::str() const {
  switch (kind) {
    case In:
      return "in:" + std::to_string(index);
    case Out:
      return "out:" + std::to_string(index);
    default:
      return "x:" + std::to_string(index);
  }
}

Slot Slot::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("bad slot '" + text + "'");
  std::string side = text.substr(0, colon);
  int idx = std::stoi(text.substr(colon + 1));
  if (side == "in") return Slot::in(idx);
  if (side == "out") return Slot::out(idx);
  throw ParseError("bad slot side '" + side + "'");
}

bool slotset_contains(const SlotSet& set, const Slot& s) {
  return std::binary_search(set.begin(), set.end(), s);
}

void slotset_insert(SlotSet& set, const Slot& s) {
  auto it = std::lower_bound(set.begin(), set.end(), s);
  if (it == set.end() || *it != s) set.insert(it, s);
}

void slotset_erase(SlotSet& set, const Slot& s) {
  auto it = std::lower_bound(set.begin(), set.end(), s);
  if (it != set.end() && *it == s) set.erase(it);
}

SlotSet slotset_union(const SlotSet& a, const SlotSet& b) {
  SlotSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SlotSet slotset_complement(const SlotSet& universe, const SlotSet& sub) {
  SlotSet out;
  std::set_difference(universe.begin(), universe.end(), sub.begin(), sub.end(),
                      std::back_inserter(out));
  return out;
}

bool operator<(const SurfaceComponent& a, const SurfaceComponent& b) {
  if (a.boundary != b.boundary) return a.boundary < b.boundary;
  if (a.genus != b.genus) return a.genus < b.genus;
  if (a.crosscaps != b.crosscaps) return a.crosscaps < b.crosscaps;
  return a.marks < b.marks;
}

SurfaceComponent canonicalize(SurfaceComponent c) {
  while (c.crosscaps >= 3) {
    c.crosscaps -= 2;
    c.genus += 1;
  }
  if (c.crosscaps >= 1) {
    c.marks.clear();
  } else if (!c.boundary.empty() && !c.marks.empty()) {
    if (slotset_contains(c.marks, c.boundary.front()))
      c.marks = slotset_complement(c.boundary, c.marks);
  }
  return c;
}

ClosedSurfaceClass canonicalize(ClosedSurfaceClass c) {
  while (c.crosscaps >= 3) {
    c.crosscaps -= 2;
    c.genus += 1;
  }
  return c;
}

LambdaFrac evaluate_closed(const ClosedSurfaceClass& cl, const SequenceTriple& seqs) {
  ClosedSurfaceClass c = canonicalize(cl);
  switch (c.crosscaps) {
    case 0:
      return LambdaFrac(term(seqs.alpha, c.genus));
    case 1:
      return LambdaFrac(term(seqs.beta, c.genus));
    default:
      return LambdaFrac(term(seqs.gamma, c.genus));
  }
}

std::string SurfaceComponent::to_json() const {
  nlohmann::json j;
  j["genus"] = genus;
  j["crosscaps"] = crosscaps;
  j["boundary"] = nlohmann::json::array();
  for (const Slot& s : boundary) j["boundary"].push_back(s.str());
  j["marks"] = nlohmann::json::array();
  for (const Slot& s : marks) j["marks"].push_back(s.str());
  return j.dump();
}

SurfaceComponent SurfaceComponent::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SurfaceComponent c;
  c.genus = j.at("genus").get<unsigned>();
  c.crosscaps = j.at("crosscaps").get<unsigned>();
  for (const auto& s : j.at("boundary")) slotset_insert(c.boundary, Slot::parse(s.get<std::string>()));
  if (j.contains("marks"))
    for (const auto& s : j.at("marks")) slotset_insert(c.marks, Slot::parse(s.get<std::string>()));
  return c;
}

}  // namespace ucob
