#pragma once

#include <set>
#include <vector>

#include "kurepa/types.hpp"

namespace kurepa {

// A finite approximation to a club subset of the stage heights.
struct ClubCondition {
  std::vector<Level> elems;  // strictly ascending

  bool operator==(const ClubCondition&) const = default;
};

struct Club {
  std::vector<Level> levels;  // strictly ascending

  bool contains(Level l) const;
  bool operator==(const Club&) const = default;
};

// End-extension order: c1 extends c2 when c1 contains c2 and every new
// element lies strictly above max(c2). Both must live inside the ambient.
bool club_leq(const ClubCondition& c1, const ClubCondition& c2, const std::set<Level>& ambient);

// Generic club shooting: starting from {min(S)}, meet "exceed beta" for
// each target by end-extending with the smallest usable element of S.
Club shoot_club(const std::set<Level>& S, const std::vector<Level>& targets);

// { l : l limit-like, l-1 in S, and S has at least two elements below l }.
Club limit_points(const std::set<Level>& S, const Config& cfg);

}  // namespace kurepa
