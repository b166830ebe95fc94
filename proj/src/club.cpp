#include "kurepa/club.hpp"

#include <algorithm>

namespace kurepa {

bool Club::contains(Level l) const {
  return std::binary_search(levels.begin(), levels.end(), l);
}

namespace {

void require_sorted_subset(const std::vector<Level>& xs, const std::set<Level>& ambient,
                           const char* who) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] <= xs[i - 1])
      throw malformed_error(std::string(who) + " must be strictly ascending");
    if (!ambient.count(xs[i]))
      throw malformed_error(std::string(who) + " leaves the ambient stage set at " +
                            std::to_string(xs[i]));
  }
}

}  // namespace

bool club_leq(const ClubCondition& c1, const ClubCondition& c2, const std::set<Level>& ambient) {
  require_sorted_subset(c1.elems, ambient, "club condition");
  require_sorted_subset(c2.elems, ambient, "club condition");
  if (!std::includes(c1.elems.begin(), c1.elems.end(), c2.elems.begin(), c2.elems.end()))
    return false;
  if (c2.elems.empty()) return true;
  Level bound = c2.elems.back();
  for (Level l : c1.elems)
    if (l > bound) continue;
    else if (!std::binary_search(c2.elems.begin(), c2.elems.end(), l))
      return false;
  return true;
}

Club shoot_club(const std::set<Level>& S, const std::vector<Level>& targets) {
  if (S.empty()) throw malformed_error("cannot shoot a club through an empty stage set");
  ClubCondition c;
  c.elems.push_back(*S.begin());
  for (Level beta : targets) {
    if (beta > *S.rbegin())
      throw malformed_error("target " + std::to_string(beta) + " unreachable in the stage set");
    if (c.elems.back() >= beta) continue;
    auto it = S.lower_bound(beta);  // smallest element >= beta; above max(c) by the guard
    ClubCondition next = c;
    next.elems.push_back(*it);
    if (!club_leq(next, c, S)) throw malformed_error("club extension failed to end-extend");
    c = std::move(next);
  }
  return Club{c.elems};
}

Club limit_points(const std::set<Level>& S, const Config& cfg) {
  Club out;
  for (Level s : S) {
    Level l = s + 1;
    if (!limit_like(l, cfg)) continue;
    std::size_t below = 0;
    for (Level x : S) {
      if (x >= l) break;
      ++below;
    }
    if (below >= 2) out.levels.push_back(l);
  }
  return out;
}

}  // namespace kurepa
