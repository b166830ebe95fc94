#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kurepa/tree.hpp"

// Independent re-derivations used as test oracles. Everything here works
// from raw parent pointers on purpose — no calls into the functions under
// test.
namespace kurepa::oracle {

inline std::vector<NodeId> path_of(const Tree& t, NodeId x) {
  std::vector<NodeId> out{x};
  NodeId cur = x;
  while (auto p = t.parent_of(cur)) {
    cur = *p;
    out.push_back(cur);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline bool comparable(const Tree& t, NodeId x, NodeId y) {
  auto px = path_of(t, x);
  auto py = path_of(t, y);
  return std::find(px.begin(), px.end(), y) != px.end() ||
         std::find(py.begin(), py.end(), x) != py.end();
}

inline NodeId meet(const Tree& t, NodeId x, NodeId y) {
  auto px = path_of(t, x);
  auto py = path_of(t, y);
  NodeId m = px[0];
  for (std::size_t i = 0; i < px.size() && i < py.size() && px[i] == py[i]; ++i) m = px[i];
  return m;
}

// Complete binary tree with `height` levels below the leaves.
inline Tree cbt(unsigned height) {
  Tree t = Tree::single_root();
  std::vector<NodeId> frontier{0};
  for (unsigned l = 1; l <= height; ++l) {
    std::vector<NodeId> next;
    for (NodeId p : frontier) {
      next.push_back(t.add_node(l, p));
      next.push_back(t.add_node(l, p));
    }
    frontier = std::move(next);
  }
  return t;
}

// Independent count of maximal antichains in the complete binary tree:
// M(0) = 1 and M(h+1) = 1 + M(h)^2.
inline std::uint64_t cbt_antichain_count(unsigned height) {
  std::uint64_t m = 1;
  for (unsigned h = 0; h < height; ++h) m = 1 + m * m;
  return m;
}

}  // namespace kurepa::oracle
