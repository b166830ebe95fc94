#include "kurepa/tree.hpp"

#include <algorithm>
#include <map>

namespace kurepa {

Tree Tree::single_root() {
  Tree t;
  t.add_node(0, std::nullopt);
  return t;
}

Tree Tree::from_nodes(const std::vector<TreeNode>& nodes) {
  Tree t;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != i)
      throw malformed_error("tree nodes must carry dense ascending ids 0..n-1");
    if (nodes[i].level > 1000000u)
      throw malformed_error("tree level out of representable range");
    t.add_node(nodes[i].level, nodes[i].parent);
  }
  return t;
}

NodeId Tree::add_node(Level level, std::optional<NodeId> parent) {
  NodeId id = static_cast<NodeId>(level_.size());
  level_.push_back(level);
  parent_.push_back(parent ? *parent : npos_);
  children_.emplace_back();
  if (parent && *parent < id) children_[*parent].push_back(id);
  if (by_level_.size() <= level) by_level_.resize(level + 1);
  by_level_[level].push_back(id);
  return id;
}

void Tree::require_node(NodeId x) const {
  if (!has_node(x)) throw malformed_error("no such node: " + std::to_string(x));
}

Level Tree::level_of(NodeId x) const {
  require_node(x);
  return level_[x];
}

std::optional<NodeId> Tree::parent_of(NodeId x) const {
  require_node(x);
  if (parent_[x] == npos_ || parent_[x] >= level_.size()) return std::nullopt;
  return parent_[x];
}

const std::vector<NodeId>& Tree::children_of(NodeId x) const {
  require_node(x);
  return children_[x];
}

const std::vector<NodeId>& Tree::at_level(Level l) const {
  static const std::vector<NodeId> empty;
  if (l >= by_level_.size()) return empty;
  return by_level_[l];
}

Level Tree::max_level() const {
  for (std::size_t l = by_level_.size(); l > 0; --l)
    if (!by_level_[l - 1].empty()) return static_cast<Level>(l - 1);
  return 0;
}

TreeNode Tree::node(NodeId x) const {
  require_node(x);
  TreeNode n;
  n.id = x;
  n.level = level_[x];
  if (parent_[x] != npos_) n.parent = parent_[x];
  return n;
}

std::vector<TreeNode> Tree::all_nodes() const {
  std::vector<TreeNode> out;
  out.reserve(size());
  for (NodeId i = 0; i < size(); ++i) {
    TreeNode n;
    n.id = i;
    n.level = level_[i];
    if (parent_[i] != npos_) n.parent = parent_[i];  // raw value even if dangling
    out.push_back(n);
  }
  return out;
}

std::vector<std::string> Tree::structure_violations() const {
  std::vector<std::string> out;
  if (empty()) {
    out.push_back("tree has no nodes");
    return out;
  }
  for (NodeId i = 0; i < size(); ++i) {
    if (parent_[i] == npos_) {
      if (level_[i] != 0)
        out.push_back("node " + std::to_string(i) + " has no parent but level " +
                      std::to_string(level_[i]));
      continue;
    }
    if (parent_[i] >= size()) {
      out.push_back("node " + std::to_string(i) + " points at absent parent " +
                    std::to_string(parent_[i]));
      continue;
    }
    if (level_[i] == 0) {
      out.push_back("node " + std::to_string(i) + " sits on level 0 but has a parent");
      continue;
    }
    if (level_[parent_[i]] + 1 != level_[i])
      out.push_back("node " + std::to_string(i) + " at level " + std::to_string(level_[i]) +
                    " has parent at level " + std::to_string(level_[parent_[i]]));
  }
  return out;
}

NodeId ancestor_at(const Tree& t, NodeId x, Level level) {
  Level lx = t.level_of(x);
  if (level > lx) throw malformed_error("ancestor_at: target level above the node");
  NodeId cur = x;
  std::size_t guard = t.size() + 1;
  while (t.level_of(cur) > level) {
    auto p = t.parent_of(cur);
    if (!p || guard-- == 0) throw malformed_error("ancestor_at: broken parent chain");
    cur = *p;
  }
  return cur;
}

NodeId meet(const Tree& t, NodeId x, NodeId y) {
  Level lx = t.level_of(x), ly = t.level_of(y);
  NodeId a = x, b = y;
  if (lx > ly) a = ancestor_at(t, a, ly);
  if (ly > lx) b = ancestor_at(t, b, lx);
  std::size_t guard = t.size() + 1;
  while (a != b) {
    auto pa = t.parent_of(a), pb = t.parent_of(b);
    if (!pa || !pb || guard-- == 0)
      throw malformed_error("meet: nodes do not share a root");
    a = *pa;
    b = *pb;
  }
  return a;
}

bool comparable(const Tree& t, NodeId x, NodeId y) {
  Level lx = t.level_of(x), ly = t.level_of(y);
  if (lx == ly) return x == y;
  NodeId deep = lx > ly ? x : y;
  NodeId low = lx > ly ? y : x;
  return ancestor_at(t, deep, std::min(lx, ly)) == low;
}

bool is_antichain(const Tree& t, const std::vector<NodeId>& xs) {
  std::vector<NodeId> s(xs);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (comparable(t, s[i], s[j])) return false;
  return true;
}

std::vector<std::vector<NodeId>> branches(const Tree& t) {
  std::vector<std::vector<NodeId>> out;
  if (t.empty()) return out;
  Level top = t.max_level();
  for (NodeId leaf : t.at_level(top)) {
    std::vector<NodeId> path;
    NodeId cur = leaf;
    path.push_back(cur);
    while (auto p = t.parent_of(cur)) {
      cur = *p;
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  return out;
}

DeskNormalityReport check_desk_normal(const Tree& t, Level top, const Config& cfg) {
  DeskNormalityReport rep;
  auto add = [&rep](std::string rule, NodeId node, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({std::move(rule), node, std::move(detail)});
  };

  for (const auto& s : t.structure_violations()) add("structure", 0, s);
  if (!rep.ok) return rep;

  // N1: a unique root.
  std::vector<NodeId> roots;
  for (NodeId i = 0; i < t.size(); ++i)
    if (!t.parent_of(i)) roots.push_back(i);
  for (std::size_t i = 1; i < roots.size(); ++i)
    add("N1", roots[i], "extra root");
  if (roots.empty()) {
    add("N1", 0, "no root");
    return rep;
  }

  for (NodeId i = 0; i < t.size(); ++i) {
    Level l = t.level_of(i);
    if (l > top) add("top", i, "node above the declared top level");
    // N2: everything below the top keeps growing.
    if (l < top && t.children_of(i).empty())
      add("N2", i, "node below top has no child");
  }

  // N3: splitting is enforced at the root. Deeper levels grow single-file
  // so that the top level can stay in bijection with the labels.
  if (top >= 1 && !limit_like(1, cfg) &&
      t.children_of(roots[0]).size() < cfg.split_arity)
    add("N3", roots[0],
        "root has " + std::to_string(t.children_of(roots[0]).size()) +
            " children, needs " + std::to_string(cfg.split_arity));

  // N4: at most one child crosses into a limit-like level per parent.
  for (Level l = 1; l <= top; ++l) {
    if (!limit_like(l, cfg)) continue;
    std::map<NodeId, NodeId> seen;  // parent -> first crossing child
    for (NodeId x : t.at_level(l)) {
      auto p = t.parent_of(x);
      if (!p) continue;  // structure already vetted
      auto [it, fresh] = seen.emplace(*p, x);
      if (!fresh)
        add("N4", x, "second child of " + std::to_string(*p) +
                         " crossing into limit-like level " + std::to_string(l));
    }
  }
  return rep;
}

std::vector<NodeId> restrict_levels(const Tree& t, const std::set<Level>& levels) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < t.size(); ++i)
    if (levels.count(t.level_of(i))) out.push_back(i);
  return out;
}

}  // namespace kurepa
