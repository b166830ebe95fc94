#pragma once

#include <optional>
#include <set>
#include <vector>

#include "kurepa/types.hpp"

namespace kurepa {

struct TreeNode {
  NodeId id = 0;
  Level level = 0;
  std::optional<NodeId> parent;  // empty for the root

  bool operator==(const TreeNode&) const = default;
};

// Finite rooted tree with explicit 0-based levels and dense node ids
// (a tree with n nodes uses ids 0..n-1). Parents sit exactly one level
// below their children. Values are cheap to copy at this scale; the
// builders copy a tree and extend it, existing levels are never edited.
class Tree {
 public:
  Tree() = default;

  static Tree single_root();
  // Nodes must arrive with dense ids 0..n-1 in ascending order.
  static Tree from_nodes(const std::vector<TreeNode>& nodes);

  std::size_t size() const { return level_.size(); }
  bool empty() const { return level_.empty(); }
  bool has_node(NodeId x) const { return x < level_.size(); }

  Level level_of(NodeId x) const;
  std::optional<NodeId> parent_of(NodeId x) const;
  const std::vector<NodeId>& children_of(NodeId x) const;
  const std::vector<NodeId>& at_level(Level l) const;
  Level max_level() const;

  // Appends a node at the next free id and returns that id.
  NodeId add_node(Level level, std::optional<NodeId> parent);

  TreeNode node(NodeId x) const;
  std::vector<TreeNode> all_nodes() const;

  // Representation-level problems: dangling parent refs, level arithmetic,
  // parentless nodes off level 0, parented nodes on level 0.
  // Everything else (root count, arity, limit crossing) is normality.
  std::vector<std::string> structure_violations() const;
  bool structurally_valid() const { return structure_violations().empty(); }

  bool operator==(const Tree& o) const {
    return level_ == o.level_ && parent_ == o.parent_;
  }

 private:
  std::vector<Level> level_;
  std::vector<NodeId> parent_;  // npos_ for "no parent"
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> by_level_;

  static constexpr NodeId npos_ = 0xffffffffu;

  void require_node(NodeId x) const;
};

struct NormalityViolation {
  std::string rule;  // "structure", "top", "N1".."N4"
  NodeId node = 0;
  std::string detail;
};

struct DeskNormalityReport {
  bool ok = true;
  std::vector<NormalityViolation> violations;
};

// Tree order: x <= y iff x lies on the root path of y.
bool comparable(const Tree& t, NodeId x, NodeId y);
NodeId meet(const Tree& t, NodeId x, NodeId y);
bool is_antichain(const Tree& t, const std::vector<NodeId>& xs);

// All root-to-leaf paths whose leaf sits at the top level, ordered by leaf id.
std::vector<std::vector<NodeId>> branches(const Tree& t);

DeskNormalityReport check_desk_normal(const Tree& t, Level top, const Config& cfg);

// Node ids of t living on the given levels, ascending.
std::vector<NodeId> restrict_levels(const Tree& t, const std::set<Level>& levels);

// Ancestor of x at the given level (level <= level_of(x)).
NodeId ancestor_at(const Tree& t, NodeId x, Level level);

}  // namespace kurepa
