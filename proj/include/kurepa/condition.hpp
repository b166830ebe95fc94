#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kurepa/tree.hpp"
#include "kurepa/types.hpp"

namespace kurepa {

// One forcing condition: a finite tree of top level alpha, a labelling g
// putting the labels in bijection with the top level, and a regressive
// map f defined on every node at a limit-like level.
struct Condition {
  Tree tree;
  Level alpha = 0;
  std::map<Label, NodeId> g;   // label -> top-level node
  std::map<NodeId, NodeId> f;  // limit-like-level node -> strict ancestor

  bool operator==(const Condition&) const = default;
};

struct ClauseViolation {
  int clause = 0;  // 1..6
  std::string detail;
};

enum class OrderClause { end_extension, dom_growth, branch_coherence, f_growth };
const char* to_string(OrderClause c);

struct ExtensionWitness {
  bool ok = true;
  std::optional<OrderClause> failed_clause;
  std::string detail;
};

// Validity clauses, reported not thrown. Clause 1 covers the tree
// representation and the height budget; when it fires the remaining
// clauses are suppressed (they are meaningless on a broken tree).
std::vector<ClauseViolation> check_condition(const Condition& p, const Config& cfg);

// Does p extend q? Checks end-extension, label-domain growth, branch
// coherence and f-map growth, in that order; reports the first failure.
ExtensionWitness leq(const Condition& p, const Condition& q, const Config& cfg);

// Root-only condition carrying a single label.
Condition minimal_condition(Label xi);

// Seed for a schedule: one label sits on a bare root; two or more labels
// sit on that many children of the root.
Condition make_seed(const std::vector<Label>& labels, const Config& cfg);

// One-step extension absorbing a fresh label: alpha grows by one, every
// top node continues into a single child, and the chosen host top node
// receives one extra child carrying the new label. The next level must
// not be limit-like (a fresh label cannot cross a unique-crossing level).
Condition absorb_label(const Condition& p, Label xi, const Config& cfg,
                       std::optional<NodeId> host = std::nullopt);

// Single-file growth up to `target`: every branch is extended one child
// per level, f is filled in at each limit-like level crossed.
Condition extend_to(const Condition& p, Level target, const Config& cfg);

// Upper bound of a descending chain at an explicit limit-like level
// strictly above the chain.
Condition amalgamate(const std::vector<Condition>& chain, Level lambda, const Config& cfg);

// Least-effort common extension of two conditions, or nullopt when they
// are incompatible (trees not nested, f maps disagreeing, or a shared
// label sitting on incomparable nodes). Labels of the lower condition
// that the taller one lacks ride up to the top and are separated by a
// one-level split where two labels land on the same node.
std::optional<Condition> common_extension(const Condition& a, const Condition& b,
                                          const Config& cfg);

}  // namespace kurepa
