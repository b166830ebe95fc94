#pragma once

#include <optional>
#include <set>

#include "kurepa/builder.hpp"

// Ten targeted mutations, one per validity clause and one per order
// clause. Each helper returns true iff the mutation flips exactly the
// check it aims at: the untouched input is fully green, and the mutated
// input trips precisely the targeted clause.
namespace kurepa::mut {

inline Chain base_chain() {
  Config cfg;
  std::vector<DenseTask> tasks = {DenseTask::absorb(2), DenseTask::raise(4),
                                  DenseTask::absorb(0)};
  return run_schedule(make_seed({0, 1}, cfg), tasks, 11, cfg);
}

inline std::set<int> clause_set(const Condition& p, const Config& cfg) {
  std::set<int> out;
  for (const auto& v : check_condition(p, cfg)) out.insert(v.clause);
  return out;
}

inline Tree with_parent(const Tree& t, NodeId node, std::optional<NodeId> parent) {
  auto nodes = t.all_nodes();
  nodes[node].parent = parent;
  return Tree::from_nodes(nodes);
}

// clause 1: an orphan node breaks the tree representation
inline bool m1_orphan(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty()) return false;
  Condition p = base;
  p.tree.add_node(3, std::nullopt);
  return clause_set(p, cfg) == std::set<int>{1};
}

// clause 2: a root that never splits is not desk-normal
inline bool m2_single_file_root(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty()) return false;
  Condition p;
  p.tree = Tree::single_root();
  NodeId a = p.tree.add_node(1, 0);
  NodeId b = p.tree.add_node(2, a);
  p.alpha = 2;
  p.g[0] = b;
  return clause_set(p, cfg) == std::set<int>{2};
}

// clause 3: dropping one label leaves a top node uncovered
inline bool m3_uncovered_top(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty()) return false;
  Condition p = base;
  p.g.erase(p.g.begin());
  return clause_set(p, cfg) == std::set<int>{3};
}

// clause 4: a limit-like-level node with no f-value
inline bool m4_missing_f(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty() || base.f.empty()) return false;
  Condition p = base;
  p.f.erase(p.f.begin());
  return clause_set(p, cfg) == std::set<int>{4};
}

// clause 5: f pointing at the node itself is not regressive
inline bool m5_fixed_point(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty() || base.f.empty()) return false;
  Condition p = base;
  NodeId x = p.f.begin()->first;
  p.f[x] = x;
  return clause_set(p, cfg) == std::set<int>{5};
}

// clause 6: both values of a clashing same-level pair dropped onto
// their meet
inline bool m6_meet_collision(const Condition& base, const Config& cfg) {
  if (!clause_set(base, cfg).empty()) return false;
  Condition p = base;
  for (auto i = p.f.begin(); i != p.f.end(); ++i)
    for (auto j = std::next(i); j != p.f.end(); ++j) {
      NodeId x = i->first, y = j->first;
      if (p.tree.level_of(x) != p.tree.level_of(y)) continue;
      if (comparable(p.tree, x, y)) continue;
      NodeId m = meet(p.tree, x, y);
      if (p.tree.level_of(m) == 0) continue;  // keep the other pairs quiet
      p.f[x] = m;
      p.f[y] = m;
      return clause_set(p, cfg) == std::set<int>{6};
    }
  return false;
}

// order clause 1: rewriting an old node breaks end-extension
inline bool m7_rewritten_node(const Chain& chain, const Config& cfg) {
  const Condition& q = chain.conditions[1];
  const Condition& p = chain.conditions[2];
  if (!leq(p, q, cfg).ok) return false;
  NodeId victim = 0;
  bool found = false;
  for (NodeId i = 0; i < q.tree.size() && !found; ++i)
    if (q.tree.level_of(i) == 2) {
      victim = i;
      found = true;
    }
  if (!found) return false;
  auto old_parent = q.tree.parent_of(victim);
  std::optional<NodeId> other;
  for (NodeId i = 0; i < q.tree.size(); ++i)
    if (q.tree.level_of(i) == 1 && (!old_parent || i != *old_parent)) other = i;
  if (!other) return false;
  Condition p7 = p;
  p7.tree = with_parent(p.tree, victim, other);
  auto w = leq(p7, q, cfg);
  return !w.ok && w.failed_clause == OrderClause::end_extension;
}

// order clause 2: dropping an inherited label breaks domain growth
inline bool m8_dropped_label(const Chain& chain, const Config& cfg) {
  const Condition& q = chain.conditions[1];
  const Condition& p = chain.conditions[2];
  if (!leq(p, q, cfg).ok) return false;
  Condition p8 = p;
  p8.g.erase(q.g.begin()->first);
  auto w = leq(p8, q, cfg);
  return !w.ok && w.failed_clause == OrderClause::dom_growth;
}

// order clause 3: swapping two labels moves both off their branches
inline bool m9_swapped_labels(const Chain& chain, const Config& cfg) {
  const Condition& q = chain.conditions[1];
  const Condition& p = chain.conditions[2];
  if (!leq(p, q, cfg).ok || q.g.size() < 2) return false;
  Condition p9 = p;
  Label a = q.g.begin()->first;
  Label b = std::next(q.g.begin())->first;
  std::swap(p9.g.at(a), p9.g.at(b));
  auto w = leq(p9, q, cfg);
  return !w.ok && w.failed_clause == OrderClause::branch_coherence;
}

// order clause 4: rewriting an inherited f-value breaks f-growth
inline bool m10_rewritten_f(const Chain& chain, const Config& cfg) {
  const Condition& q = chain.conditions[2];
  const Condition& p = chain.conditions[3];
  if (!leq(p, q, cfg).ok || q.f.empty()) return false;
  Condition p10 = p;
  NodeId x = q.f.begin()->first;
  NodeId replacement = ancestor_at(p.tree, x, p.tree.level_of(x) - 1);
  if (replacement == q.f.at(x)) return false;
  p10.f[x] = replacement;
  auto w = leq(p10, q, cfg);
  return !w.ok && w.failed_clause == OrderClause::f_growth;
}

// Runs all ten; returns the number that behaved as designed.
inline int run_all(const Config& cfg) {
  Chain chain = base_chain();
  const Condition& last = chain.last();
  int ok = 0;
  ok += m1_orphan(last, cfg);
  ok += m2_single_file_root(last, cfg);
  ok += m3_uncovered_top(last, cfg);
  ok += m4_missing_f(last, cfg);
  ok += m5_fixed_point(last, cfg);
  ok += m6_meet_collision(last, cfg);
  ok += m7_rewritten_node(chain, cfg);
  ok += m8_dropped_label(chain, cfg);
  ok += m9_swapped_labels(chain, cfg);
  ok += m10_rewritten_f(chain, cfg);
  return ok;
}

}  // namespace kurepa::mut
