#include "kurepa/condition.hpp"

#include <algorithm>
#include <set>

namespace kurepa {

const char* to_string(OrderClause c) {
  switch (c) {
    case OrderClause::end_extension: return "end-extension";
    case OrderClause::dom_growth: return "dom-growth";
    case OrderClause::branch_coherence: return "branch-coherence";
    case OrderClause::f_growth: return "f-growth";
  }
  return "?";
}

std::vector<ClauseViolation> check_condition(const Condition& p, const Config& cfg) {
  std::vector<ClauseViolation> out;
  auto add = [&out](int clause, std::string detail) {
    out.push_back({clause, std::move(detail)});
  };

  // clause 1: the node set forms a representable tree within the height budget
  for (const auto& s : p.tree.structure_violations()) add(1, s);
  if (p.alpha >= cfg.max_height)
    add(1, "alpha " + std::to_string(p.alpha) + " breaks the height budget");
  for (NodeId i = 0; i < p.tree.size(); ++i)
    if (p.tree.has_node(i) && p.tree.level_of(i) >= cfg.max_height) {
      add(1, "node " + std::to_string(i) + " breaks the height budget");
      break;
    }
  if (!out.empty()) return out;

  // clause 2: desk-normal with top level alpha
  if (p.tree.max_level() != p.alpha)
    add(2, "top level " + std::to_string(p.tree.max_level()) + " differs from alpha " +
               std::to_string(p.alpha));
  auto normal = check_desk_normal(p.tree, p.alpha, cfg);
  for (const auto& v : normal.violations)
    add(2, v.rule + " at node " + std::to_string(v.node) + ": " + v.detail);

  // clause 3: g is an injection onto the top level
  std::set<NodeId> g_targets;
  for (const auto& [xi, x] : p.g) {
    if (xi >= cfg.label_max) add(3, "label " + std::to_string(xi) + " out of range");
    if (!p.tree.has_node(x)) {
      add(3, "label " + std::to_string(xi) + " names absent node " + std::to_string(x));
      continue;
    }
    if (p.tree.level_of(x) != p.alpha)
      add(3, "label " + std::to_string(xi) + " sits at level " +
                 std::to_string(p.tree.level_of(x)) + ", not at the top");
    if (!g_targets.insert(x).second)
      add(3, "node " + std::to_string(x) + " carries two labels");
  }
  for (NodeId x : p.tree.at_level(p.alpha))
    if (!g_targets.count(x)) add(3, "top node " + std::to_string(x) + " carries no label");

  // clause 4: f is defined on exactly the limit-like-level nodes
  std::set<NodeId> limit_nodes;
  for (NodeId i = 0; i < p.tree.size(); ++i)
    if (limit_like(p.tree.level_of(i), cfg)) limit_nodes.insert(i);
  for (const auto& [x, fx] : p.f) {
    (void)fx;
    if (!p.tree.has_node(x)) {
      add(4, "f defined on absent node " + std::to_string(x));
      continue;
    }
    if (!limit_nodes.count(x))
      add(4, "f defined on node " + std::to_string(x) + " off the limit-like levels");
  }
  for (NodeId x : limit_nodes)
    if (!p.f.count(x)) add(4, "f missing at limit-like node " + std::to_string(x));

  // clause 5: f is regressive along the tree order
  for (const auto& [x, fx] : p.f) {
    if (!p.tree.has_node(x)) continue;
    if (!p.tree.has_node(fx)) {
      add(5, "f(" + std::to_string(x) + ") names absent node " + std::to_string(fx));
      continue;
    }
    if (fx == x || !(comparable(p.tree, fx, x) && p.tree.level_of(fx) < p.tree.level_of(x)))
      add(5, "f(" + std::to_string(x) + ") = " + std::to_string(fx) +
                 " does not lie strictly below " + std::to_string(x));
  }

  // clause 6: same-level pairs push one value above the meet
  std::vector<NodeId> fdom;
  for (const auto& [x, fx] : p.f) {
    (void)fx;
    if (p.tree.has_node(x) && p.f.count(x) && p.tree.has_node(p.f.at(x))) fdom.push_back(x);
  }
  for (std::size_t i = 0; i < fdom.size(); ++i)
    for (std::size_t j = i + 1; j < fdom.size(); ++j) {
      NodeId x = fdom[i], y = fdom[j];
      if (p.tree.level_of(x) != p.tree.level_of(y)) continue;
      if (!comparable(p.tree, x, y)) {
        NodeId m = meet(p.tree, x, y);
        bool x_above = comparable(p.tree, m, p.f.at(x)) && p.tree.level_of(p.f.at(x)) > p.tree.level_of(m);
        bool y_above = comparable(p.tree, m, p.f.at(y)) && p.tree.level_of(p.f.at(y)) > p.tree.level_of(m);
        if (!x_above && !y_above)
          add(6, "neither f(" + std::to_string(x) + ") nor f(" + std::to_string(y) +
                     ") clears their meet " + std::to_string(m));
      }
    }
  return out;
}

ExtensionWitness leq(const Condition& p, const Condition& q, const Config& cfg) {
  (void)cfg;
  auto fail = [](OrderClause c, std::string detail) {
    return ExtensionWitness{false, c, std::move(detail)};
  };

  // end-extension: q's tree is an id-for-id initial segment of p's
  if (p.alpha < q.alpha)
    return fail(OrderClause::end_extension, "alpha shrank");
  if (p.tree.size() < q.tree.size())
    return fail(OrderClause::end_extension, "tree shrank");
  for (NodeId i = 0; i < q.tree.size(); ++i) {
    if (p.tree.level_of(i) != q.tree.level_of(i) || p.tree.parent_of(i) != q.tree.parent_of(i))
      return fail(OrderClause::end_extension, "node " + std::to_string(i) + " was rewritten");
  }
  for (NodeId i = static_cast<NodeId>(q.tree.size()); i < p.tree.size(); ++i)
    if (p.tree.level_of(i) <= q.alpha)
      return fail(OrderClause::end_extension,
                  "node " + std::to_string(i) + " was inserted at an old level");

  for (const auto& [xi, y] : q.g) {
    if (!p.g.count(xi))
      return fail(OrderClause::dom_growth, "label " + std::to_string(xi) + " was dropped");
    (void)y;
  }

  for (const auto& [xi, y] : q.g) {
    NodeId z = p.g.at(xi);
    if (meet(p.tree, z, y) != y)
      return fail(OrderClause::branch_coherence,
                  "label " + std::to_string(xi) + " moved off its branch");
  }

  for (const auto& [x, v] : q.f) {
    auto it = p.f.find(x);
    if (it == p.f.end() || it->second != v)
      return fail(OrderClause::f_growth, "f was rewritten at node " + std::to_string(x));
  }
  return {};
}

Condition minimal_condition(Label xi) {
  Condition p;
  p.tree = Tree::single_root();
  p.alpha = 0;
  p.g[xi] = 0;
  return p;
}

Condition make_seed(const std::vector<Label>& labels, const Config& cfg) {
  std::vector<Label> ls(labels);
  std::sort(ls.begin(), ls.end());
  if (std::unique(ls.begin(), ls.end()) != ls.end())
    throw malformed_error("seed labels must be distinct");
  if (ls.empty()) throw malformed_error("seed needs at least one label");
  if (ls.back() >= cfg.label_max)
    throw malformed_error("seed label " + std::to_string(ls.back()) + " out of range");
  if (ls.size() == 1) return minimal_condition(ls[0]);
  if (ls.size() < cfg.split_arity)
    throw malformed_error("seed with several labels needs at least split_arity of them");
  if (ls.size() > cfg.max_width) throw capacity_error("width exhausted by seed");
  Condition p;
  p.tree = Tree::single_root();
  p.alpha = 1;
  for (Label l : ls) p.g[l] = p.tree.add_node(1, 0);
  return p;
}

namespace {

Level prev_limit_boundary(Level l, const Config& cfg) {
  // Largest limit-like level strictly below l, or 0 when there is none.
  if (l <= cfg.limit_modulus) return 0;
  Level candidate = ((l - 1) / cfg.limit_modulus) * cfg.limit_modulus;
  return candidate;
}

// f-values for the freshly created nodes at limit-like level l: anchor at
// the previous limit-like boundary, then push the later node of every
// clashing same-level pair strictly above the pair's meet.
void assign_f_at_level(Condition& p, Level l, const Config& cfg) {
  Level anchor = prev_limit_boundary(l, cfg);
  std::vector<NodeId> xs = p.tree.at_level(l);
  std::sort(xs.begin(), xs.end());
  for (NodeId x : xs) p.f[x] = ancestor_at(p.tree, x, anchor);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      NodeId x = xs[i], y = xs[j];
      NodeId m = meet(p.tree, x, y);
      Level lm = p.tree.level_of(m);
      bool x_ok = p.tree.level_of(p.f.at(x)) > lm;
      bool y_ok = p.tree.level_of(p.f.at(y)) > lm;
      if (!x_ok && !y_ok) p.f[y] = ancestor_at(p.tree, y, lm + 1);
    }
}

}  // namespace

Condition absorb_label(const Condition& p, Label xi, const Config& cfg,
                       std::optional<NodeId> host) {
  if (p.g.count(xi)) throw malformed_error("label in use: " + std::to_string(xi));
  if (xi >= cfg.label_max) throw malformed_error("label out of range: " + std::to_string(xi));
  Level next = p.alpha + 1;
  if (next >= cfg.max_height) throw capacity_error("height exhausted");
  if (limit_like(next, cfg))
    throw malformed_error("next level " + std::to_string(next) +
                          " is limit-like; amalgamate across it instead");
  std::vector<NodeId> tops = p.tree.at_level(p.alpha);
  if (tops.size() + 1 > cfg.max_width) throw capacity_error("width exhausted");
  NodeId h = host.value_or(tops.empty() ? 0 : tops.front());
  if (std::find(tops.begin(), tops.end(), h) == tops.end())
    throw malformed_error("host node is not on the top level");

  Condition q = p;
  std::map<NodeId, NodeId> lift;  // old top node -> its continuation child
  for (NodeId t : tops) lift[t] = q.tree.add_node(next, t);
  NodeId fresh = q.tree.add_node(next, h);
  for (auto& [label, node] : q.g) node = lift.at(node);
  q.g[xi] = fresh;
  q.alpha = next;
  return q;
}

Condition extend_to(const Condition& p, Level target, const Config& cfg) {
  if (target <= p.alpha) throw malformed_error("extension target is not above the tree");
  if (target >= cfg.max_height) throw capacity_error("height exhausted");
  if (p.tree.at_level(p.alpha).size() > cfg.max_width) throw capacity_error("width exhausted");
  Condition q = p;
  for (Level l = p.alpha + 1; l <= target; ++l) {
    std::vector<NodeId> tops = q.tree.at_level(l - 1);
    std::map<NodeId, NodeId> lift;
    for (NodeId t : tops) lift[t] = q.tree.add_node(l, t);
    for (auto& [label, node] : q.g) node = lift.at(node);
    q.alpha = l;
    if (limit_like(l, cfg)) assign_f_at_level(q, l, cfg);
  }
  return q;
}

Condition amalgamate(const std::vector<Condition>& chain, Level lambda, const Config& cfg) {
  if (chain.empty()) throw malformed_error("amalgamate needs a nonempty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto w = leq(chain[i + 1], chain[i], cfg);
    if (!w.ok)
      throw malformed_error("not a descending chain at position " + std::to_string(i + 1) +
                            ": " + w.detail);
  }
  if (!limit_like(lambda, cfg))
    throw malformed_error("lambda " + std::to_string(lambda) + " is not limit-like");
  if (lambda <= chain.back().alpha)
    throw malformed_error("lambda " + std::to_string(lambda) + " is not above the chain");
  return extend_to(chain.back(), lambda, cfg);
}

namespace {

bool is_initial_segment(const Tree& tall, const Tree& low, Level low_alpha) {
  if (tall.size() < low.size()) return false;
  for (NodeId i = 0; i < low.size(); ++i)
    if (tall.level_of(i) != low.level_of(i) || tall.parent_of(i) != low.parent_of(i))
      return false;
  for (NodeId i = static_cast<NodeId>(low.size()); i < tall.size(); ++i)
    if (tall.level_of(i) <= low_alpha) return false;
  return true;
}

NodeId descend_to_level(const Tree& t, NodeId x, Level target) {
  NodeId cur = x;
  while (t.level_of(cur) < target) {
    const auto& cs = t.children_of(cur);
    if (cs.empty()) throw malformed_error("branch ends before the top level");
    cur = cs.front();
  }
  return cur;
}

}  // namespace

std::optional<Condition> common_extension(const Condition& a, const Condition& b,
                                          const Config& cfg) {
  const Condition& tall = (a.alpha >= b.alpha) ? a : b;
  const Condition& low = (a.alpha >= b.alpha) ? b : a;

  if (!is_initial_segment(tall.tree, low.tree, low.alpha)) return std::nullopt;
  for (const auto& [x, v] : low.f) {
    auto it = tall.f.find(x);
    if (it == tall.f.end() || it->second != v) return std::nullopt;
  }
  for (const auto& [xi, y] : low.g) {
    auto it = tall.g.find(xi);
    if (it != tall.g.end() && meet(tall.tree, it->second, y) != y) return std::nullopt;
  }

  std::vector<Label> extra;
  for (const auto& [xi, y] : low.g) {
    (void)y;
    if (!tall.g.count(xi)) extra.push_back(xi);
  }
  if (extra.empty()) return tall;

  Condition r = tall;
  if (limit_like(r.alpha + 1, cfg)) r = extend_to(r, r.alpha + 1, cfg);
  Level split = r.alpha + 1;
  if (split >= cfg.max_height) throw capacity_error("height exhausted");
  if (tall.g.size() + extra.size() > cfg.max_width) throw capacity_error("width exhausted");

  // Group every wanted label under its top-level anchor.
  std::map<NodeId, std::vector<Label>> groups;
  for (const auto& [xi, z] : r.g) groups[z].push_back(xi);
  for (Label xi : extra)
    groups[descend_to_level(r.tree, low.g.at(xi), r.alpha)].push_back(xi);

  std::map<Label, NodeId> next_g;
  std::vector<NodeId> tops = r.tree.at_level(r.alpha);
  std::sort(tops.begin(), tops.end());
  for (NodeId t : tops) {
    auto it = groups.find(t);
    if (it == groups.end()) continue;
    std::sort(it->second.begin(), it->second.end());
    for (Label xi : it->second) next_g[xi] = r.tree.add_node(split, t);
  }
  r.g = std::move(next_g);
  r.alpha = split;
  return r;
}

}  // namespace kurepa
