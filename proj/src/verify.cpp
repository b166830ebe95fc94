#include "kurepa/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace kurepa {

Route route_from_string(const std::string& s) {
  if (s == "sec2") return Route::sec2;
  if (s == "sec3") return Route::sec3;
  throw malformed_error("unknown route: " + s);
}

std::string to_string(Route r) { return r == Route::sec2 ? "sec2" : "sec3"; }

bool BuildReport::all_ok() const {
  bool inj = true;
  for (const auto& s : antichain_samples) inj = inj && s.injective;
  return desk_normal && regressive_ok && same_label_ok && origin_regressive_ok &&
         uniqueness_ok && inj && branch_count >= labels_absorbed;
}

namespace {

void cross_product(const std::vector<std::vector<std::vector<NodeId>>>& parts, std::size_t i,
                   std::vector<NodeId>& acc, std::vector<std::vector<NodeId>>& out) {
  if (i == parts.size()) {
    out.push_back(acc);
    return;
  }
  for (const auto& choice : parts[i]) {
    std::size_t mark = acc.size();
    acc.insert(acc.end(), choice.begin(), choice.end());
    cross_product(parts, i + 1, acc, out);
    acc.resize(mark);
  }
}

// Maximal antichains of the subtree rooted at v: either {v}, or one
// maximal antichain from every child subtree.
std::vector<std::vector<NodeId>> antichains_under(const Tree& t, NodeId v) {
  std::vector<std::vector<NodeId>> out;
  out.push_back({v});
  const auto& kids = t.children_of(v);
  if (kids.empty()) return out;
  std::vector<std::vector<std::vector<NodeId>>> parts;
  for (NodeId c : kids) parts.push_back(antichains_under(t, c));
  std::vector<NodeId> acc;
  cross_product(parts, 0, acc, out);
  return out;
}

void normalize(std::vector<std::vector<NodeId>>& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
}

bool maximal_in(const Tree& t, const std::vector<NodeId>& xs) {
  std::set<NodeId> in(xs.begin(), xs.end());
  for (NodeId y = 0; y < t.size(); ++y) {
    if (in.count(y)) continue;
    bool clashes = false;
    for (NodeId x : xs)
      if (comparable(t, x, y)) {
        clashes = true;
        break;
      }
    if (!clashes) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<NodeId>> enumerate_maximal_antichains(const Tree& t,
                                                              std::size_t node_cap) {
  if (t.size() > node_cap)
    throw capacity_error("instance too large: " + std::to_string(t.size()) + " nodes over cap " +
                         std::to_string(node_cap));
  auto structural = t.structure_violations();
  if (!structural.empty()) throw malformed_error("broken tree: " + structural.front());

  std::vector<std::vector<std::vector<NodeId>>> parts;
  for (NodeId i = 0; i < t.size(); ++i)
    if (!t.parent_of(i)) parts.push_back(antichains_under(t, i));
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> acc;
  cross_product(parts, 0, acc, out);
  normalize(out);

  for (const auto& xs : out)
    if (!is_antichain(t, xs) || !maximal_in(t, xs))
      throw malformed_error("enumeration produced a non-maximal or comparable set");
  return out;
}

std::vector<std::vector<NodeId>> maximal_antichains_subsets(const Tree& t, std::size_t node_cap) {
  if (t.size() > node_cap || t.size() > 31)
    throw capacity_error("instance too large: " + std::to_string(t.size()) + " nodes over cap " +
                         std::to_string(node_cap));
  std::vector<std::vector<NodeId>> out;
  for (std::uint32_t mask = 1; mask < (1u << t.size()); ++mask) {
    std::vector<NodeId> xs;
    for (NodeId i = 0; i < t.size(); ++i)
      if (mask & (1u << i)) xs.push_back(i);
    if (is_antichain(t, xs) && maximal_in(t, xs)) out.push_back(xs);
  }
  normalize(out);
  return out;
}

CensusReport kurepa_census(const GenericTree& gt, std::uint32_t target) {
  std::set<std::vector<NodeId>> distinct;
  for (const auto& [xi, trace] : gt.label_trace) {
    (void)trace;
    distinct.insert(branch_of_label(gt, xi));
  }
  CensusReport rep;
  rep.distinct_branches = static_cast<std::uint32_t>(distinct.size());
  rep.target = target;
  rep.ok = rep.distinct_branches >= target;
  return rep;
}

RegressivityReport regressivity_check(const GenericTree& gt, const Config& cfg) {
  RegressivityReport rep;
  auto bad = [&rep](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };

  for (const auto& [x, fx] : gt.f) {
    (void)fx;
    if (!gt.tree.has_node(x)) {
      bad("f names absent node " + std::to_string(x));
      continue;
    }
    if (!limit_like(gt.tree.level_of(x), cfg))
      bad("f defined off the limit-like levels at node " + std::to_string(x));
  }

  for (Level l = 1; l <= gt.top; ++l) {
    if (!limit_like(l, cfg)) continue;
    const auto& xs = gt.tree.at_level(l);
    for (NodeId x : xs) {
      auto it = gt.f.find(x);
      if (it == gt.f.end()) {
        bad("node " + std::to_string(x) + " at limit-like level " + std::to_string(l) +
            " has no f-value");
        continue;
      }
      NodeId fx = it->second;
      if (!gt.tree.has_node(fx) || fx == x ||
          !(comparable(gt.tree, fx, x) && gt.tree.level_of(fx) < l))
        bad("f(" + std::to_string(x) + ") does not lie strictly below it");
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        NodeId x = xs[i], y = xs[j];
        auto fx = gt.f.find(x), fy = gt.f.find(y);
        if (fx == gt.f.end() || fy == gt.f.end()) continue;
        if (!gt.tree.has_node(fx->second) || !gt.tree.has_node(fy->second)) continue;
        if (comparable(gt.tree, x, y)) continue;
        NodeId m = meet(gt.tree, x, y);
        Level lm = gt.tree.level_of(m);
        bool x_above = comparable(gt.tree, m, fx->second) && gt.tree.level_of(fx->second) > lm;
        bool y_above = comparable(gt.tree, m, fy->second) && gt.tree.level_of(fy->second) > lm;
        if (!x_above && !y_above)
          bad("neither f(" + std::to_string(x) + ") nor f(" + std::to_string(y) +
              ") clears their meet at level " + std::to_string(lm));
      }
  }
  return rep;
}

std::vector<Label> witnesses_below(const Chain& chain, const Tree& tree, NodeId x, Level lambda) {
  Level lx = tree.level_of(x);
  std::map<Label, bool> under;  // label -> whole below-lambda trace under x
  for (const auto& c : chain.conditions) {
    if (c.alpha >= lambda) continue;
    for (const auto& [xi, node] : c.g) {
      bool ok = tree.has_node(node) && tree.level_of(node) <= lx && comparable(tree, node, x);
      auto [it, fresh] = under.emplace(xi, ok);
      if (!fresh) it->second = it->second && ok;
    }
  }
  std::vector<Label> out;
  for (const auto& [xi, ok] : under)
    if (ok) out.push_back(xi);
  return out;
}

BuildReport full_report(const Chain& chain, const GenericTree& gt, Route route, const Club& club,
                        const Config& cfg) {
  if (chain.conditions.empty()) throw malformed_error("cannot report on an empty chain");
  const Condition& last = chain.last();
  if (!(last.tree == gt.tree) || last.alpha != gt.top)
    throw malformed_error("assembled tree does not match the chain");

  PrunedTree kept;
  if (route == Route::sec3) {
    kept = prune(gt, chain, club, cfg);
  } else {
    auto cont = stage_set_continuous(chain);
    for (Level l : club.levels)
      if (!cont.count(l))
        throw malformed_error("club level " + std::to_string(l) +
                              " is not a continuous stage height");
    for (NodeId i = 0; i < gt.tree.size(); ++i) kept.kept.push_back(i);
  }
  Club usable;  // the club clipped to the realized tree
  for (Level l : club.levels)
    if (l <= gt.top) usable.levels.push_back(l);

  BuildReport rep;
  rep.desk_normal = check_desk_normal(gt.tree, gt.top, cfg).ok;
  rep.regressive_ok = regressivity_check(gt, cfg).ok;
  rep.branch_count = static_cast<std::uint32_t>(branches(gt.tree).size());
  rep.labels_absorbed = static_cast<std::uint32_t>(gt.label_trace.size());
  rep.same_label_ok = same_label_comparability(chain).ok;

  rep.uniqueness_ok = true;
  std::vector<NodeId> domain;
  std::map<NodeId, Label> node_label;
  for (Level l : usable.levels)
    for (NodeId x : gt.tree.at_level(l)) {
      if (!kept.contains(x)) continue;
      auto w = witnesses_below(chain, gt.tree, x, l);
      if (w.size() != 1) {
        rep.uniqueness_ok = false;
        continue;
      }
      domain.push_back(x);
      node_label[x] = w.front();
    }

  rep.origin_regressive_ok = true;
  if (!domain.empty()) {
    auto om = origin_map(chain, domain, node_label);
    for (const auto& [x, wit] : om) {
      bool below = gt.tree.has_node(wit.origin_node) && wit.origin_node != x &&
                   comparable(gt.tree, wit.origin_node, x) &&
                   gt.tree.level_of(wit.origin_node) < gt.tree.level_of(x);
      if (!below) rep.origin_regressive_ok = false;
    }
  }

  for (Level l : usable.levels) {
    std::vector<NodeId> xs;
    for (NodeId x : gt.tree.at_level(l))
      if (kept.contains(x)) xs.push_back(x);
    if (xs.empty()) continue;
    AntichainSample s;
    s.size = xs.size();
    s.injective = antichain_label_injectivity(kept, chain, usable, xs, cfg);
    rep.antichain_samples.push_back(s);
  }
  if (usable.levels.size() >= 2) {
    std::vector<NodeId> mixed;
    for (auto it = usable.levels.rbegin(); it != usable.levels.rend(); ++it)
      for (NodeId x : gt.tree.at_level(*it)) {
        if (!kept.contains(x)) continue;
        bool free = true;
        for (NodeId y : mixed)
          if (comparable(gt.tree, x, y)) {
            free = false;
            break;
          }
        if (free) mixed.push_back(x);
      }
    if (mixed.size() >= 2) {
      AntichainSample s;
      s.size = mixed.size();
      s.injective = antichain_label_injectivity(kept, chain, usable, mixed, cfg);
      rep.antichain_samples.push_back(s);
    }
  }
  return rep;
}

namespace {

struct PathOracle {
  std::vector<std::vector<NodeId>> path;  // root..self, per node

  bool o_comparable(NodeId x, NodeId y) const {
    const auto& px = path[x];
    const auto& py = path[y];
    const auto& shorter = px.size() <= py.size() ? px : py;
    const auto& longer = px.size() <= py.size() ? py : px;
    NodeId tip = shorter.back();
    return std::find(longer.begin(), longer.end(), tip) != longer.end();
  }

  NodeId o_meet(NodeId x, NodeId y) const {
    const auto& px = path[x];
    const auto& py = path[y];
    NodeId m = px[0];
    for (std::size_t i = 0; i < px.size() && i < py.size() && px[i] == py[i]; ++i) m = px[i];
    return m;
  }
};

bool check_one_tree(const std::vector<NodeId>& parents, std::string& failure) {
  std::size_t n = parents.size() + 1;
  std::vector<TreeNode> nodes(n);
  std::vector<Level> level(n, 0);
  nodes[0] = TreeNode{0, 0, std::nullopt};
  for (std::size_t i = 1; i < n; ++i) {
    level[i] = level[parents[i - 1]] + 1;
    nodes[i] = TreeNode{static_cast<NodeId>(i), level[i], parents[i - 1]};
  }
  Tree t = Tree::from_nodes(nodes);

  PathOracle po;
  po.path.resize(n);
  po.path[0] = {0};
  for (std::size_t i = 1; i < n; ++i) {
    po.path[i] = po.path[parents[i - 1]];
    po.path[i].push_back(static_cast<NodeId>(i));
  }

  std::ostringstream tag;
  tag << "parents [";
  for (std::size_t i = 0; i < parents.size(); ++i) tag << (i ? "," : "") << parents[i];
  tag << "]";

  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = 0; y < n; ++y) {
      if (meet(t, x, y) != po.o_meet(x, y)) {
        failure = tag.str() + ": meet disagrees at (" + std::to_string(x) + "," +
                  std::to_string(y) + ")";
        return false;
      }
      if (comparable(t, x, y) != po.o_comparable(x, y)) {
        failure = tag.str() + ": comparable disagrees at (" + std::to_string(x) + "," +
                  std::to_string(y) + ")";
        return false;
      }
    }

  Level top = *std::max_element(level.begin(), level.end());
  std::vector<std::vector<NodeId>> expect;
  for (NodeId i = 0; i < n; ++i)
    if (level[i] == top) expect.push_back(po.path[i]);
  if (branches(t) != expect) {
    failure = tag.str() + ": branches disagree";
    return false;
  }

  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<NodeId> xs;
    for (NodeId i = 0; i < n; ++i)
      if (mask & (1u << i)) xs.push_back(i);
    bool oracle = true;
    for (std::size_t i = 0; i < xs.size() && oracle; ++i)
      for (std::size_t j = i + 1; j < xs.size() && oracle; ++j)
        if (po.o_comparable(xs[i], xs[j])) oracle = false;
    if (is_antichain(t, xs) != oracle) {
      failure = tag.str() + ": is_antichain disagrees on mask " + std::to_string(mask);
      return false;
    }
  }

  auto fast = enumerate_maximal_antichains(t, 20);
  auto slow = maximal_antichains_subsets(t, 16);
  if (fast != slow) {
    failure = tag.str() + ": maximal-antichain enumerators disagree (" +
              std::to_string(fast.size()) + " vs " + std::to_string(slow.size()) + ")";
    return false;
  }
  return true;
}

void all_parent_sequences(std::size_t n, std::vector<NodeId>& cur,
                          const std::function<void(const std::vector<NodeId>&)>& fn) {
  if (cur.size() + 1 == n) {
    fn(cur);
    return;
  }
  std::size_t next = cur.size() + 1;  // node index being attached
  for (NodeId p = 0; p < next; ++p) {
    cur.push_back(p);
    all_parent_sequences(n, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

OracleSuiteReport oracle_agreement_suite(std::size_t max_nodes) {
  OracleSuiteReport rep;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<NodeId> cur;
    all_parent_sequences(n, cur, [&rep](const std::vector<NodeId>& parents) {
      ++rep.trees_checked;
      std::string failure;
      if (!check_one_tree(parents, failure)) {
        ++rep.failures;
        if (rep.first_failure.empty()) rep.first_failure = failure;
      }
    });
  }
  return rep;
}

}  // namespace kurepa
