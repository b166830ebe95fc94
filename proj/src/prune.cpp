#include "kurepa/prune.hpp"

#include <algorithm>

namespace kurepa {

bool PrunedTree::contains(NodeId x) const {
  return std::binary_search(kept.begin(), kept.end(), x);
}

namespace {

// Index of the last stage strictly below `alpha`, if any.
std::optional<std::size_t> last_stage_below(const Chain& chain, Level alpha) {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain.conditions[i].alpha < alpha) out = i;
  return out;
}

// Does the whole trace of xi over stages 0..last lie (weakly) below x?
bool trace_below(const Chain& chain, const Tree& t, Label xi, std::size_t last, NodeId x) {
  bool seen = false;
  for (std::size_t j = 0; j <= last; ++j) {
    auto it = chain.conditions[j].g.find(xi);
    if (it == chain.conditions[j].g.end()) continue;
    seen = true;
    if (meet(t, x, it->second) != it->second) return false;
  }
  return seen;
}

}  // namespace

PrunedTree prune(const GenericTree& gt, const Chain& chain, const Club& C, const Config& cfg) {
  Club lp = limit_points(stage_set_all(chain), cfg);
  for (Level l : C.levels)
    if (!lp.contains(l))
      throw malformed_error("club level " + std::to_string(l) +
                            " is not a limit point of the stage heights");

  std::vector<bool> kept(gt.tree.size(), true);
  for (Level alpha : C.levels) {
    if (alpha > gt.top) continue;
    auto last = last_stage_below(chain, alpha);
    if (!last) continue;
    const auto& dom = chain.conditions[*last].g;
    for (NodeId x : gt.tree.at_level(alpha)) {
      if (!kept[x]) continue;
      bool witnessed = false;
      for (const auto& [xi, node] : dom) {
        (void)node;
        if (trace_below(chain, gt.tree, xi, *last, x)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) kept[x] = false;
    }
    // everything above alpha survives only under a kept level-alpha node
    for (Level l = alpha + 1; l <= gt.top; ++l)
      for (NodeId y : gt.tree.at_level(l)) {
        if (!kept[y]) continue;
        auto p = gt.tree.parent_of(y);
        if (!p || !kept[*p]) kept[y] = false;
      }
  }

  PrunedTree out;
  for (NodeId i = 0; i < gt.tree.size(); ++i)
    if (kept[i]) out.kept.push_back(i);
  return out;
}

std::map<Label, NodeId> g_alpha(const Chain& chain, const PrunedTree& pruned, Level alpha,
                                const Config& cfg) {
  (void)cfg;
  auto last = last_stage_below(chain, alpha);
  if (!last) throw malformed_error("no stage lies below level " + std::to_string(alpha));
  const Tree& t = chain.last().tree;
  std::map<Label, NodeId> out;
  for (const auto& [xi, node] : chain.conditions[*last].g) {
    (void)node;
    std::vector<NodeId> hits;
    for (NodeId x : t.at_level(alpha))
      if (pruned.contains(x) && trace_below(chain, t, xi, *last, x)) hits.push_back(x);
    if (hits.size() != 1)
      throw malformed_error("uniqueness violated: label " + std::to_string(xi) + " has " +
                            std::to_string(hits.size()) + " kept nodes at level " +
                            std::to_string(alpha));
    out[xi] = hits.front();
  }
  return out;
}

std::map<NodeId, OriginWitness> origin_map(const Chain& chain,
                                           const std::vector<NodeId>& domain_nodes,
                                           const std::map<NodeId, Label>& node_label) {
  std::map<NodeId, OriginWitness> out;
  for (NodeId x : domain_nodes) {
    auto lbl = node_label.find(x);
    if (lbl == node_label.end())
      throw malformed_error("unresolved label for node " + std::to_string(x));
    Label xi = lbl->second;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < chain.size() && !first; ++i)
      if (chain.conditions[i].g.count(xi)) first = i;
    if (!first)
      throw malformed_error("label " + std::to_string(xi) + " never appears in the chain");
    out[x] = OriginWitness{x, xi, *first, chain.conditions[*first].g.at(xi)};
  }
  return out;
}

ComparabilityReport same_label_comparability(const Chain& chain) {
  ComparabilityReport rep;
  const Tree& t = chain.last().tree;
  std::map<Label, std::vector<std::pair<std::size_t, NodeId>>> trace;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (const auto& [xi, node] : chain.conditions[i].g) trace[xi].push_back({i, node});
  for (const auto& [xi, nodes] : trace)
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        if (!comparable(t, nodes[a].second, nodes[b].second)) {
          rep.ok = false;
          rep.violations.push_back({xi, nodes[a].first, nodes[b].first, nodes[a].second,
                                    nodes[b].second});
        }
  return rep;
}

bool antichain_label_injectivity(const PrunedTree& pruned, const Chain& chain, const Club& C,
                                 const std::vector<NodeId>& xs, const Config& cfg) {
  const Tree& t = chain.last().tree;
  for (NodeId x : xs)
    if (!pruned.contains(x))
      throw malformed_error("node " + std::to_string(x) + " is not in the pruned tree");
  if (!is_antichain(t, xs)) throw malformed_error("input is not an antichain");

  std::map<Level, std::map<NodeId, Label>> label_at;  // club level -> node -> label
  for (Level l : C.levels) {
    auto g = g_alpha(chain, pruned, l, cfg);
    for (const auto& [xi, node] : g) label_at[l][node] = xi;
  }
  std::set<Label> seen;
  for (NodeId x : xs) {
    Level l = t.level_of(x);
    auto lv = label_at.find(l);
    if (lv == label_at.end()) continue;  // off the club levels
    auto it = lv->second.find(x);
    if (it == lv->second.end())
      throw malformed_error("kept node " + std::to_string(x) + " carries no label at level " +
                            std::to_string(l));
    if (!seen.insert(it->second).second) return false;
  }
  return true;
}

}  // namespace kurepa
