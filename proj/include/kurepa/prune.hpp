#pragma once

#include <map>
#include <vector>

#include "kurepa/builder.hpp"
#include "kurepa/club.hpp"

namespace kurepa {

// The surviving node set of a pruning pass; always downward closed.
struct PrunedTree {
  std::vector<NodeId> kept;  // ascending

  bool contains(NodeId x) const;
  bool operator==(const PrunedTree&) const = default;
};

struct OriginWitness {
  NodeId node = 0;
  Label label = 0;
  std::size_t first_stage = 0;
  NodeId origin_node = 0;
};

// Level-by-level pruning driven by the club: at each club level keep the
// nodes dominating the complete below-level trace of some label that is
// already on board below that level, then keep above only descendants of
// kept nodes. The club must consist of limit points of the stage heights.
PrunedTree prune(const GenericTree& gt, const Chain& chain, const Club& C, const Config& cfg);

// The unique kept node at the club level above each on-board label's
// trace. Bijective onto the kept nodes of that level on well-built input.
std::map<Label, NodeId> g_alpha(const Chain& chain, const PrunedTree& pruned, Level alpha,
                                const Config& cfg);

// For each node in the domain, the first-stage position of its label.
std::map<NodeId, OriginWitness> origin_map(const Chain& chain,
                                           const std::vector<NodeId>& domain_nodes,
                                           const std::map<NodeId, Label>& node_label);

struct ComparabilityViolation {
  Label label = 0;
  std::size_t stage_i = 0, stage_j = 0;
  NodeId node_i = 0, node_j = 0;
};

struct ComparabilityReport {
  bool ok = true;
  std::vector<ComparabilityViolation> violations;
};

// Any two stage positions of one label must be comparable in the tree.
ComparabilityReport same_label_comparability(const Chain& chain);

// On an antichain of the pruned tree, distinct members at club levels
// must carry distinct labels. Throws on non-antichain input.
bool antichain_label_injectivity(const PrunedTree& pruned, const Chain& chain, const Club& C,
                                 const std::vector<NodeId>& xs, const Config& cfg);

}  // namespace kurepa
