#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kurepa/prune.hpp"

namespace kurepa {

// sec2: work on the full tree restricted to continuous stage heights.
// sec3: prune first, with the club drawn from the limit points.
enum class Route { sec2, sec3 };

Route route_from_string(const std::string& s);
std::string to_string(Route r);

struct AntichainSample {
  std::size_t size = 0;
  bool injective = false;

  bool operator==(const AntichainSample&) const = default;
};

struct BuildReport {
  bool desk_normal = false;
  bool regressive_ok = false;
  std::uint32_t branch_count = 0;
  std::uint32_t labels_absorbed = 0;
  bool same_label_ok = false;
  bool origin_regressive_ok = false;
  bool uniqueness_ok = false;
  std::vector<AntichainSample> antichain_samples;

  bool all_ok() const;

  bool operator==(const BuildReport&) const = default;
};

// Every maximal antichain, by product recursion over subtrees; each
// result is re-verified (antichain + no possible extension).
std::vector<std::vector<NodeId>> enumerate_maximal_antichains(const Tree& t,
                                                              std::size_t node_cap = 20);

// Independent oracle: filter all node subsets. Tiny trees only.
std::vector<std::vector<NodeId>> maximal_antichains_subsets(const Tree& t,
                                                            std::size_t node_cap = 16);

struct CensusReport {
  std::uint32_t distinct_branches = 0;
  std::uint32_t target = 0;
  bool ok = false;
};

// Counts pairwise-distinct labelled branches; ok iff >= target.
CensusReport kurepa_census(const GenericTree& gt, std::uint32_t target);

struct RegressivityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks the union f-map at every limit-like level of the assembled
// tree: exact domain, strictly-below values, and the same-level meet
// separation rule.
RegressivityReport regressivity_check(const GenericTree& gt, const Config& cfg);

// Labels whose full trace below `lambda` sits weakly under x. Labels
// with no stage below lambda do not count.
std::vector<Label> witnesses_below(const Chain& chain, const Tree& tree, NodeId x, Level lambda);

BuildReport full_report(const Chain& chain, const GenericTree& gt, Route route, const Club& club,
                        const Config& cfg);

struct OracleSuiteReport {
  std::size_t trees_checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Exhaustively cross-checks meet/comparable/is_antichain/branches and
// both maximal-antichain enumerators against path-set arithmetic on
// every parent-coded tree with at most max_nodes nodes.
OracleSuiteReport oracle_agreement_suite(std::size_t max_nodes);

}  // namespace kurepa
