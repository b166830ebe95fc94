#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "kurepa/condition.hpp"

namespace kurepa {

enum class TaskKind { absorb, raise, window };

// One dense requirement for the schedule runner to meet.
//   absorb(xi):  make xi labelled (a fresh one-level split, or a plain
//                one-level extension when xi is already on board)
//   raise(l):    amalgamate the chain so far at limit-like level l
//   window(l):   place a stage at level l-1, then amalgamate at l
struct DenseTask {
  TaskKind kind = TaskKind::absorb;
  Label label = 0;
  Level lambda = 0;

  static DenseTask absorb(Label xi) { return {TaskKind::absorb, xi, 0}; }
  static DenseTask raise(Level l) { return {TaskKind::raise, 0, l}; }
  static DenseTask window(Level l) { return {TaskKind::window, 0, l}; }

  bool operator==(const DenseTask&) const = default;
};

struct Schedule {
  std::vector<Label> seed_labels;
  std::vector<DenseTask> tasks;
  std::uint64_t rng_seed = 0;

  bool operator==(const Schedule&) const = default;
};

// Strictly descending run of conditions with strictly increasing alphas.
struct Chain {
  std::vector<Condition> conditions;

  const Condition& last() const { return conditions.back(); }
  std::size_t size() const { return conditions.size(); }

  bool operator==(const Chain&) const = default;
};

void validate_chain(const Chain& chain, const Config& cfg);

// The assembled union object of a chain: the final tree plus the stage
// bookkeeping the later passes need.
struct GenericTree {
  Tree tree;
  Level top = 0;
  std::map<Level, std::size_t> stage_of_level;  // stage height -> chain index
  std::map<Label, std::vector<std::pair<std::size_t, NodeId>>> label_trace;
  std::map<NodeId, NodeId> f;  // union f-map
};

// Runs the tasks left to right, one new stage per task (a window adds an
// extra padding stage when the chain is not yet at lambda-1). Every
// produced stage is validated and checked against its predecessor.
Chain run_schedule(const Condition& seed, const std::vector<DenseTask>& tasks,
                   std::uint64_t rng_seed, const Config& cfg);

GenericTree assemble(const Chain& chain, const Config& cfg);

// Same bookkeeping without the chain gate; for auditing passes that must
// still produce a report when the chain itself is the broken thing.
GenericTree assemble_lenient(const Chain& chain);

// Root path of the label's final node; the label must occur in the chain.
std::vector<NodeId> branch_of_label(const GenericTree& gt, Label xi);

// Heights of all stages.
std::set<Level> stage_set_all(const Chain& chain);

// Heights of stages whose label domain equals the union of all earlier
// domains (no label appeared at that stage).
std::set<Level> stage_set_continuous(const Chain& chain);

}  // namespace kurepa
