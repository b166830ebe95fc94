#include "kurepa/builder.hpp"

#include <algorithm>
#include <random>

namespace kurepa {

void validate_chain(const Chain& chain, const Config& cfg) {
  if (chain.conditions.empty()) throw malformed_error("chain is empty");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto viol = check_condition(chain.conditions[i], cfg);
    if (!viol.empty())
      throw malformed_error("chain stage " + std::to_string(i) +
                            " is invalid: " + viol.front().detail);
    if (i == 0) continue;
    if (chain.conditions[i].alpha <= chain.conditions[i - 1].alpha)
      throw malformed_error("chain alphas must strictly increase at stage " + std::to_string(i));
    auto w = leq(chain.conditions[i], chain.conditions[i - 1], cfg);
    if (!w.ok)
      throw malformed_error("chain breaks at stage " + std::to_string(i) + ": " + w.detail);
  }
}

Chain run_schedule(const Condition& seed, const std::vector<DenseTask>& tasks,
                   std::uint64_t rng_seed, const Config& cfg) {
  cfg.validate();
  {
    auto viol = check_condition(seed, cfg);
    if (!viol.empty()) throw malformed_error("invalid seed: " + viol.front().detail);
  }
  std::mt19937_64 rng(rng_seed);
  Chain chain;
  chain.conditions.push_back(seed);

  auto push = [&chain, &cfg](Condition next, std::size_t task_index) {
    auto viol = check_condition(next, cfg);
    if (!viol.empty())
      throw malformed_error("task " + std::to_string(task_index) +
                            " would produce an invalid condition: " + viol.front().detail);
    auto w = leq(next, chain.last(), cfg);
    if (!w.ok)
      throw malformed_error("task " + std::to_string(task_index) +
                            " breaks the chain: " + w.detail);
    chain.conditions.push_back(std::move(next));
  };

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const DenseTask& task = tasks[i];
    const Condition& cur = chain.last();
    try {
      switch (task.kind) {
        case TaskKind::absorb: {
          if (cur.g.count(task.label)) {
            // already on board: the requirement is met, produce the next
            // stage by a plain one-level extension
            push(extend_to(cur, cur.alpha + 1, cfg), i);
          } else {
            std::vector<NodeId> tops = cur.tree.at_level(cur.alpha);
            NodeId host = tops[static_cast<std::size_t>(rng() % tops.size())];
            push(absorb_label(cur, task.label, cfg, host), i);
          }
          break;
        }
        case TaskKind::raise: {
          push(amalgamate(chain.conditions, task.lambda, cfg), i);
          break;
        }
        case TaskKind::window: {
          if (task.lambda < 1 || !limit_like(task.lambda, cfg))
            throw malformed_error("window level must be limit-like");
          if (cur.alpha >= task.lambda)
            throw malformed_error("window level is not above the chain");
          if (cur.alpha < task.lambda - 1)
            push(extend_to(cur, task.lambda - 1, cfg), i);
          push(amalgamate(chain.conditions, task.lambda, cfg), i);
          break;
        }
      }
    } catch (const capacity_error&) {
      throw;
    } catch (const malformed_error& e) {
      throw malformed_error("task " + std::to_string(i) + " impossible: " + e.what());
    }
  }
  return chain;
}

GenericTree assemble(const Chain& chain, const Config& cfg) {
  validate_chain(chain, cfg);
  return assemble_lenient(chain);
}

GenericTree assemble_lenient(const Chain& chain) {
  if (chain.conditions.empty()) throw malformed_error("chain is empty");
  if (!chain.last().tree.structure_violations().empty())
    throw malformed_error("final stage tree is not representable");
  GenericTree gt;
  const Condition& last = chain.last();
  gt.tree = last.tree;
  gt.top = last.alpha;
  gt.f = last.f;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    gt.stage_of_level[chain.conditions[i].alpha] = i;
    for (const auto& [xi, node] : chain.conditions[i].g)
      gt.label_trace[xi].push_back({i, node});
  }
  return gt;
}

std::vector<NodeId> branch_of_label(const GenericTree& gt, Label xi) {
  auto it = gt.label_trace.find(xi);
  if (it == gt.label_trace.end() || it->second.empty())
    throw malformed_error("label " + std::to_string(xi) + " never appears in the chain");
  NodeId leaf = it->second.back().second;
  std::vector<NodeId> path;
  NodeId cur = leaf;
  path.push_back(cur);
  while (auto p = gt.tree.parent_of(cur)) {
    cur = *p;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::set<Level> stage_set_all(const Chain& chain) {
  std::set<Level> out;
  for (const auto& c : chain.conditions) out.insert(c.alpha);
  return out;
}

std::set<Level> stage_set_continuous(const Chain& chain) {
  std::set<Level> out;
  std::set<Label> seen;
  for (const auto& c : chain.conditions) {
    std::set<Label> dom;
    for (const auto& [xi, node] : c.g) {
      (void)node;
      dom.insert(xi);
    }
    if (dom == seen) out.insert(c.alpha);
    seen.insert(dom.begin(), dom.end());
  }
  return out;
}

}  // namespace kurepa
